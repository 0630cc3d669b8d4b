// zenobath command line: eta / spectrum / dynamics / zeno / oracle /
// reproduce <preset>, driven by flat key=value configs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zenobath/errors.hpp"
#include "zenobath/presets.hpp"
#include "zenobath/run.hpp"

namespace {

namespace fs = std::filesystem;
using namespace zenobath;

struct CliArgs {
    std::string config_path;
    std::string out_path;
    std::string format;
    unsigned jobs = 0;  // 0 = keep config value
    std::vector<std::string> overrides;
    std::string preset;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig resolve_config(const CliArgs& args, Task task) {
    RunConfig config;
    if (!args.config_path.empty()) config = parse_config(read_file(args.config_path));
    config.task = task;
    if (!args.preset.empty()) config.preset = args.preset;
    for (const std::string& kv : args.overrides) apply_override(config, kv);
    if (!args.out_path.empty()) config.out_path = args.out_path;
    if (!args.format.empty()) apply_override(config, "output.format=" + args.format);
    if (args.jobs > 0) config.jobs = args.jobs;
    return config;
}

std::string render(const ResultEnvelope& e, OutputFormat format) {
    return format == OutputFormat::Csv ? to_csv(e) : to_json(e);
}

void emit(const std::vector<ResultEnvelope>& results, const RunConfig& config) {
    const std::string ext = config.format == OutputFormat::Csv ? ".csv" : ".json";
    if (config.out_path.empty()) {
        for (const auto& e : results) std::cout << render(e, config.format);
        return;
    }
    const fs::path out(config.out_path);
    const bool as_dir = results.size() > 1 || fs::is_directory(out) ||
                        (!out.string().empty() && out.string().back() == '/');
    if (as_dir) {
        fs::create_directories(out);
        for (const auto& e : results) {
            std::ofstream f(out / (e.label + ext), std::ios::binary);
            f << render(e, config.format);
        }
    } else {
        if (out.has_parent_path()) fs::create_directories(out.parent_path());
        std::ofstream f(out, std::ios::binary);
        f << render(results.front(), config.format);
    }
}

void warn_to_stderr(const std::vector<ResultEnvelope>& results) {
    for (const auto& e : results) {
        for (const auto& w : e.warnings)
            std::cerr << "warning [" << e.label << "]: " << w << "\n";
        if (!e.error.empty()) std::cerr << "cell error [" << e.label << "]: " << e.error << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qubit decoherence and quantum Zeno rates for low/high-frequency baths"};
    app.require_subcommand(1);

    CliArgs args;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", args.config_path, "config file (key = value lines)");
        sub->add_option("--out", args.out_path, "output file (or directory for multi-case runs)");
        sub->add_option("--format", args.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--jobs", args.jobs, "worker threads");
        sub->add_option("--set", args.overrides, "config override key=value (repeatable)");
    };

    const std::vector<std::pair<std::string, Task>> tasks = {
        {"eta", Task::Eta},           {"spectrum", Task::Spectrum},
        {"dynamics", Task::Dynamics}, {"zeno", Task::Zeno},
        {"oracle", Task::Oracle},     {"reproduce", Task::Reproduce}};
    for (const auto& [name, task] : tasks) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub);
        if (task == Task::Reproduce)
            sub->add_option("preset", args.preset, "fig1|fig2a|fig2b|fig3|fig4")->required();
    }

    CLI11_PARSE(app, argc, argv);

    Task task = Task::Eta;
    for (const auto& [name, t] : tasks)
        if (app.got_subcommand(name)) task = t;

    try {
        const RunConfig config = resolve_config(args, task);
        const std::vector<ResultEnvelope> results = zenobath::run(config);
        warn_to_stderr(results);
        emit(results, config);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const MethodValidityError& e) {
        std::cerr << "method validity error: " << e.what() << "\n";
        return 4;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
