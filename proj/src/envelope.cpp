#include "zenobath/envelope.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace zenobath {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const ResultEnvelope& e) {
    std::string out;
    if (!e.label.empty()) out += "# case = " + e.label + "\n";
    for (const auto& [key, value] : e.scalars) out += "# " + key + " = " + value + "\n";
    for (const auto& w : e.warnings) out += "# warning: " + w + "\n";
    if (!e.error.empty()) out += "# error: " + e.error + "\n";
    for (std::size_t i = 0; i < e.table.columns.size(); ++i) {
        if (i) out += ",";
        out += e.table.columns[i];
    }
    if (!e.table.columns.empty()) out += "\n";
    for (const auto& row : e.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += row[i];
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const ResultEnvelope& e) {
    nlohmann::json j;
    j["label"] = e.label;
    j["version"] = e.version;
    j["wall_time_s"] = e.wall_time_s;
    j["warnings"] = e.warnings;
    nlohmann::json cfg = nlohmann::json::object();
    // Echo through the emit/parse key space so the config can be replayed.
    std::string doc = emit_config(e.config);
    std::size_t pos = 0;
    while (pos < doc.size()) {
        const auto nl = doc.find('\n', pos);
        const std::string line = doc.substr(pos, nl - pos);
        pos = nl + 1;
        const auto eq = line.find(" = ");
        if (eq != std::string::npos) cfg[line.substr(0, eq)] = line.substr(eq + 3);
    }
    j["config"] = cfg;
    nlohmann::json payload = nlohmann::json::object();
    for (const auto& [key, value] : e.scalars) {
        char* end = nullptr;
        const double x = std::strtod(value.c_str(), &end);
        if (end != value.c_str() && *end == '\0')
            payload[key] = x;
        else
            payload[key] = value;
    }
    payload["columns"] = e.table.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : e.table.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row) {
            char* end = nullptr;
            const double x = std::strtod(cell.c_str(), &end);
            if (end != cell.c_str() && *end == '\0')
                r.push_back(x);
            else
                r.push_back(cell);
        }
        rows.push_back(std::move(r));
    }
    payload["rows"] = std::move(rows);
    j["payload"] = std::move(payload);
    if (!e.error.empty()) j["error"] = e.error;
    return j.dump(2) + "\n";
}

} // namespace zenobath
