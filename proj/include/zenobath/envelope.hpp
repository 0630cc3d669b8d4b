#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zenobath/config.hpp"

namespace zenobath {

// Plot-ready rectangular payload. Cells are pre-formatted (numbers at 17
// significant digits) so CSV bodies are byte-reproducible.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// Scalar metadata attached to a payload, in emission order.
using Scalars = std::vector<std::pair<std::string, std::string>>;

struct ResultEnvelope {
    RunConfig config;
    std::string version;
    std::string label;  // preset case or task name
    double wall_time_s = 0.0;
    std::vector<std::string> warnings;
    Scalars scalars;
    Table table;
    std::string error;  // non-empty when this grid cell failed
};

std::string format_number(double v);  // %.17g

// CSV body: `# key = value` scalar preamble, header row, then rows. LF line
// endings, '.' decimal point. Deterministic for identical configs.
std::string to_csv(const ResultEnvelope& e);

// Full envelope (config echo, version, wall time, warnings, scalars, table).
// wall_time_s is the only field that varies between identical runs.
std::string to_json(const ResultEnvelope& e);

} // namespace zenobath
