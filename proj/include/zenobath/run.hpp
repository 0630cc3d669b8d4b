#pragma once

#include <vector>

#include "zenobath/config.hpp"
#include "zenobath/envelope.hpp"

namespace zenobath {

// Executes one fully-resolved case (task + single bath). Task::Reproduce is
// not valid here; it only exists at the expansion level.
ResultEnvelope run_task(const RunConfig& config);

// Expands preset and grid axes and executes every case/cell, results in grid
// order. Per-cell failures are recorded in the envelope's `error` field; if
// every cell fails, the first error is rethrown.
std::vector<ResultEnvelope> run(const RunConfig& config);

} // namespace zenobath
