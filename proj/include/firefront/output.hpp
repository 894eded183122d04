#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "firefront/config.hpp"
#include "firefront/simulator.hpp"

namespace firefront {

/// "front_0007.txt" and "field_0007.txt".
std::string snapshot_name(std::size_t index);
std::string field_name(std::size_t index);

/// One "index t burned_area file" line per snapshot.
void write_snapshot_index(std::ostream& out, const RunOutput& result);

/// Per-step lines "step t dt courant nodes rebuilt" followed by '#' summary
/// lines: status, counts and per-phase timings.
void write_run_log(std::ostream& out, const ScenarioConfig& cfg, const RunOutput& result);

/// One-paragraph summary for the terminal.
void print_summary(std::ostream& out, const ScenarioConfig& cfg, const RunOutput& result);

}  // namespace firefront
