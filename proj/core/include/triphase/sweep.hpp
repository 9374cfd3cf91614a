#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triphase/csv.hpp"
#include "triphase/quantifiers.hpp"

namespace triphase {

enum class OutputMode { analytic, numeric, both };

/// A parameter sweep: a base drive, a uniform t-grid, an optional second axis
/// varying one drive field over a list of values, and the quantities to emit.
struct SweepSpec {
  DriveParams base;
  double t_start = 0.0;
  double t_end = 50.0;
  int t_points = 2000;
  std::optional<std::pair<std::string, std::vector<double>>> vary;
  std::vector<std::string> outputs;
  OutputMode mode = OutputMode::analytic;
  StateFamily family = StateFamily::exact;
  HssVariant hss_variant = HssVariant::weighted;
  double fd_step = kFdDefaultStep;
};

/// Quantity names accepted in SweepSpec::outputs.
const std::vector<std::string>& known_quantities();

/// Varyable DriveParams field names.
const std::vector<std::string>& varyable_fields();

/// Throws std::invalid_argument with a human-readable message on bad grids,
/// unknown quantity names (the message lists the valid ones), unknown vary
/// fields, empty or invalid vary values.
void validate(const SweepSpec& spec);

/// Uniform inclusive grid with t_points entries.
std::vector<double> time_grid(double t_start, double t_end, int t_points);

/// Evaluates the sweep into a CSV-ready table. Deterministic: identical specs
/// produce identical tables.
Table run_sweep(const SweepSpec& spec);

}  // namespace triphase
