#pragma once

#include "triphase/sweep.hpp"

namespace triphase {

/// Fixed parameter sets behind the figure commands. Curve lists default to
/// vartheta3 in {0.3, 0.5, 0.7} and delta in {0.04, 1, 5, 30} (fig2 uses the
/// two quoted regimes {0.04, 30}); all overridable.
struct FigureOptions {
  double t_start = 0.0;
  double t_end = 50.0;
  int t_points = 2000;
  bool auto_extend = false;  ///< extend t_end to cover >= 2 beat periods 2pi/|omega_i|
  std::vector<double> vartheta3_list = {0.3, 0.5, 0.7};
  std::vector<double> delta_list = {0.04, 1.0, 5.0, 30.0};
  HssVariant hss_variant = HssVariant::weighted;
  double fd_step = kFdDefaultStep;
};

const std::vector<std::string>& known_figures();

/// Builds the CSV table for one of fig2, fig3a, fig3b, fig4, fig5.
/// Throws std::invalid_argument for unknown ids or invalid grids.
Table make_figure(const std::string& id, const FigureOptions& opt);

}  // namespace triphase
