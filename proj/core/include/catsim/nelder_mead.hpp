#pragma once

#include <functional>
#include <span>
#include <vector>

namespace catsim {

struct SimplexOptions {
  /// Stop when max f - min f over the simplex falls below this.
  double ftol = 1e-10;
  int max_evaluations = 6000;
  /// After convergence the simplex is rebuilt around the best vertex and the
  /// search repeated, up to this many times, until it stops improving.
  int max_rebuilds = 3;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimize `f` with the Nelder-Mead simplex (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). `steps` gives the initial edge length per
/// coordinate.
SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, std::span<const double> steps,
                          const SimplexOptions& options = {});

} // namespace catsim
