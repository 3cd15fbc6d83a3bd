#pragma once

// Wigner functions normalized to integrate to one, W_vacuum(0) = 2/pi, with
// alpha = x + i p.

#include <string>
#include <variant>
#include <vector>

#include "catsim/fock.hpp"
#include "catsim/states.hpp"

namespace catsim {

struct PhasePoint {
  double x = 0.0;
  double p = 0.0;

  Complex alpha() const { return {x, p}; }
};

/// Cat N (|A> + q_sign |-A>) for complex amplitude A: two Gaussians plus the
/// interference fringe, with prefactor 1/(2(1 + q_sign e^{-2|A|^2})).
double w_scs(int q_sign, Complex alpha_scs, PhasePoint at);

/// Displaced squeezed cat D(disp) S(squeeze) |cat>, in the explicit form
/// with (x - x_disp) e^{-r} and (p - p_disp) e^{r}. Only target.alpha_scs,
/// target.disp and target.squeeze are read; q_sign picks the parity.
double w_dsscs(int q_sign, const TargetCat& target, PhasePoint at);

/// w_scs evaluated at cosh r (alpha - disp) - sinh r (alpha - disp)^*.
double w_dsscs_substituted(int q_sign, const TargetCat& target, PhasePoint at);

/// Half-finished state displaced to `center`: alpha_in for order 1,
/// alpha_in + alpha_1 for order 2.
double w_halffinished(const HalfFinished& h, Complex center, PhasePoint at);

/// W of the displaced two-photon state as the grouped polynomial
/// 1 + 4(2X^2 + 2P^2 - 1) + 3 + 4(2X^2 - 3)X^2 + 4(2P^2 - 3)P^2
/// + (1 - 4X^2)(1 - 4P^2) times the Gaussian; equals 1 - 8u + 8u^2.
double w2_grouped(Complex center, PhasePoint at);

/// Displaced-parity Wigner function of any density matrix, from the closed
/// form of W for |m><n| (associated Laguerre recurrence). Exact for the
/// given matrix at every phase point. Throws TruncationError if the result
/// has an imaginary residual above 1e-10.
double w_numeric(const DensityMatrix& rho, PhasePoint at);
double w_numeric(const StateVector& psi, PhasePoint at);

/// Precomputes the band structure of rho for repeated evaluation.
class NumericWigner {
public:
  explicit NumericWigner(const DensityMatrix& rho);
  double operator()(PhasePoint at) const;

private:
  int support_ = 0;
  // bands_[k][n] = rho(n + k, n); conj_bands_[k][n] = rho(n, n + k).
  std::vector<std::vector<Complex>> bands_;
  std::vector<std::vector<Complex>> conj_bands_;
  double scale_ = 1.0;
};

/// (2/pi) D(alpha) Parity D(alpha)^dag in the truncated space; the trace
/// against rho is W(alpha). Dense, for validation.
OperatorMatrix displaced_parity_op(Complex alpha, int dim);

struct GridWindow {
  double x_min = -6.0;
  double x_max = 6.0;
  int nx = 301;
  double p_min = -6.0;
  double p_max = 6.0;
  int np = 301;

  void validate() const;
  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dp() const { return (p_max - p_min) / (np - 1); }
};

/// Samples on a regular grid; row j is p = p_min + j dp, column i is
/// x = x_min + i dx.
struct WignerGrid {
  GridWindow window;
  std::vector<double> values; // values[j * nx + i]

  double x(int i) const { return window.x_min + i * window.dx(); }
  double p(int j) const { return window.p_min + j * window.dp(); }
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * window.nx + i]; }

  /// Riemann sum of values * dx * dp.
  double norm() const;
  double max_abs_diff(const WignerGrid& other) const;
};

struct Marginals {
  std::vector<double> x_dist; // integral over p, one entry per column
  std::vector<double> p_dist; // integral over x, one entry per row
};

Marginals marginals(const WignerGrid& grid);

/// Mean of a sampled distribution on lo, lo + step, ...
double centroid(const std::vector<double>& dist, double lo, double step);

struct ScsSource {
  int q_sign = +1;
  Complex alpha_scs{1.0, 0.0};
};

struct DsscsSource {
  int q_sign = +1;
  TargetCat target;
};

struct HalfFinishedSource {
  HalfFinished h;
  Complex center;
};

using WignerSource = std::variant<ScsSource, DsscsSource, HalfFinishedSource, DensityMatrix>;

double evaluate(const WignerSource& source, PhasePoint at);

WignerGrid make_grid(const WignerSource& source, const GridWindow& window = {});

} // namespace catsim
