#pragma once

#include <numbers>
#include <utility>
#include <vector>

#include "catsim/fock.hpp"

namespace catsim {

inline constexpr double kEvenQ = std::numbers::pi / 4.0;
inline constexpr double kOddQ = -std::numbers::pi / 4.0;

/// Smallest cat amplitude accepted when the rotation is the odd one.
inline constexpr double kMinOddCatAmplitude = 1e-6;

/// Displaced squeezed rotated cat D(disp) S(squeeze) |SCS_q(alpha_scs)>.
struct TargetCat {
  double alpha_scs = 1.0;
  double q = kEvenQ;
  Complex disp{0.0, 0.0};
  double squeeze = 0.0;

  /// Throws InvalidArgument / DegenerateCatError when the invariants fail.
  void validate() const;
};

/// Expansion over displaced number states |l, center> = D(center)|l>:
/// state = prefactor * sum_l coeffs[l] |l, center>.
struct AlphaRepSeries {
  Complex center{0.0, 0.0};
  std::vector<Complex> coeffs;
  Complex prefactor{1.0, 0.0};

  /// sum_l |prefactor * coeffs[l]|^2 (1 when the series is complete).
  double captured_mass() const;

  /// Fock-space resummation, D(center) sum_l prefactor coeffs[l] |l>.
  StateVector reconstruct(int dim) const;
};

/// (|0> + a1|1> + a2|2>)/sqrt(1 + |a1|^2 + |a2|^2); a2 is ignored for order 1.
struct HalfFinished {
  int order = 1;
  Complex a1{0.0, 0.0};
  Complex a2{0.0, 0.0};

  static HalfFinished first(Complex a1) { return {1, a1, {0.0, 0.0}}; }
  static HalfFinished second(Complex a1, Complex a2) { return {2, a1, a2}; }
};

/// (cos q, sin q), exact +/-1/sqrt2 pairs at kEvenQ and kOddQ so that
/// cat parity selection holds to the last bit.
std::pair<double, double> rotation_weights(double q);

/// exp(-|alpha|^2/2) alpha^n / sqrt(n!) for n < dim, without renormalizing.
CVector coherent_amplitudes(Complex alpha, int dim);

/// Coherent state |0, alpha>. Requires |alpha|^2 <= dim/4.
StateVector coherent(Complex alpha, int dim);

/// 1/sqrt(1 + 2 cos q sin q exp(-2 alpha_scs^2)).
double scs_normalization(double q, double alpha_scs);

/// N_q (cos q |alpha_scs> + sin q |-alpha_scs>).
StateVector scs(double q, double alpha_scs, int dim);

/// D(disp) S(squeeze) |SCS_q>, squeezing applied first.
StateVector dsscs(const TargetCat& target, int dim);

/// Expansion of SCS_q(alpha_scs) about `center` with `terms` coefficients.
AlphaRepSeries alpha_rep(double q, double alpha_scs, Complex center, int terms);

/// As alpha_rep, starting from 40 terms and doubling (up to 200) until the
/// missing mass is below 1e-10.
AlphaRepSeries alpha_rep_auto(double q, double alpha_scs, Complex center);

/// Expansion of the vacuum about `center`.
AlphaRepSeries vacuum_rep(Complex center, int terms);

StateVector half_finished_state(const HalfFinished& h, int dim);

} // namespace catsim
