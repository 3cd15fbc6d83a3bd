#include "catsim/states.hpp"

#include <cmath>
#include <sstream>

#include "catsim/error.hpp"

namespace catsim {

namespace {

void require_safe(Complex alpha, int dim, const char* what) {
  if (!truncation_safe(alpha, dim)) {
    std::ostringstream os;
    os << what << ": |alpha|^2 = " << std::norm(alpha) << " exceeds dim/4 = " << dim / 4.0;
    throw TruncationError(os.str());
  }
}

} // namespace

void TargetCat::validate() const {
  if (!(alpha_scs > 0.0) || !std::isfinite(alpha_scs))
    throw InvalidArgument("TargetCat: alpha_scs must be positive");
  if (!std::isfinite(q) || !std::isfinite(squeeze) || !std::isfinite(disp.real()) ||
      !std::isfinite(disp.imag()))
    throw InvalidArgument("TargetCat: non-finite parameter");
  // q == -pi/4 (mod pi) is the odd cat, whose normalization blows up at 0.
  const double phase = std::remainder(q - kOddQ, std::numbers::pi);
  if (std::abs(phase) < 1e-12 && alpha_scs <= kMinOddCatAmplitude)
    throw DegenerateCatError("TargetCat: odd cat amplitude too small");
}

double AlphaRepSeries::captured_mass() const {
  double m = 0.0;
  for (const auto& c : coeffs)
    m += std::norm(c);
  return m * std::norm(prefactor);
}

StateVector AlphaRepSeries::reconstruct(int dim) const {
  if (static_cast<int>(coeffs.size()) > dim)
    throw DimensionError("AlphaRepSeries::reconstruct: more terms than the space holds");
  CVector v = CVector::Zero(dim);
  for (std::size_t l = 0; l < coeffs.size(); ++l)
    v[static_cast<Eigen::Index>(l)] = prefactor * coeffs[l];
  return displace(StateVector(std::move(v)), center);
}

CVector coherent_amplitudes(Complex alpha, int dim) {
  if (dim < 1)
    throw DimensionError("coherent_amplitudes: dimension must be positive");
  CVector v(dim);
  Complex c = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n < dim; ++n) {
    v[n] = c;
    c *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return v;
}

StateVector coherent(Complex alpha, int dim) {
  require_safe(alpha, dim, "coherent");
  CVector v = coherent_amplitudes(alpha, dim);
  v /= v.norm();
  return StateVector(std::move(v));
}

std::pair<double, double> rotation_weights(double q) {
  constexpr double h = std::numbers::sqrt2 / 2.0;
  if (q == kEvenQ)
    return {h, h};
  if (q == kOddQ)
    return {h, -h};
  return {std::cos(q), std::sin(q)};
}

double scs_normalization(double q, double alpha_scs) {
  const auto [c, s] = rotation_weights(q);
  const double radicand = 1.0 + 2.0 * c * s * std::exp(-2.0 * alpha_scs * alpha_scs);
  if (!(radicand > 1e-12))
    throw DegenerateCatError("scs_normalization: vanishing norm (odd cat at zero amplitude)");
  return 1.0 / std::sqrt(radicand);
}

StateVector scs(double q, double alpha_scs, int dim) {
  const double nq = scs_normalization(q, alpha_scs);
  require_safe(alpha_scs, dim, "scs");
  const CVector plus = coherent_amplitudes(alpha_scs, dim);
  CVector v(dim);
  const auto [c, s] = rotation_weights(q);
  for (int n = 0; n < dim; ++n) {
    // |-alpha> has amplitudes (-1)^n times those of |alpha>.
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    v[n] = nq * (c + sign * s) * plus[n];
  }
  v /= v.norm();
  return StateVector(std::move(v));
}

StateVector dsscs(const TargetCat& target, int dim) {
  target.validate();
  require_safe(target.disp, dim, "dsscs (displacement)");
  require_safe(target.alpha_scs * std::exp(std::abs(target.squeeze)), dim, "dsscs (squeezed cat)");
  const StateVector cat = scs(target.q, target.alpha_scs, dim);
  if (target.squeeze == 0.0 && target.disp == Complex(0.0))
    return cat;
  return normalize(displace(squeeze(cat, target.squeeze), target.disp));
}

AlphaRepSeries alpha_rep(double q, double alpha_scs, Complex center, int terms) {
  if (terms < 1)
    throw InvalidArgument("alpha_rep: terms must be at least 1");
  const double nq = scs_normalization(q, alpha_scs);
  const Complex a = alpha_scs;
  const Complex cc = std::conj(center);
  const auto [cq, sq] = rotation_weights(q);
  const Complex w_plus = cq * std::exp(a * cc);
  const Complex w_minus = sq * std::exp(-a * cc);

  // alpha_scs^l (1 - c/alpha_scs)^l = (alpha_scs - c)^l, and the mirrored
  // branch gives (-(alpha_scs + c))^l; writing them this way keeps
  // alpha_scs = 0 finite.
  AlphaRepSeries out;
  out.center = center;
  out.prefactor = nq * std::exp(-0.5 * (alpha_scs * alpha_scs + std::norm(center)));
  out.coeffs.reserve(terms);
  Complex p = 1.0;
  Complex m = 1.0;
  for (int l = 0; l < terms; ++l) {
    out.coeffs.push_back(w_plus * p + w_minus * m);
    const double s = std::sqrt(static_cast<double>(l + 1));
    p *= (a - center) / s;
    m *= -(a + center) / s;
  }
  return out;
}

AlphaRepSeries alpha_rep_auto(double q, double alpha_scs, Complex center) {
  int terms = 40;
  for (;;) {
    AlphaRepSeries s = alpha_rep(q, alpha_scs, center, terms);
    if (1.0 - s.captured_mass() < 1e-10 || terms >= 200)
      return s;
    terms = std::min(200, 2 * terms);
  }
}

AlphaRepSeries vacuum_rep(Complex center, int terms) {
  if (terms < 1)
    throw InvalidArgument("vacuum_rep: terms must be at least 1");
  AlphaRepSeries out;
  out.center = center;
  out.prefactor = 1.0;
  out.coeffs.reserve(terms);
  Complex c = std::exp(-0.5 * std::norm(center));
  for (int l = 0; l < terms; ++l) {
    out.coeffs.push_back(c);
    c *= -center / std::sqrt(static_cast<double>(l + 1));
  }
  return out;
}

StateVector half_finished_state(const HalfFinished& h, int dim) {
  if (dim < 3)
    throw DimensionError("half_finished_state: dimension must be at least 3");
  if (h.order != 1 && h.order != 2)
    throw InvalidArgument("half_finished_state: order must be 1 or 2");
  CVector v = CVector::Zero(dim);
  v[0] = 1.0;
  v[1] = h.a1;
  if (h.order == 2)
    v[2] = h.a2;
  return normalize(StateVector(std::move(v)));
}

} // namespace catsim
