#include "catsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "catsim/error.hpp"

namespace catsim {

namespace {

constexpr double kSingularTol = 1e-12;
constexpr double kInvariantTol = 1e-9;

void require_sign(int s, const char* what) {
  if (s != 1 && s != -1)
    throw InvalidArgument(std::string(what) + ": sign must be +1 or -1");
}

} // namespace

const char* to_string(Branch b) { return b == Branch::A ? "a" : "b"; }

void CircuitSpec::validate() const {
  if (dim < 3)
    throw DimensionError("CircuitSpec: dimension must be at least 3");
  // After k steps the state is D(S_k) applied to a few-photon state, and a
  // displacement passes through amplitudes between its endpoints, so the
  // largest |S_k| is the amplitude the truncated space has to hold.
  Complex pos = seed;
  double reach = std::abs(seed);
  for (const auto& step : steps) {
    if (step.kind == CircuitStep::Kind::Displace) {
      if (!std::isfinite(step.beta.real()) || !std::isfinite(step.beta.imag()))
        throw InvalidArgument("CircuitSpec: non-finite displacement");
      pos += step.beta;
    }
    reach = std::max(reach, std::abs(pos));
  }
  if (!truncation_safe(reach, dim)) {
    std::ostringstream os;
    os << "CircuitSpec: amplitude reach " << reach << " is unsafe for dim " << dim;
    throw TruncationError(os.str());
  }
}

StateVector run_circuit(const CircuitSpec& spec) {
  spec.validate();
  StateVector v = coherent(spec.seed, spec.dim);
  for (const auto& step : spec.steps) {
    if (step.kind == CircuitStep::Kind::AddPhoton)
      v = add_photon(v);
    else
      v = displace(v, step.beta);
  }
  return normalize(v);
}

HalfFinished coeffs_from_circuit(Complex alpha_in, Complex alpha_1) {
  const Complex zin = std::conj(alpha_in);
  const Complex zout = std::conj(alpha_1 + alpha_in);
  if (std::abs(zin) < kSingularTol || std::abs(zout) < kSingularTol)
    throw DegenerateCircuitError("coeffs_from_circuit: alpha_in or alpha_in + alpha_1 vanishes");
  const Complex denom = zin * zout;
  return HalfFinished::second((zin + zout) / denom, std::numbers::sqrt2 / denom);
}

EvenInversion invert_even_params(double a2, int sign) {
  require_sign(sign, "invert_even_params");
  if (!(a2 > 0.0))
    throw InvalidArgument("invert_even_params: a2 must be positive");
  const Complex alpha_in(0.0, sign * std::sqrt(std::numbers::sqrt2 / a2));
  return {alpha_in, -2.0 * alpha_in, -alpha_in};
}

OddInversion invert_odd_params(Complex a1, Complex a2, int branch) {
  require_sign(branch, "invert_odd_params");
  if (std::abs(a2) < kSingularTol)
    throw InvalidArgument("invert_odd_params: a2 must be nonzero");
  const Complex ratio = a1 / a2;
  const Complex disc = 2.0 * ratio * ratio - 4.0 * std::numbers::sqrt2 / a2;
  const Complex root = std::sqrt(disc);
  const Complex zin = ratio / std::numbers::sqrt2 + static_cast<double>(branch) * root / 2.0;
  const Complex z1 = -static_cast<double>(branch) * root;
  return {std::conj(zin), std::conj(z1)};
}

HadamardParams HadamardParams::from_seeds(double alpha_scs, double r, Complex alpha_1,
                                          Complex alpha_in_plus, Complex alpha_in_minus,
                                          Complex alpha_plus, Complex alpha_minus, Branch branch) {
  const Complex hg = 0.5 * (alpha_in_plus - alpha_in_minus);
  return from_table(alpha_scs, r, alpha_1, hg, alpha_in_plus, alpha_in_minus, alpha_plus, alpha_minus,
                    branch);
}

HadamardParams HadamardParams::from_table(double alpha_scs, double r, Complex alpha_1,
                                          Complex alpha_hg, Complex alpha_in_plus,
                                          Complex alpha_in_minus, Complex alpha_plus,
                                          Complex alpha_minus, Branch branch) {
  HadamardParams p;
  p.alpha_scs = alpha_scs;
  p.r = r;
  p.alpha_1 = alpha_1;
  p.alpha_hg = alpha_hg;
  p.beta_plus = alpha_in_plus - alpha_hg;
  p.beta_minus = alpha_in_minus + alpha_hg;
  p.alpha_in_plus = alpha_in_plus;
  p.alpha_in_minus = alpha_in_minus;
  p.alpha_plus = alpha_plus;
  p.alpha_minus = alpha_minus;
  p.gamma_absorb = absorber_for(alpha_scs, alpha_hg);
  p.branch = branch;
  return p;
}

void HadamardParams::validate() const {
  if (!(alpha_scs > 0.0))
    throw InvalidArgument("HadamardParams: alpha_scs must be positive");
  if (!(gamma_absorb >= 0.0))
    throw InvalidArgument("HadamardParams: absorption must be nonnegative");
  if (std::abs(alpha_in_plus - (alpha_hg + beta_plus)) > kInvariantTol ||
      std::abs(alpha_in_minus - (-alpha_hg + beta_minus)) > kInvariantTol)
    throw InvalidArgument("HadamardParams: seeds inconsistent with alpha_hg and beta");
  if (std::abs(std::abs(alpha_hg) - alpha_scs * std::exp(-gamma_absorb)) > kInvariantTol)
    throw InvalidArgument("HadamardParams: |alpha_hg| inconsistent with the absorber");
}

CircuitSpec hadamard_circuit(int input_sign, const HadamardParams& params, int dim) {
  require_sign(input_sign, "hadamard_circuit");
  params.validate();
  CircuitSpec spec;
  spec.dim = dim;
  spec.seed = input_sign > 0 ? params.alpha_hg + params.beta_plus : -params.alpha_hg + params.beta_minus;
  spec.steps = {CircuitStep::add(), CircuitStep::displace(params.alpha_1), CircuitStep::add()};
  return spec;
}

StateVector hadamard_gate(int input_sign, const HadamardParams& params, int dim) {
  return run_circuit(hadamard_circuit(input_sign, params, dim));
}

Complex preprocess_front_end(double alpha_scs_in, double gamma) {
  if (!(gamma >= 0.0))
    throw InvalidArgument("preprocess_front_end: gamma must be nonnegative");
  return Complex(0.0, alpha_scs_in * std::exp(-gamma));
}

double absorber_for(double alpha_scs, Complex alpha_hg) {
  const double m = std::abs(alpha_hg);
  if (!(alpha_scs > 0.0) || !(m > 0.0))
    throw InvalidArgument("absorber_for: amplitudes must be positive");
  return std::log(alpha_scs / m);
}

DensityMatrix noisy_output(const StateVector& ideal, const NoiseModel& noise) {
  if (!(noise.dark_prob >= 0.0 && noise.dark_prob <= 1.0))
    throw InvalidArgument("noisy_output: dark_prob must lie in [0, 1]");
  if (ideal.dim() != noise.fallback.dim())
    throw DimensionError("noisy_output: state and fallback dimensions differ");
  const WeightedDensity parts[] = {{1.0 - noise.dark_prob, outer(ideal)},
                                   {noise.dark_prob, noise.fallback}};
  return mix(parts);
}

} // namespace catsim
