#include "catsim/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "catsim/error.hpp"
#include "catsim/nelder_mead.hpp"

namespace catsim {

namespace {

constexpr double kMaxSqueeze = 1.5;
constexpr double kStableWithin = 1e-9;
constexpr double kMirrorTie = 1e-6;

CVector psi_from(const FreeParams& p, int order) {
  CVector psi = CVector::Zero(3);
  psi[0] = 1.0;
  psi[1] = p.a1;
  if (order == 2)
    psi[2] = p.a2;
  return psi;
}

void require_order(int order, const char* where) {
  if (order != 1 && order != 2)
    throw InvalidArgument(std::string(where) + ": order must be 1 or 2");
}

// Search coordinates -> (psi, gamma, r).
struct Layout {
  int order;
  bool restricted;
  bool free_r;

  std::size_t size() const {
    std::size_t n = 0;
    if (order == 1)
      n = restricted ? 2 : 4;
    else
      n = restricted ? 3 : 6;
    return n + (free_r ? 1 : 0);
  }

  void decode(std::span<const double> x, double fixed_r, CVector& psi, Complex& gamma, double& r) const {
    psi = CVector::Zero(3);
    std::size_t i = 0;
    if (order == 1) {
      const double theta = x[i++];
      const Complex phase = restricted ? Complex(0.0, 1.0) : std::polar(1.0, x[i++]);
      psi[0] = std::cos(theta);
      psi[1] = phase * std::sin(theta);
    } else if (restricted) {
      psi[0] = 1.0;
      psi[1] = Complex(0.0, x[i++]);
      psi[2] = x[i++];
    } else {
      psi[0] = 1.0;
      psi[1] = Complex(x[i], x[i + 1]);
      psi[2] = Complex(x[i + 2], x[i + 3]);
      i += 4;
    }
    if (restricted) {
      gamma = Complex(0.0, x[i++]);
    } else {
      gamma = Complex(x[i], x[i + 1]);
      i += 2;
    }
    r = free_r ? x[i] : fixed_r;
  }

  void sample(std::mt19937_64& rng, std::optional<double> fixed_r, std::vector<double>& x,
              std::vector<double>& steps) const {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    x.clear();
    steps.clear();
    if (order == 1) {
      x.push_back(0.5 * std::numbers::pi * unit(rng));
      steps.push_back(0.2);
      if (!restricted) {
        x.push_back(std::numbers::pi * unit(rng));
        steps.push_back(0.3);
      }
    } else {
      // Draw physical seeds and map them to (a1, a2); this covers the region
      // the circuit can reach without favouring any particular a2 scale.
      HalfFinished h;
      for (;;) {
        const Complex in(restricted ? 0.0 : 1.5 * unit(rng), 3.0 * unit(rng));
        const Complex a1(restricted ? 0.0 : 2.5 * unit(rng), 5.0 * unit(rng));
        if (std::abs(in) > 0.2 && std::abs(in + a1) > 0.2) {
          h = coeffs_from_circuit(in, a1);
          break;
        }
      }
      if (restricted) {
        x.push_back(h.a1.imag());
        x.push_back(h.a2.real());
      } else {
        x.insert(x.end(), {h.a1.real(), h.a1.imag(), h.a2.real(), h.a2.imag()});
      }
      for (std::size_t k = 0; k < x.size(); ++k)
        steps.push_back(0.25 * std::max(1.0, std::abs(x[k])));
    }
    const int gammas = restricted ? 1 : 2;
    for (int k = 0; k < gammas; ++k) {
      x.push_back(2.5 * unit(rng));
      steps.push_back(0.3);
    }
    if (!fixed_r) {
      x.push_back(-0.3 + 0.5 * unit(rng));
      steps.push_back(0.1);
    }
  }
};

std::mt19937_64 restart_engine(const OptConfig& config, int restart) {
  if (static_cast<std::size_t>(restart) < config.restart_seeds.size())
    return std::mt19937_64(config.restart_seeds[restart]);
  const std::uint64_t seed = config.seed;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  return std::mt19937_64(seq);
}

PhysicalParams recover(Branch b, Complex alpha_in, Complex alpha_1, Complex gamma, double r) {
  return {b, alpha_in, alpha_1, gamma_transform_inverse(alpha_in + alpha_1, gamma, r), r};
}

std::vector<PhysicalParams> recover_order1(const CVector& psi, Complex gamma, double r) {
  if (std::abs(psi[1]) < 1e-14)
    throw DegenerateCircuitError("maximize: optimum has no one-photon component");
  const Complex alpha_in = std::conj(psi[0] / psi[1]);
  PhysicalParams a = recover(Branch::A, alpha_in, 0.0, gamma, r);
  const PhysicalParams b{Branch::B, std::conj(a.alpha_in), 0.0, std::conj(a.alpha_disp), r};
  return {a, b};
}

std::vector<PhysicalParams> recover_order2(Complex a1, Complex a2, Complex gamma, double r) {
  const OddInversion p = invert_odd_params(a1, a2, +1);
  const OddInversion m = invert_odd_params(a1, a2, -1);
  // Branch A is the root whose alpha_1 lies in the lower half plane.
  const bool plus_first = p.alpha_1.imag() < m.alpha_1.imag() ||
                          (p.alpha_1.imag() == m.alpha_1.imag() && p.alpha_1.real() <= m.alpha_1.real());
  const OddInversion& first = plus_first ? p : m;
  const OddInversion& second = plus_first ? m : p;
  return {recover(Branch::A, first.alpha_in, first.alpha_1, gamma, r),
          recover(Branch::B, second.alpha_in, second.alpha_1, gamma, r)};
}

} // namespace

Complex gamma_transform(Complex alpha_in_total, Complex alpha_disp, double r) {
  const Complex d = alpha_in_total - alpha_disp;
  return std::cosh(r) * d - std::sinh(r) * std::conj(d);
}

Complex gamma_transform_inverse(Complex alpha_in_total, Complex gamma, double r) {
  const Complex delta = std::cosh(r) * gamma + std::sinh(r) * std::conj(gamma);
  return alpha_in_total - delta;
}

void FidelityProblem::validate() const {
  require_order(order, "FidelityProblem");
  if (!(alpha_scs > 0.0))
    throw InvalidArgument("FidelityProblem: alpha_scs must be positive");
  if (dim < 3)
    throw DimensionError("FidelityProblem: dim must be at least 3");
  const double reach = alpha_scs + std::abs(params.gamma);
  if (!truncation_safe(reach, dim))
    throw TruncationError("FidelityProblem: |alpha_scs| + |gamma| exceeds the truncation-safe range");
}

double fidelity_sq_amplitudes(int order, double q, double alpha_scs, int dim, const CVector& psi,
                              Complex gamma, double r) {
  require_order(order, "fidelity_sq_amplitudes");
  if (psi.size() < order + 1)
    throw InvalidArgument("fidelity_sq_amplitudes: need order + 1 amplitudes");

  const auto cols = squeezed_fock_columns(-r, order, dim);
  CVector phi = CVector::Zero(dim);
  for (int n = 0; n <= order; ++n)
    phi += psi[n] * cols[n];

  // D(-gamma) D(+-A) = exp(i Im(-gamma (+-A)^*)) D(+-A - gamma), A real.
  const double a = alpha_scs;
  const Complex ph_plus = std::polar(1.0, -a * gamma.imag());
  const Complex ph_minus = std::polar(1.0, a * gamma.imag());
  const auto [cq, sq] = rotation_weights(q);
  const CVector target = cq * ph_plus * coherent_amplitudes(a - gamma, dim) +
                         sq * ph_minus * coherent_amplitudes(-a - gamma, dim);

  const double nt = target.squaredNorm();
  const double np = phi.squaredNorm();
  if (nt <= 0.0 || np <= 0.0)
    throw DegenerateCatError("fidelity_sq_amplitudes: zero-norm vector");
  return std::norm(target.dot(phi)) / (nt * np);
}

double fidelity_sq(const FidelityProblem& problem) {
  problem.validate();
  return fidelity_sq_amplitudes(problem.order, problem.q, problem.alpha_scs, problem.dim,
                                psi_from(problem.params, problem.order), problem.params.gamma,
                                problem.params.r);
}

double fidelity_sq_direct(const FidelityProblem& problem, Complex beta_n) {
  problem.validate();
  const FreeParams& p = problem.params;
  const HalfFinished h = problem.order == 1 ? HalfFinished::first(p.a1) : HalfFinished::second(p.a1, p.a2);
  const StateVector out = displace(half_finished_state(h, problem.dim), beta_n);
  const Complex alpha = gamma_transform_inverse(beta_n, p.gamma, p.r);
  const StateVector target = dsscs({problem.alpha_scs, problem.q, alpha, p.r}, problem.dim);
  return overlap_sq(target, out);
}

double circuit_fidelity_sq(const TargetCat& target, const CircuitSpec& circuit) {
  return overlap_sq(dsscs(target, circuit.dim), run_circuit(circuit));
}

CircuitSpec PhysicalParams::circuit(int order, int dim) const {
  require_order(order, "PhysicalParams::circuit");
  CircuitSpec spec;
  spec.seed = alpha_in;
  spec.dim = dim;
  spec.steps.push_back(CircuitStep::add());
  if (order == 2) {
    spec.steps.push_back(CircuitStep::displace(alpha_1));
    spec.steps.push_back(CircuitStep::add());
  }
  return spec;
}

const PhysicalParams& OptResult::branch(Branch b) const {
  for (const auto& p : physical)
    if (p.branch == b)
      return p;
  throw InvalidArgument("OptResult: branch not available");
}

OptResult maximize(int order, double q, double alpha_scs, const OptConfig& config) {
  require_order(order, "maximize");
  if (!(alpha_scs > 0.0))
    throw InvalidArgument("maximize: alpha_scs must be positive");
  if (config.restarts < 1)
    throw InvalidArgument("maximize: restarts must be at least 1");
  if (config.dim < 3)
    throw DimensionError("maximize: dim must be at least 3");
  TargetCat{alpha_scs, q, 0.0, 0.0}.validate();

  const Layout layout{order, config.restricted, !config.fixed_r.has_value()};
  const double fixed_r = config.fixed_r.value_or(0.0);

  const Objective objective = [&](std::span<const double> x) {
    CVector psi;
    Complex gamma;
    double r = 0.0;
    layout.decode(x, fixed_r, psi, gamma, r);
    if (std::abs(r) > kMaxSqueeze || !truncation_safe(alpha_scs + std::abs(gamma), config.dim))
      return 1.0;
    return 1.0 - fidelity_sq_amplitudes(order, q, alpha_scs, config.dim, psi, gamma, r);
  };

  SimplexOptions nm;
  nm.ftol = config.ftol;
  nm.max_evaluations = config.max_evaluations;

  OptResult result;
  result.order = order;
  result.q = q;
  result.alpha_scs = alpha_scs;

  std::vector<double> best_x;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> x0, steps;
  for (int k = 0; k < config.restarts; ++k) {
    auto rng = restart_engine(config, k);
    layout.sample(rng, config.fixed_r, x0, steps);
    const SimplexResult s = nelder_mead(objective, x0, steps, nm);
    result.evaluations += s.evaluations;
    result.restart_values.push_back(1.0 - s.value);
    if (s.value < best) {
      best = s.value;
      best_x = s.x;
    }
  }
  result.restarts_used = config.restarts;
  const double best_f = 1.0 - best;
  const auto agreeing = std::count_if(result.restart_values.begin(), result.restart_values.end(),
                                      [&](double f) { return best_f - f <= kStableWithin; });
  result.converged = agreeing >= 2;

  CVector psi;
  Complex gamma;
  double r = 0.0;
  layout.decode(best_x, fixed_r, psi, gamma, r);
  // The p -> -p mirror (complex conjugation) maps optima onto optima with the
  // same fidelity; report the member with Im a1 >= 0.
  if ((psi[1] / psi[0]).imag() < -kMirrorTie) {
    psi = psi.conjugate().eval();
    gamma = std::conj(gamma);
  }
  result.fidelity_sq = std::clamp(best_f, 0.0, 1.0);

  if (order == 1) {
    result.free_params = {psi[1] / psi[0], 0.0, gamma, r};
    result.physical = recover_order1(psi, gamma, r);
  } else {
    result.free_params = {psi[1], psi[2], gamma, r};
    result.physical = recover_order2(psi[1], psi[2], gamma, r);
  }
  result.psi = psi / psi.norm();
  return result;
}

std::pair<TargetCat, TargetCat> rotation_targets(double q, double alpha_scs) {
  TargetCat plus{alpha_scs, q, 0.0, 0.0};
  TargetCat minus{alpha_scs, q - std::numbers::pi / 2.0, 0.0, 0.0};
  plus.validate();
  minus.validate();
  return {plus, minus};
}

double rotation_output_overlap(double q, double alpha_scs, int dim) {
  const auto [plus, minus] = rotation_targets(q, alpha_scs);
  const Complex out = inner(scs(plus.q, alpha_scs, dim), scs(minus.q, alpha_scs, dim));
  const Complex in = inner(coherent(alpha_scs, dim), coherent(-alpha_scs, dim));
  return std::abs(std::abs(out) - std::abs(in));
}

} // namespace catsim
