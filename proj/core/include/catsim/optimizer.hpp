#pragma once

// Fidelity between the photon-added/displaced circuit output and a displaced
// squeezed cat, and its maximization.
//
// Fidelities are squared moduli |<target|state>|^2 throughout.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "catsim/circuit.hpp"
#include "catsim/states.hpp"

namespace catsim {

/// cosh r (alpha_in_total - alpha_disp) - sinh r (alpha_in_total - alpha_disp)^*.
Complex gamma_transform(Complex alpha_in_total, Complex alpha_disp, double r);

/// Solves gamma_transform for alpha_disp.
Complex gamma_transform_inverse(Complex alpha_in_total, Complex gamma, double r);

struct FreeParams {
  Complex a1{0.0, 0.0};
  Complex a2{0.0, 0.0}; // order 2 only
  Complex gamma{0.0, 0.0};
  double r = 0.0;
};

struct FidelityProblem {
  int order = 1;
  double q = kEvenQ;
  double alpha_scs = 1.0;
  int dim = kDefaultDim;
  FreeParams params;

  void validate() const;
};

/// |<SCS_q| D(-gamma) S(-r) |Psi>|^2 with Psi = half_finished_state(a1, a2).
/// D(-gamma)|SCS_q> is taken in closed form and S(-r)|n> from
/// squeezed_fock_columns, so one evaluation is O(dim).
double fidelity_sq(const FidelityProblem& problem);

/// Same objective for explicit half-finished amplitudes (c0, c1, c2), which
/// need not be normalized. Reaches the pure |1> state that a1 -> infinity
/// only approaches.
double fidelity_sq_amplitudes(int order, double q, double alpha_scs, int dim, const CVector& psi,
                              Complex gamma, double r);

/// The same fidelity through dense Fock matrices: D(beta_n)|Psi> against
/// D(alpha) S(r) |SCS_q> with alpha = beta_n - delta(gamma). Any beta_n
/// gives the same value; used to cross-check fidelity_sq.
double fidelity_sq_direct(const FidelityProblem& problem, Complex beta_n);

/// Fidelity of a concrete circuit against a target cat.
double circuit_fidelity_sq(const TargetCat& target, const CircuitSpec& circuit);

struct PhysicalParams {
  Branch branch = Branch::A;
  Complex alpha_in{0.0, 0.0};
  Complex alpha_1{0.0, 0.0}; // order 2 only
  Complex alpha_disp{0.0, 0.0};
  double r = 0.0;

  /// The circuit producing D(alpha_in + alpha_1)|Psi>.
  CircuitSpec circuit(int order, int dim = kDefaultDim) const;
};

struct OptConfig {
  int dim = kDefaultDim;
  int restarts = 16;
  std::uint64_t seed = 0x5eed'ca75ULL;
  /// Optional per-restart seeds; restart k uses restart_seeds[k] when present
  /// and a stream derived from `seed` and k otherwise.
  std::vector<std::uint64_t> restart_seeds;
  /// Restrict a1 and gamma to the imaginary axis and a2 to the reals.
  bool restricted = true;
  /// Hold r at this value instead of optimizing it.
  std::optional<double> fixed_r;
  double ftol = 1e-10;
  int max_evaluations = 6000;
};

struct OptResult {
  int order = 1;
  double q = kEvenQ;
  double alpha_scs = 1.0;
  double fidelity_sq = 0.0;
  FreeParams free_params;
  /// Half-finished amplitudes at the optimum (normalized, length 3).
  CVector psi;
  /// Branches A and B. For order 2 these are the two roots of the inversion;
  /// for order 1, B is the complex conjugate (p -> -p mirror) of A.
  std::vector<PhysicalParams> physical;
  int restarts_used = 0;
  /// At least two restarts reached the best value within 1e-9.
  bool converged = false;
  int evaluations = 0;
  /// Best objective reached by each restart, in restart order.
  std::vector<double> restart_values;

  const PhysicalParams& branch(Branch b) const;
};

OptResult maximize(int order, double q, double alpha_scs, const OptConfig& config = {});

/// Targets of the rotation R(Q) for the two input signs: SCS_q for +,
/// SCS_{q - pi/2} for -.
std::pair<TargetCat, TargetCat> rotation_targets(double q, double alpha_scs);

/// ||<+out|-out>| - |<+in|-in>|| for the rotation acting on |alpha_scs> and
/// |-alpha_scs>: how far it is from preserving overlaps (zero for a unitary
/// map up to output phases).
double rotation_output_overlap(double q, double alpha_scs, int dim = kDefaultDim);

} // namespace catsim
