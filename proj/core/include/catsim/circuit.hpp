#pragma once

#include <string>
#include <vector>

#include "catsim/fock.hpp"
#include "catsim/states.hpp"

namespace catsim {

inline constexpr int kDefaultDim = 100;

struct CircuitStep {
  enum class Kind { AddPhoton, Displace };

  Kind kind = Kind::AddPhoton;
  Complex beta{0.0, 0.0}; // used only by Displace

  static CircuitStep add() { return {Kind::AddPhoton, {0.0, 0.0}}; }
  static CircuitStep displace(Complex beta) { return {Kind::Displace, beta}; }

  bool operator==(const CircuitStep&) const = default;
};

/// Seed coherent state followed by photon additions and displacements,
/// applied left to right.
struct CircuitSpec {
  Complex seed{0.0, 0.0};
  std::vector<CircuitStep> steps;
  int dim = kDefaultDim;

  /// Throws TruncationError when max_k |S_k|^2 > dim/4, with S_k the
  /// displacement accumulated after k steps (S_0 = seed).
  void validate() const;

  bool operator==(const CircuitSpec&) const = default;
};

/// Dark-count model: with probability dark_prob the herald fired without a
/// photon and the mode is left in `fallback`.
struct NoiseModel {
  double dark_prob = 0.0;
  DensityMatrix fallback;
};

enum class Branch { A, B };

const char* to_string(Branch b);

/// Parameters of the displacing Hadamard gate. Input sign +1 starts from
/// |alpha_hg>, -1 from |-alpha_hg>; a displacement by beta_(+/-) turns the
/// input into the seed alpha_in_(+/-), then [a^dag, D(alpha_1), a^dag].
struct HadamardParams {
  double alpha_scs = 1.0;
  double r = 0.0;
  Complex alpha_1;
  Complex alpha_hg;
  Complex beta_plus;
  Complex beta_minus;
  Complex alpha_in_plus;
  Complex alpha_in_minus;
  Complex alpha_plus;
  Complex alpha_minus;
  double gamma_absorb = 0.0;
  Branch branch = Branch::A;

  /// Build from the two seeds; alpha_hg is half their difference, so one
  /// displacement serves both input signs and beta_plus == beta_minus.
  static HadamardParams from_seeds(double alpha_scs, double r, Complex alpha_1, Complex alpha_in_plus,
                                   Complex alpha_in_minus, Complex alpha_plus, Complex alpha_minus,
                                   Branch branch);

  /// Build from a tabulated (alpha_hg, seeds) row; beta_(+/-) are derived
  /// from the seeds so the invariants hold, and single_beta_defect()
  /// measures how far the two required displacements are apart.
  static HadamardParams from_table(double alpha_scs, double r, Complex alpha_1, Complex alpha_hg,
                                   Complex alpha_in_plus, Complex alpha_in_minus, Complex alpha_plus,
                                   Complex alpha_minus, Branch branch);

  double single_beta_defect() const { return std::abs(beta_plus - beta_minus); }

  void validate() const;
};

StateVector run_circuit(const CircuitSpec& spec);

/// Half-finished state that a^dag D(alpha_1) a^dag |alpha_in> equals after
/// undoing D(alpha_in + alpha_1).
HalfFinished coeffs_from_circuit(Complex alpha_in, Complex alpha_1);

struct EvenInversion {
  Complex alpha_in;
  Complex alpha_1;
  Complex alpha_plus;
};

/// Even-cat parameters from a2 > 0 (with a1 = 0). sign = +1 gives the
/// positive-imaginary seed.
EvenInversion invert_even_params(double a2, int sign);

struct OddInversion {
  Complex alpha_in;
  Complex alpha_1;
};

/// General inversion of (a1, a2) to (alpha_in, alpha_1); branch = +1 takes
/// the + root of alpha_in^* = a1/(sqrt2 a2) +/- sqrt(D)/2 with the principal
/// square root of D = 2(a1/a2)^2 - 4 sqrt2/a2.
OddInversion invert_odd_params(Complex a1, Complex a2, int branch);

/// Circuit for one Hadamard input sign.
CircuitSpec hadamard_circuit(int input_sign, const HadamardParams& params, int dim = kDefaultDim);
StateVector hadamard_gate(int input_sign, const HadamardParams& params, int dim = kDefaultDim);

/// Phase shift by pi/2 then absorption: i * alpha_scs_in * exp(-gamma).
Complex preprocess_front_end(double alpha_scs_in, double gamma);

/// Absorption needed to map amplitude alpha_scs onto |alpha_hg|.
double absorber_for(double alpha_scs, Complex alpha_hg);

/// (1 - P) |ideal><ideal| + P fallback.
DensityMatrix noisy_output(const StateVector& ideal, const NoiseModel& noise);

// JSON document {"seed": [re, im], "dim": n, "steps": [{"add": true} |
// {"displace": [re, im]}]}. Parse errors raise InvalidArgument.
std::string to_json(const CircuitSpec& spec);
CircuitSpec circuit_from_json(const std::string& text);

} // namespace catsim
