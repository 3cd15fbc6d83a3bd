#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "catsim/error.hpp"
#include "catsim/nelder_mead.hpp"
#include "catsim/optimizer.hpp"
#include "catsim/reference_tables.hpp"

using namespace catsim;

namespace {

constexpr Complex I(0.0, 1.0);

double block_diff(const CMatrix& a, const CMatrix& b, int block) {
  return (a - b).topLeftCorner(block, block).cwiseAbs().maxCoeff();
}

} // namespace

TEST(GammaTransform, Cases) {
  const Complex t(0.4, 1.1), d(-0.2, 0.3);
  EXPECT_EQ(gamma_transform(t, d, 0.0), t - d);
  for (double r : {-1.2, -0.3, 0.0, 0.7})
    EXPECT_EQ(gamma_transform(t, t, r), Complex(0.0));
  for (double r : {-0.9, 0.25}) {
    const Complex g = gamma_transform(t, d, r);
    EXPECT_LT(std::abs(gamma_transform_inverse(t, g, r) - d), 1e-14);
  }
}

TEST(GammaTransform, OperatorIdentity) {
  // S^dag(r) D^dag(alpha) D(beta) equals D(gamma) S(-r) up to a phase.
  const int dim = 100;
  const Complex alpha = 1.3 * I, beta = 0.4 * I;
  const double r = -0.3;
  const Complex g = gamma_transform(beta, alpha, r);
  const CMatrix lhs =
      (squeeze_op(r, dim).adjoint() * displacement_op(alpha, dim).adjoint() * displacement_op(beta, dim)).entries();
  const CMatrix rhs = (displacement_op(g, dim) * squeeze_op(-r, dim)).entries();
  for (int n = 0; n < 6; ++n) {
    const CVector u = lhs.col(n), v = rhs.col(n);
    const Complex ph = v.dot(u) / std::abs(v.dot(u));
    EXPECT_LT((u - ph * v).head(dim / 2).cwiseAbs().maxCoeff(), 1e-7) << n;
  }
  // Without the extra displacement the two sides agree exactly.
  const CMatrix lhs2 = (squeeze_op(-r, dim) * displacement_op(0.7 - 0.2 * I, dim) * squeeze_op(r, dim)).entries();
  const CMatrix rhs2 = displacement_op(gamma_transform(0.7 - 0.2 * I, 0.0, r), dim).entries();
  EXPECT_LT(block_diff(lhs2, rhs2, dim / 3), 1e-7);
}

TEST(Fidelity, IdenticalStatesGiveOne) {
  FidelityProblem p;
  p.order = 1;
  p.q = 0.0;
  p.alpha_scs = 1.3;
  p.params = {0.0, 0.0, 1.3, 0.0};
  EXPECT_NEAR(fidelity_sq(p), 1.0, 1e-13);
}

TEST(Fidelity, PureSinglePhotonAgainstOddCat) {
  CVector psi = CVector::Zero(3);
  psi[1] = 1.0;
  const double f = fidelity_sq_amplitudes(1, kOddQ, 0.8, 100, psi, 0.0, -0.207344);
  EXPECT_NEAR(f, 0.999376, 2e-4);
  // a1 -> infinity approaches the same value.
  FidelityProblem p{1, kOddQ, 0.8, 100, {Complex(0.0, 1e7), 0.0, 0.0, -0.207344}};
  EXPECT_NEAR(fidelity_sq(p), f, 1e-10);
}

TEST(Fidelity, Table2EvenRowAlpha1) {
  const ReferenceRow& row = find_reference(2, 1.0, +1, Branch::A);
  const CircuitSpec circuit{row.alpha_in, {CircuitStep::add(), CircuitStep::displace(row.alpha_1), CircuitStep::add()},
                            100};
  const TargetCat target{1.0, kEvenQ, row.alpha_disp, row.r};
  const double direct = circuit_fidelity_sq(target, circuit);
  EXPECT_NEAR(direct, 0.9999, 2e-4);

  const HalfFinished h = coeffs_from_circuit(row.alpha_in, row.alpha_1);
  FidelityProblem p{2, kEvenQ, 1.0, 100,
                    {h.a1, h.a2, gamma_transform(row.alpha_in + row.alpha_1, row.alpha_disp, row.r), row.r}};
  EXPECT_NEAR(fidelity_sq(p), direct, 1e-9);
}

TEST(Fidelity, RoutesAgree) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    FidelityProblem p;
    p.order = 1 + trial % 2;
    p.q = trial % 3 == 0 ? kEvenQ : (trial % 3 == 1 ? kOddQ : 0.3);
    p.alpha_scs = 0.8 + 0.08 * trial;
    p.params = {Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), 0.4 * u(rng)};
    const double a = fidelity_sq(p);
    for (Complex beta : {Complex(0.0, 0.0), Complex(0.5, -1.0), Complex(0.0, 2.0)})
      EXPECT_NEAR(fidelity_sq_direct(p, beta), a, 1e-9) << trial;
  }
}

TEST(Fidelity, GlobalPhaseInvariance) {
  CVector psi(3);
  psi << Complex(0.3, 0.1), Complex(0.0, 0.9), Complex(0.4, -0.2);
  const double f = fidelity_sq_amplitudes(2, kOddQ, 1.2, 100, psi, Complex(0.1, 0.4), -0.2);
  for (double ph : {0.3, 2.0, -1.1})
    EXPECT_NEAR(fidelity_sq_amplitudes(2, kOddQ, 1.2, 100, psi * std::polar(1.0, ph), Complex(0.1, 0.4), -0.2), f,
                1e-14);
  EXPECT_NEAR(fidelity_sq_amplitudes(2, kOddQ, 1.2, 100, 3.0 * psi, Complex(0.1, 0.4), -0.2), f, 1e-14);
}

TEST(Fidelity, RangeAndErrors) {
  FidelityProblem p{2, kEvenQ, 1.2, 100, {0.3, 0.7, Complex(0.2, -0.1), -0.1}};
  const double f = fidelity_sq(p);
  EXPECT_GE(f, 0.0);
  EXPECT_LE(f, 1.0);
  p.alpha_scs = 0.0;
  EXPECT_THROW(fidelity_sq(p), InvalidArgument);
  p.alpha_scs = 1.2;
  p.order = 3;
  EXPECT_THROW(fidelity_sq(p), InvalidArgument);
  p.order = 2;
  p.params.gamma = 5.0 * I;
  EXPECT_THROW(fidelity_sq(p), TruncationError);
}

TEST(Maximize, OrderOneOddAlpha1) {
  const OptResult res = maximize(1, kOddQ, 1.0);
  EXPECT_TRUE(res.converged);
  EXPECT_NEAR(res.fidelity_sq, 0.997109, 2e-3);
  const PhysicalParams& a = res.branch(Branch::A);
  EXPECT_NEAR(a.r, -0.31257, 0.02);
  EXPECT_LT(std::abs(a.alpha_in), 0.02);
  EXPECT_LT(std::abs(a.alpha_disp), 0.02);
  // The optimum is the squeezed single photon.
  EXPECT_GT(std::abs(res.psi[1]), 0.999);
}

TEST(Maximize, OrderTwoEvenAlpha12) {
  const OptResult res = maximize(2, kEvenQ, 1.2);
  EXPECT_TRUE(res.converged);
  EXPECT_NEAR(res.fidelity_sq, 0.999392, 2e-3);
  EXPECT_NEAR(res.free_params.r, -0.253272, 0.02);
  EXPECT_NEAR(std::abs(res.branch(Branch::A).alpha_in), 1.34629, 0.02);
}

TEST(Maximize, EvenOptimumHasVanishingA1) {
  for (double a : {1.0, 1.3, 1.6}) {
    const OptResult res = maximize(2, kEvenQ, a);
    EXPECT_LT(std::abs(res.free_params.a1), 1e-4) << a;
    EXPECT_GT(res.free_params.a2.real(), 0.0) << a;
    EXPECT_LT(std::abs(res.free_params.a2.imag()), 1e-4) << a;
    const PhysicalParams& b = res.branch(Branch::A);
    EXPECT_LT(std::abs(b.alpha_1 + 2.0 * b.alpha_in), 1e-3 * std::abs(b.alpha_in));
    EXPECT_LT(std::abs(b.alpha_disp + b.alpha_in), 1e-3 * std::abs(b.alpha_in));
  }
}

TEST(Maximize, BranchesReproduceTheSameFidelity) {
  for (int order : {1, 2}) {
    const OptResult res = maximize(order, kOddQ, 1.2);
    ASSERT_EQ(res.physical.size(), 2u);
    for (const auto& ph : res.physical) {
      const TargetCat t{1.2, kOddQ, ph.alpha_disp, ph.r};
      EXPECT_NEAR(circuit_fidelity_sq(t, ph.circuit(order)), res.fidelity_sq, 1e-6) << order;
    }
  }
}

TEST(Maximize, DeterministicAndMonotoneInRestarts) {
  OptConfig c;
  c.restarts = 4;
  const OptResult a = maximize(2, kOddQ, 1.1, c);
  const OptResult b = maximize(2, kOddQ, 1.1, c);
  EXPECT_EQ(a.fidelity_sq, b.fidelity_sq);
  EXPECT_EQ(a.restart_values, b.restart_values);
  EXPECT_EQ(a.evaluations, b.evaluations);
  OptConfig more = c;
  more.restarts = 8;
  const OptResult m = maximize(2, kOddQ, 1.1, more);
  EXPECT_GE(m.fidelity_sq, a.fidelity_sq);
  for (int k = 0; k < 4; ++k)
    EXPECT_EQ(m.restart_values[k], a.restart_values[k]);
  EXPECT_EQ(m.restarts_used, 8);
}

TEST(Maximize, ExplicitRestartSeeds) {
  OptConfig c;
  c.restarts = 3;
  c.restart_seeds = {11, 22, 33};
  const OptResult a = maximize(1, kEvenQ, 0.9, c);
  c.restart_seeds = {11, 22, 34};
  const OptResult b = maximize(1, kEvenQ, 0.9, c);
  EXPECT_EQ(a.restart_values[0], b.restart_values[0]);
  EXPECT_EQ(a.restart_values[1], b.restart_values[1]);
}

TEST(Maximize, SingleRestartIsNotConverged) {
  OptConfig c;
  c.restarts = 1;
  const OptResult r = maximize(1, kEvenQ, 1.0, c);
  EXPECT_FALSE(r.converged);
  EXPECT_GT(r.fidelity_sq, 0.9);
}

TEST(Maximize, FixedSqueezeAndFullSearch) {
  OptConfig c;
  c.fixed_r = -0.2;
  const OptResult fixed = maximize(2, kEvenQ, 1.1, c);
  EXPECT_EQ(fixed.free_params.r, -0.2);
  const OptResult free = maximize(2, kEvenQ, 1.1);
  EXPECT_LE(fixed.fidelity_sq, free.fidelity_sq + 1e-9);

  OptConfig full;
  full.restricted = false;
  full.restarts = 8;
  const OptResult f = maximize(2, kEvenQ, 1.1, full);
  EXPECT_NEAR(f.fidelity_sq, free.fidelity_sq, 1e-6);
}

TEST(Maximize, RejectsBadInput) {
  EXPECT_THROW(maximize(3, kEvenQ, 1.0), InvalidArgument);
  EXPECT_THROW(maximize(1, kEvenQ, -1.0), InvalidArgument);
  OptConfig c;
  c.restarts = 0;
  EXPECT_THROW(maximize(1, kEvenQ, 1.0, c), InvalidArgument);
}

TEST(Rotation, Targets) {
  const auto [p, m] = rotation_targets(kEvenQ, 1.4);
  EXPECT_EQ(p.q, kEvenQ);
  EXPECT_EQ(m.q, kOddQ);
  const auto [p0, m0] = rotation_targets(0.0, 1.4);
  EXPECT_NEAR(std::abs(inner(scs(p0.q, 1.4, 100), coherent(1.4, 100))), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(inner(scs(m0.q, 1.4, 100), coherent(-1.4, 100))), 1.0, 1e-14);
  EXPECT_THROW(rotation_targets(kOddQ + std::numbers::pi / 2, 0.0), InvalidArgument);
}

TEST(Rotation, NonUnitarityShrinksWithAmplitude) {
  EXPECT_LT(rotation_output_overlap(kEvenQ, 1.7), 0.004);
  EXPECT_NEAR(rotation_output_overlap(kEvenQ, 1.7), std::exp(-2.0 * 1.7 * 1.7), 1e-12);
  EXPECT_GT(rotation_output_overlap(kEvenQ, 0.8), rotation_output_overlap(kEvenQ, 1.2));
  EXPECT_LT(rotation_output_overlap(0.0, 1.0), 1e-14);
}

TEST(NelderMead, Rosenbrock) {
  const Objective f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  const std::vector<double> x0{-1.2, 1.0}, steps{0.5, 0.5};
  SimplexOptions opt;
  opt.ftol = 1e-14;
  const SimplexResult r = nelder_mead(f, x0, steps, opt);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], 1.0, 1e-4);
  EXPECT_LE(r.evaluations, opt.max_evaluations);
}

TEST(NelderMead, NonFiniteValuesAreAvoided) {
  const Objective f = [](std::span<const double> x) {
    return x[0] < 0.0 ? std::nan("") : (x[0] - 1.0) * (x[0] - 1.0);
  };
  const std::vector<double> x0{0.5}, steps{0.3};
  const SimplexResult r = nelder_mead(f, x0, steps, {});
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
}
