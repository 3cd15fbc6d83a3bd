#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "catsim/error.hpp"
#include "catsim/states.hpp"
#include "oracles.hpp"

using namespace catsim;

namespace {

// Fock-space cat built straight from the coherent-state formula.
CVector cat_oracle(double q, double a, int dim) {
  CVector v(dim);
  for (int n = 0; n < dim; ++n)
    v[n] = std::cos(q) * oracle::coherent_amp(n, a) + std::sin(q) * oracle::coherent_amp(n, -a);
  return v / v.norm();
}

double phase_free_diff(const StateVector& a, const StateVector& b) {
  const Complex ov = inner(a, b);
  const Complex ph = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex(1.0);
  return (a.amps() * ph - b.amps()).cwiseAbs().maxCoeff();
}

} // namespace

TEST(Coherent, VacuumAndClosedForm) {
  const StateVector v = coherent(0.0, 10);
  EXPECT_EQ(v[0], Complex(1.0));
  EXPECT_NEAR(coherent(0.8, 100)[0].real(), 0.7261490371, 1e-10);
  EXPECT_NEAR(coherent(Complex(0.0, 2.0), 100).norm(), 1.0, 1e-12);
  for (int n = 0; n < 30; ++n)
    EXPECT_NEAR(std::abs(coherent(Complex(0.0, 2.0), 100)[n] - oracle::coherent_amp(n, Complex(0.0, 2.0))), 0.0, 1e-14);
}

TEST(Coherent, RejectsUnsafeAmplitude) {
  EXPECT_THROW(coherent(Complex(6.0, 0.0), 100), TruncationError);
  EXPECT_THROW(scs(kEvenQ, 4.0, 40), TruncationError);
}

TEST(ScsNormalization, Cases) {
  EXPECT_NEAR(scs_normalization(kEvenQ, 1e-9), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(scs_normalization(0.0, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(scs_normalization(0.0, 2.7), 1.0);
  EXPECT_NEAR(scs_normalization(kOddQ, 0.8), 1.0 / std::sqrt(1.0 - std::exp(-1.28)), 1e-14);
  EXPECT_THROW(scs_normalization(kOddQ, 0.0), DegenerateCatError);
}

TEST(ScsNormalization, Monotonicity) {
  double prev_even = scs_normalization(kEvenQ, 0.01);
  double prev_odd = scs_normalization(kOddQ, 0.01);
  for (double a = 0.02; a <= 3.0; a += 0.01) {
    const double e = scs_normalization(kEvenQ, a);
    const double o = scs_normalization(kOddQ, a);
    if (a < 2.5) { // beyond this both saturate at 1 in double precision
      EXPECT_GT(e, prev_even) << a;
      EXPECT_LT(o, prev_odd) << a;
    } else {
      EXPECT_GE(e, prev_even) << a;
      EXPECT_LE(o, prev_odd) << a;
    }
    prev_even = e;
    prev_odd = o;
  }
}

TEST(Scs, ParityAndOracle) {
  const StateVector even = scs(kEvenQ, 1.3, 100);
  const StateVector odd = scs(kOddQ, 1.3, 100);
  for (int n = 0; n < 100; ++n) {
    EXPECT_LT(std::abs((n % 2 ? even : odd)[n]), 1e-14) << n;
  }
  EXPECT_LT((even.amps() - cat_oracle(kEvenQ, 1.3, 100)).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT((odd.amps() - cat_oracle(kOddQ, 1.3, 100)).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_NEAR(even.norm(), 1.0, 1e-12);
}

TEST(Scs, QuarterTurnIsCoherent) {
  const StateVector s = scs(std::numbers::pi / 2, 1.1, 100);
  EXPECT_LT((s.amps() - coherent(-1.1, 100).amps()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Dsscs, ReducesToScs) {
  TargetCat t{1.2, kOddQ, {0.0, 0.0}, 0.0};
  EXPECT_LT((dsscs(t, 100).amps() - scs(kOddQ, 1.2, 100).amps()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Dsscs, NormalizedAndMatchesOperators) {
  TargetCat t{1.4, kEvenQ, {0.3, -1.32164}, -0.40712};
  const StateVector d = dsscs(t, 100);
  EXPECT_NEAR(d.norm(), 1.0, 1e-10);
  const StateVector ref =
      normalize(apply(displacement_op(t.disp, 100), apply(squeeze_op(t.squeeze, 100), scs(t.q, t.alpha_scs, 100))));
  EXPECT_LT((d.amps() - ref.amps()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Dsscs, SqueezedSinglePhoton) {
  TargetCat t{0.8, kOddQ, {0.0, 0.0}, -0.207344};
  // The one-photon circuit with alpha_in -> 0 emits |1>.
  const double f = overlap_sq(dsscs(t, 100), StateVector::fock(1, 100));
  EXPECT_GE(f, 0.999);
  EXPECT_NEAR(f, 0.999376, 2e-4);
}

TEST(TargetCatTest, Validation) {
  EXPECT_THROW((TargetCat{0.0, kEvenQ, {}, 0.0}).validate(), InvalidArgument);
  EXPECT_THROW((TargetCat{1e-7, kOddQ, {}, 0.0}).validate(), DegenerateCatError);
  EXPECT_NO_THROW((TargetCat{1e-7, kEvenQ, {}, 0.0}).validate());
  EXPECT_THROW((TargetCat{1.0, kEvenQ, {}, std::nan("")}).validate(), InvalidArgument);
}

TEST(AlphaRep, OriginParity) {
  const AlphaRepSeries even = alpha_rep(kEvenQ, 1.2, 0.0, 40);
  const AlphaRepSeries odd = alpha_rep(kOddQ, 1.2, 0.0, 40);
  for (int l = 0; l < 40; ++l) {
    if (l % 2)
      EXPECT_EQ(even.coeffs[l], Complex(0.0)) << l;
    else
      EXPECT_EQ(odd.coeffs[l], Complex(0.0)) << l;
  }
}

TEST(AlphaRep, OffOriginHasBothParities) {
  const AlphaRepSeries s = alpha_rep(kEvenQ, 1.2, Complex(0.3, 0.4), 40);
  EXPECT_GT(std::abs(s.coeffs[1]), 1e-3);
  EXPECT_GT(std::abs(s.coeffs[2]), 1e-3);
}

TEST(AlphaRep, ReconstructsCat) {
  const AlphaRepSeries s = alpha_rep(kEvenQ, 1.0, Complex(0.0, 0.5), 40);
  EXPECT_LT((s.reconstruct(100).amps() - scs(kEvenQ, 1.0, 100).amps()).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_NEAR(s.captured_mass(), 1.0, 1e-8);
}

TEST(AlphaRep, CoherentCenteredOnItself) {
  const AlphaRepSeries s = alpha_rep(0.0, 1.7, 1.7, 20);
  EXPECT_NEAR(std::abs(s.prefactor * s.coeffs[0]), 1.0, 1e-14);
  for (int l = 1; l < 20; ++l)
    EXPECT_EQ(s.coeffs[l], Complex(0.0));
}

TEST(AlphaRep, CenterIndependence) {
  for (double a : {0.8, 1.3, 1.7})
    for (Complex c : {Complex(0.0, 0.0), Complex(1.0, -1.0), Complex(0.0, 2.0), Complex(-1.5, 0.5)}) {
      for (double q : {kEvenQ, kOddQ}) {
        const StateVector ref = alpha_rep(q, a, 0.0, 50).reconstruct(120);
        const StateVector other = alpha_rep(q, a, c, 50).reconstruct(120);
        EXPECT_LT((ref.amps() - other.amps()).cwiseAbs().maxCoeff(), 1e-7) << a << " " << c;
      }
    }
}

TEST(AlphaRep, AutoExtendsUntilTailIsSmall) {
  const AlphaRepSeries s = alpha_rep_auto(kOddQ, 1.7, Complex(0.0, 2.0));
  EXPECT_GT(s.captured_mass(), 1.0 - 1e-10);
  EXPECT_THROW(alpha_rep(kEvenQ, 1.0, 0.0, 0), InvalidArgument);
  EXPECT_THROW(alpha_rep(kOddQ, 0.0, 0.5, 10), DegenerateCatError);
}

TEST(VacuumRep, Cases) {
  const AlphaRepSeries z = vacuum_rep(0.0, 5);
  EXPECT_EQ(z.prefactor * z.coeffs[0], Complex(1.0));
  for (int l = 1; l < 5; ++l)
    EXPECT_EQ(z.coeffs[l], Complex(0.0));

  const StateVector rec = vacuum_rep(1.5, 40).reconstruct(100);
  EXPECT_LT((rec.amps() - StateVector(100).amps()).cwiseAbs().maxCoeff(), 1e-10);

  EXPECT_NEAR(vacuum_rep(Complex(0.0, 2.0), 60).captured_mass(), 1.0, 1e-12);
  EXPECT_THROW(vacuum_rep(0.0, 0), InvalidArgument);
}

TEST(HalfFinishedState, Cases) {
  const StateVector v = half_finished_state(HalfFinished::first(0.0), 10);
  EXPECT_EQ(v[0], Complex(1.0));
  EXPECT_NEAR(half_finished_state(HalfFinished::second({1.0, 1.0}, {2.0, -1.0}), 10).norm(), 1.0, 1e-14);
  EXPECT_THROW(half_finished_state(HalfFinished::first(1.0), 2), DimensionError);
  EXPECT_THROW(half_finished_state(HalfFinished{3, 0.0, 0.0}, 10), InvalidArgument);
}

TEST(HalfFinishedState, OrderOneFromSeed) {
  const Complex alpha_in(0.0, 1.83218);
  const Complex a1 = 1.0 / std::conj(alpha_in);
  EXPECT_NEAR(a1.imag(), 0.545798, 1e-6);
  EXPECT_NEAR(a1.real(), 0.0, 1e-15);
  // a^dag |alpha_in> equals D(alpha_in)(|0> + a1 |1>) up to normalization.
  const StateVector circuit = normalize(add_photon(coherent(alpha_in, 100)));
  const StateVector expect = displace(half_finished_state(HalfFinished::first(a1), 100), alpha_in);
  EXPECT_LT(phase_free_diff(circuit, expect), 1e-10);
}
