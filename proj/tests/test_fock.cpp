#include <cmath>
#include <numbers>
#include <string>

#include <gtest/gtest.h>

#include "catsim/error.hpp"
#include "catsim/fock.hpp"
#include "catsim/diagnostics.hpp"
#include "oracles.hpp"

using namespace catsim;

namespace {

double block_max(const CMatrix& m, int block) { return m.topLeftCorner(block, block).cwiseAbs().maxCoeff(); }

} // namespace

TEST(CreateOp, Dim2HasSingleEntry) {
  const OperatorMatrix a = create_op(2);
  EXPECT_EQ(a(1, 0), Complex(1.0));
  EXPECT_EQ(a(0, 0), Complex(0.0));
  EXPECT_EQ(a(0, 1), Complex(0.0));
  EXPECT_EQ(a(1, 1), Complex(0.0));
}

TEST(CreateOp, LadderOnFockTwo) {
  const StateVector out = apply(create_op(4), StateVector::fock(2, 4));
  EXPECT_NEAR(std::abs(out[3] - std::sqrt(3.0)), 0.0, 1e-15);
  EXPECT_EQ(out[0] + out[1] + out[2], Complex(0.0));
}

TEST(CreateOp, MatchesOracleAndAnnihilateIsAdjoint) {
  EXPECT_EQ((create_op(9).entries() - oracle::creation(9)).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((annihilate_op(9).entries() - oracle::creation(9).adjoint()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(CreateOp, RejectsTinyDimension) {
  EXPECT_THROW(create_op(1), DimensionError);
  EXPECT_THROW(annihilate_op(1), DimensionError);
  EXPECT_THROW(displacement_op(0.1, 1), DimensionError);
  EXPECT_THROW(squeeze_op(0.1, 1), DimensionError);
  EXPECT_THROW(parity_op(0), DimensionError);
}

TEST(Displacement, LadderIdentityOnLowLevels) {
  const int dim = 80;
  const Complex alpha(0.7, 0.3);
  const OperatorMatrix d = displacement_op(alpha, dim);
  const OperatorMatrix ad = create_op(dim);
  for (int n = 0; n < 40; n += 3) {
    const StateVector v = StateVector::fock(n, dim);
    const CVector lhs = apply(d.adjoint() * ad * d, v).amps();
    const CVector rhs = apply(ad, v).amps() + std::conj(alpha) * v.amps();
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-8) << "n = " << n;
  }
}

TEST(Displacement, WarnsOutsideSafeRange) {
  std::string seen;
  auto prev = set_warning_sink([&](const std::string& m) { seen = m; });
  EXPECT_TRUE(truncation_safe(Complex(0.0, 5.0), 100));
  EXPECT_FALSE(truncation_safe(Complex(0.0, 5.01), 100));
  displacement_op(Complex(3.0, 0.0), 20);
  set_warning_sink(std::move(prev));
  EXPECT_NE(seen.find("displacement_op"), std::string::npos);
}

TEST(Displacement, ZeroIsIdentity) {
  EXPECT_EQ((displacement_op(0.0, 10).entries() - CMatrix::Identity(10, 10)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Displacement, VacuumElement) {
  EXPECT_NEAR(displacement_op(1.0, 60)(0, 0).real(), 0.6065306597, 1e-10);
}

TEST(Displacement, InverseOnSafeBlock) {
  const int dim = 100;
  const Complex a(0.0, 1.5);
  const CMatrix prod = (displacement_op(a, dim) * displacement_op(-a, dim)).entries();
  EXPECT_LT(block_max(prod - CMatrix::Identity(dim, dim), dim / 2), 1e-8);
}

TEST(Displacement, ColumnZeroIsCoherent) {
  const int dim = 100;
  for (Complex a : {Complex(0.4, -0.2), Complex(0.0, 2.5), Complex(-3.0, 3.5), Complex(5.0, 0.0)}) {
    ASSERT_TRUE(truncation_safe(a, dim));
    const OperatorMatrix d = displacement_op(a, dim);
    for (int n = 0; n <= dim / 2; ++n)
      EXPECT_NEAR(std::abs(d(n, 0) - oracle::coherent_amp(n, a)), 0.0, 1e-9) << a << " n=" << n;
  }
}

TEST(Displacement, MatchesClosedFormMatrixElements) {
  const int dim = 100;
  const Complex a(-0.8, 1.1);
  const OperatorMatrix d = displacement_op(a, dim);
  for (int m = 0; m < 30; m += 2)
    for (int n = 0; n < 30; n += 3)
      EXPECT_NEAR(std::abs(d(m, n) - oracle::displacement_element(m, n, a)), 0.0, 1e-10);
}

TEST(Displacement, BchComposition) {
  const int dim = 100;
  const Complex a(0.5, 0.2), b(-0.3, 0.6);
  const CMatrix lhs = (displacement_op(a, dim) * displacement_op(b, dim)).entries();
  const CMatrix rhs = std::polar(1.0, (a * std::conj(b)).imag()) * displacement_op(a + b, dim).entries();
  EXPECT_LT(block_max(lhs - rhs, dim / 2), 1e-7);
}

TEST(Displacement, UnitarityDefectOnHalfBlock) {
  EXPECT_LT(displacement_op(Complex(2.0, -3.0), 100).unitarity_defect(50), 1e-8);
  EXPECT_LT(squeeze_op(-0.5, 100).unitarity_defect(50), 1e-8);
}

TEST(Displacement, SparseActionMatchesDense) {
  const int dim = 90;
  const Complex a(1.2, -0.4);
  CVector amps(dim);
  for (int n = 0; n < dim; ++n)
    amps[n] = std::polar(std::exp(-0.3 * n), 0.7 * n);
  const StateVector v = normalize(StateVector(amps));
  EXPECT_LT((displace(v, a).amps() - apply(displacement_op(a, dim), v).amps()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((squeeze(v, -0.4).amps() - apply(squeeze_op(-0.4, dim), v).amps()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Displacement, IsDeterministic) {
  const CMatrix a = displacement_op(Complex(0.3, 0.9), 40).entries();
  const CMatrix b = displacement_op(Complex(0.3, 0.9), 40).entries();
  EXPECT_EQ((a - b).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Squeeze, ZeroIsIdentity) {
  EXPECT_EQ((squeeze_op(0.0, 12).entries() - CMatrix::Identity(12, 12)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Squeeze, VacuumElementClosedForm) {
  const double r = -0.207344;
  EXPECT_NEAR(squeeze_op(r, 100)(0, 0).real(), 1.0 / std::sqrt(std::cosh(r)), 1e-8);
}

TEST(Squeeze, ParitySelectionIsExact) {
  const OperatorMatrix s = squeeze_op(-0.45, 60);
  EXPECT_EQ(s(1, 0), Complex(0.0));
  for (int i = 0; i < 60; ++i)
    for (int j = 0; j < 60; ++j) {
      if ((i + j) % 2)
        EXPECT_EQ(s(i, j), Complex(0.0)) << i << "," << j;
      EXPECT_EQ(s(i, j).imag(), 0.0);
    }
}

TEST(Squeeze, InverseOnSafeBlock) {
  const int dim = 100;
  const CMatrix prod = (squeeze_op(0.6, dim) * squeeze_op(-0.6, dim)).entries();
  EXPECT_LT(block_max(prod - CMatrix::Identity(dim, dim), dim / 2), 1e-7);
}

TEST(Squeeze, MatchesEigendecompositionOracle) {
  // The oracle exponentiates in a larger space so its truncation is negligible.
  const int big = 200, dim = 40;
  const CMatrix ad = oracle::creation(big);
  const CMatrix gen = 0.5 * -0.37 * (ad * ad - ad.adjoint() * ad.adjoint());
  const CMatrix ref = oracle::exp_antihermitian(gen);
  const OperatorMatrix s = squeeze_op(-0.37, 120);
  EXPECT_LT((s.entries().topLeftCorner(dim, dim) - ref.topLeftCorner(dim, dim)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Squeeze, LadderTransformation) {
  // S^dag a S = a cosh r + a^dag sinh r
  const int dim = 100;
  const double r = -0.3;
  const OperatorMatrix s = squeeze_op(r, dim);
  const CMatrix lhs = (s.adjoint() * annihilate_op(dim) * s).entries();
  const CMatrix rhs = std::cosh(r) * annihilate_op(dim).entries() + std::sinh(r) * create_op(dim).entries();
  EXPECT_LT(block_max(lhs - rhs, dim / 4), 1e-8);
}

TEST(Squeeze, ClosedFormColumnsMatchOperator) {
  const int dim = 100;
  for (double r : {-0.52, 0.0, 0.31}) {
    const auto cols = squeezed_fock_columns(r, 3, dim);
    const OperatorMatrix s = squeeze_op(r, dim);
    for (int n = 0; n <= 3; ++n)
      EXPECT_LT((cols[n] - s.entries().col(n)).head(dim / 2).cwiseAbs().maxCoeff(), 1e-11) << r << " " << n;
  }
  EXPECT_THROW(squeezed_fock_columns(0.1, 10, 10), DimensionError);
}

TEST(Parity, Dim3) {
  const OperatorMatrix p = parity_op(3);
  EXPECT_EQ(p(0, 0), Complex(1.0));
  EXPECT_EQ(p(1, 1), Complex(-1.0));
  EXPECT_EQ(p(2, 2), Complex(1.0));
  EXPECT_EQ((p * p).entries(), CMatrix::Identity(3, 3));
}

TEST(Parity, FlipsCoherentState) {
  const int dim = 60;
  const StateVector plus(displacement_op(1.0, dim).entries().col(0));
  const StateVector minus(displacement_op(-1.0, dim).entries().col(0));
  EXPECT_LT((apply(parity_op(dim), plus).amps() - minus.amps()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(LinearAlgebra, InnerProducts) {
  EXPECT_EQ(inner(StateVector(4), StateVector(4)), Complex(1.0));
  const int dim = 60;
  const StateVector p(displacement_op(1.0, dim).entries().col(0));
  const StateVector m(displacement_op(-1.0, dim).entries().col(0));
  EXPECT_NEAR(std::abs(inner(p, m)), 0.1353352832, 1e-10);
  CVector a = CVector::Zero(2), b = CVector::Zero(2);
  a[0] = Complex(0.0, 1.0);
  b[0] = 1.0;
  EXPECT_EQ(inner(StateVector(a), StateVector(b)), Complex(0.0, -1.0)); // left operand conjugated
  EXPECT_THROW(inner(StateVector(3), StateVector(4)), DimensionError);
}

TEST(LinearAlgebra, NormalizeRecordsScale) {
  CVector v = CVector::Zero(3);
  v[1] = 3.0;
  v[2] = Complex(0.0, 4.0);
  const StateVector n = normalize(StateVector(v));
  EXPECT_DOUBLE_EQ(n.scale(), 5.0);
  EXPECT_TRUE(n.is_normalized());
  EXPECT_THROW(normalize(StateVector(CVector::Zero(3))), InvalidArgument);
}

TEST(LinearAlgebra, TailMass) {
  CVector v = CVector::Zero(16);
  v[0] = std::sqrt(0.75);
  v[15] = 0.5;
  EXPECT_NEAR(StateVector(v).tail_mass(), 0.25, 1e-15);
}

TEST(DensityMatrixTest, OuterAndMix) {
  const DensityMatrix rho = outer(StateVector::fock(1, 4));
  EXPECT_NEAR(rho.trace(), 1.0, 1e-15);
  const WeightedDensity parts[] = {{0.5, rho}, {0.5, rho}};
  EXPECT_EQ((mix(parts).entries() - rho.entries()).cwiseAbs().maxCoeff(), 0.0);
  const WeightedDensity bad[] = {{0.7, rho}, {0.5, rho}};
  EXPECT_THROW(mix(bad), InvalidArgument);
  const WeightedDensity neg[] = {{1.5, rho}, {-0.5, rho}};
  EXPECT_THROW(mix(neg), InvalidArgument);
  const WeightedDensity dims[] = {{0.5, rho}, {0.5, outer(StateVector::fock(1, 5))}};
  EXPECT_THROW(mix(dims), DimensionError);
}

TEST(DensityMatrixTest, FromMatrixValidates) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  EXPECT_NO_THROW(DensityMatrix::from_matrix(m));
  CMatrix h = m;
  h(0, 1) = Complex(0.0, 0.1);
  EXPECT_THROW(DensityMatrix::from_matrix(h), InvalidArgument);
  CMatrix t = m;
  t(1, 1) = 0.6;
  EXPECT_THROW(DensityMatrix::from_matrix(t), InvalidArgument);
  CMatrix neg = CMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix::from_matrix(neg), InvalidArgument);
}
