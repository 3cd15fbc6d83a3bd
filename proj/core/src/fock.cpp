#include "catsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "catsim/diagnostics.hpp"
#include "catsim/error.hpp"

namespace catsim {

namespace {

void require_dim(int dim, int minimum, const char* what) {
  if (dim < minimum) {
    std::ostringstream os;
    os << what << ": dimension " << dim << " is below the minimum " << minimum;
    throw DimensionError(os.str());
  }
}

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite())
    throw InvalidArgument(std::string(what) + ": non-finite entries");
}

} // namespace

// StateVector ---------------------------------------------------------------

StateVector::StateVector(int dim) {
  require_dim(dim, 1, "StateVector");
  amps_ = CVector::Zero(dim);
  amps_[0] = 1.0;
}

StateVector::StateVector(CVector amps, double scale) : amps_(std::move(amps)), scale_(scale) {
  require_dim(static_cast<int>(amps_.size()), 1, "StateVector");
  if (!amps_.allFinite())
    throw InvalidArgument("StateVector: non-finite amplitude");
  if (!(scale_ >= 0.0) || !std::isfinite(scale_))
    throw InvalidArgument("StateVector: scale must be a finite nonnegative number");
}

StateVector StateVector::fock(int n, int dim) {
  require_dim(dim, 1, "StateVector::fock");
  if (n < 0 || n >= dim)
    throw DimensionError("StateVector::fock: level outside the truncated space");
  CVector v = CVector::Zero(dim);
  v[n] = 1.0;
  return StateVector(std::move(v));
}

bool StateVector::is_normalized(double eps) const {
  return std::abs(amps_.squaredNorm() - 1.0) <= eps;
}

double StateVector::tail_mass() const {
  const int d = dim();
  const int start = d - d / 8;
  double mass = 0.0;
  for (int n = start; n < d; ++n)
    mass += std::norm(amps_[n]);
  return mass;
}

// OperatorMatrix ------------------------------------------------------------

OperatorMatrix::OperatorMatrix(CMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols())
    throw DimensionError("OperatorMatrix: matrix is not square");
  require_dim(static_cast<int>(m_.rows()), 1, "OperatorMatrix");
  require_finite(m_, "OperatorMatrix");
}

OperatorMatrix OperatorMatrix::identity(int dim) {
  require_dim(dim, 1, "OperatorMatrix::identity");
  return OperatorMatrix(CMatrix::Identity(dim, dim));
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  require_same_dim(dim(), rhs.dim(), "OperatorMatrix product");
  return OperatorMatrix(m_ * rhs.m_);
}

double OperatorMatrix::unitarity_defect(int block) const {
  block = std::clamp(block, 0, dim());
  const CMatrix g = (m_.adjoint() * m_).topLeftCorner(block, block);
  return (g - CMatrix::Identity(block, block)).cwiseAbs().maxCoeff();
}

// DensityMatrix -------------------------------------------------------------

DensityMatrix DensityMatrix::from_matrix(CMatrix m, bool check_spectrum) {
  if (m.rows() != m.cols())
    throw DimensionError("DensityMatrix: matrix is not square");
  require_dim(static_cast<int>(m.rows()), 1, "DensityMatrix");
  require_finite(m, "DensityMatrix");
  DensityMatrix rho(std::move(m));
  if (rho.hermiticity_defect() >= 1e-12)
    throw InvalidArgument("DensityMatrix: not Hermitian");
  if (std::abs(rho.m_.trace() - Complex(1.0)) >= 1e-10)
    throw InvalidArgument("DensityMatrix: trace differs from 1");
  if (check_spectrum && rho.min_eigenvalue() < -1e-10)
    throw InvalidArgument("DensityMatrix: negative eigenvalue");
  return rho;
}

double DensityMatrix::hermiticity_defect() const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

// Builders ------------------------------------------------------------------

bool truncation_safe(Complex alpha, int dim) {
  return std::norm(alpha) <= dim / 4.0;
}

OperatorMatrix create_op(int dim) {
  require_dim(dim, 2, "create_op");
  CMatrix m = CMatrix::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n)
    m(n + 1, n) = std::sqrt(static_cast<double>(n + 1));
  return OperatorMatrix(std::move(m));
}

OperatorMatrix annihilate_op(int dim) {
  require_dim(dim, 2, "annihilate_op");
  CMatrix m = CMatrix::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n)
    m(n, n + 1) = std::sqrt(static_cast<double>(n + 1));
  return OperatorMatrix(std::move(m));
}

SparseCMatrix displacement_generator(Complex alpha, int dim) {
  require_dim(dim, 2, "displacement_generator");
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(2 * (dim - 1));
  for (int n = 0; n + 1 < dim; ++n) {
    const double s = std::sqrt(static_cast<double>(n + 1));
    entries.emplace_back(n + 1, n, alpha * s);
    entries.emplace_back(n, n + 1, -std::conj(alpha) * s);
  }
  SparseCMatrix g(dim, dim);
  g.setFromTriplets(entries.begin(), entries.end());
  return g;
}

SparseCMatrix squeeze_generator(double r, int dim) {
  require_dim(dim, 2, "squeeze_generator");
  std::vector<Eigen::Triplet<Complex>> entries;
  for (int n = 0; n + 2 < dim; ++n) {
    const double s = 0.5 * r * std::sqrt(static_cast<double>(n + 1) * (n + 2));
    entries.emplace_back(n + 2, n, s);
    entries.emplace_back(n, n + 2, -s);
  }
  SparseCMatrix g(dim, dim);
  g.setFromTriplets(entries.begin(), entries.end());
  return g;
}

OperatorMatrix displacement_op(Complex alpha, int dim) {
  require_dim(dim, 2, "displacement_op");
  if (!truncation_safe(alpha, dim)) {
    std::ostringstream os;
    os << "displacement_op: |alpha|^2 = " << std::norm(alpha) << " exceeds dim/4 = " << dim / 4.0;
    warn(os.str());
  }
  return OperatorMatrix(expm(CMatrix(displacement_generator(alpha, dim))));
}

OperatorMatrix squeeze_op(double r, int dim) {
  require_dim(dim, 2, "squeeze_op");
  if (std::abs(r) > 1.5) {
    std::ostringstream os;
    os << "squeeze_op: |r| = " << std::abs(r) << " exceeds 1.5";
    warn(os.str());
  }
  // The generator is real, so the exponential is real up to roundoff in the
  // complex arithmetic; drop that roundoff so the result is exactly real.
  CMatrix m = expm(CMatrix(squeeze_generator(r, dim)));
  m = m.real().cast<Complex>();
  return OperatorMatrix(std::move(m));
}

OperatorMatrix parity_op(int dim) {
  require_dim(dim, 1, "parity_op");
  CMatrix m = CMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n)
    m(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return OperatorMatrix(std::move(m));
}

StateVector displace(const StateVector& v, Complex alpha) {
  if (alpha == Complex(0.0))
    return v;
  return StateVector(expm_multiply(displacement_generator(alpha, v.dim()), v.amps()), v.scale());
}

StateVector squeeze(const StateVector& v, double r) {
  if (r == 0.0)
    return v;
  return StateVector(expm_multiply(squeeze_generator(r, v.dim()), v.amps()), v.scale());
}

StateVector add_photon(const StateVector& v) {
  const int d = v.dim();
  require_dim(d, 2, "add_photon");
  CVector out = CVector::Zero(d);
  for (int n = 0; n + 1 < d; ++n)
    out[n + 1] = std::sqrt(static_cast<double>(n + 1)) * v[n];
  return StateVector(std::move(out), v.scale());
}

std::vector<CVector> squeezed_fock_columns(double r, int nmax, int dim) {
  require_dim(dim, 2, "squeezed_fock_columns");
  if (nmax < 0 || nmax >= dim)
    throw DimensionError("squeezed_fock_columns: nmax outside the truncated space");

  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  const double th = std::tanh(r);

  // S(r)|0> = (cosh r)^{-1/2} sum_m tanh(r)^m sqrt((2m)!)/(2^m m!) |2m>
  CVector vac = CVector::Zero(dim);
  double c = 1.0 / std::sqrt(ch);
  for (int m = 0; 2 * m < dim; ++m) {
    vac[2 * m] = c;
    c *= th * std::sqrt((2.0 * m + 1.0) / (2.0 * m + 2.0));
  }

  std::vector<CVector> cols;
  cols.reserve(nmax + 1);
  cols.push_back(std::move(vac));
  for (int n = 0; n < nmax; ++n) {
    const CVector& prev = cols.back();
    CVector next = CVector::Zero(dim);
    for (int k = 0; k < dim; ++k) {
      Complex acc = 0.0;
      if (k >= 1)
        acc += ch * std::sqrt(static_cast<double>(k)) * prev[k - 1];
      if (k + 1 < dim)
        acc -= sh * std::sqrt(static_cast<double>(k + 1)) * prev[k + 1];
      next[k] = acc;
    }
    next /= std::sqrt(static_cast<double>(n + 1));
    cols.push_back(std::move(next));
  }
  return cols;
}

// Linear algebra ------------------------------------------------------------

Complex inner(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner");
  return a.amps().dot(b.amps()); // Eigen's dot conjugates the left operand
}

double norm(const StateVector& a) { return a.norm(); }

StateVector normalize(const StateVector& a) {
  const double n = a.norm();
  if (n == 0.0 || !std::isfinite(n))
    throw InvalidArgument("normalize: zero vector");
  return StateVector(a.amps() / n, n);
}

StateVector apply(const OperatorMatrix& m, const StateVector& v) {
  require_same_dim(m.dim(), v.dim(), "apply");
  return StateVector(m.entries() * v.amps(), v.scale());
}

double overlap_sq(const StateVector& a, const StateVector& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0)
    throw InvalidArgument("overlap_sq: zero vector");
  return std::norm(inner(a, b)) / (na * na * nb * nb);
}

DensityMatrix outer(const StateVector& v) {
  if (!v.is_normalized())
    throw InvalidArgument("outer: state is not normalized");
  CMatrix m = v.amps() * v.amps().adjoint();
  // Renormalize the trace to absorb the <= 1e-10 slack allowed above.
  m /= m.trace().real();
  return DensityMatrix(std::move(m));
}

DensityMatrix mix(std::span<const WeightedDensity> parts) {
  if (parts.empty())
    throw InvalidArgument("mix: no components");
  double total = 0.0;
  for (const auto& p : parts) {
    if (!(p.weight >= 0.0))
      throw InvalidArgument("mix: negative weight");
    require_same_dim(p.rho.dim(), parts.front().rho.dim(), "mix");
    total += p.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidArgument("mix: weights do not sum to 1");
  const int d = parts.front().rho.dim();
  CMatrix m = CMatrix::Zero(d, d);
  for (const auto& p : parts)
    m += p.weight * p.rho.entries();
  return DensityMatrix(std::move(m));
}

} // namespace catsim
