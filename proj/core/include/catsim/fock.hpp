#pragma once

// Dense linear algebra on a truncated single-mode Fock space.
//
// Index n of a vector or matrix row/column is the Fock level |n>. All
// builders are pure functions of their arguments: identical inputs give
// bitwise-identical outputs, and every value type is immutable after
// construction, so everything here may be used from several threads.

#include <span>
#include <vector>

#include "catsim/expm.hpp"

namespace catsim {

inline constexpr double kNormTolerance = 1e-10;

/// Amplitudes over |0>..|dim-1>, plus the norm the vector had before it was
/// normalized (1 for states built normalized).
class StateVector {
public:
  /// The vacuum |0> in a space of dimension `dim`.
  explicit StateVector(int dim);
  explicit StateVector(CVector amps, double scale = 1.0);

  static StateVector fock(int n, int dim);

  int dim() const { return static_cast<int>(amps_.size()); }
  const CVector& amps() const { return amps_; }
  Complex operator[](int n) const { return amps_[n]; }
  double scale() const { return scale_; }

  double norm() const { return amps_.norm(); }
  bool is_normalized(double eps = kNormTolerance) const;

  /// Probability mass in the top eighth of the space, sum_{n >= dim - dim/8}.
  /// Large values mean the truncation is distorting the state.
  double tail_mass() const;

private:
  CVector amps_;
  double scale_ = 1.0;
};

/// Square matrix; row = output level, column = input level.
class OperatorMatrix {
public:
  explicit OperatorMatrix(CMatrix entries);

  static OperatorMatrix identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& entries() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  OperatorMatrix adjoint() const { return OperatorMatrix(m_.adjoint()); }
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;

  /// max |(M^dag M - I)_{ij}| over the top-left block x block corner.
  double unitarity_defect(int block) const;

private:
  CMatrix m_;
};

struct WeightedDensity;

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
public:
  /// Validates hermiticity (< 1e-12), trace (|tr - 1| < 1e-10) and, when
  /// `check_spectrum` is set, eigenvalues >= -1e-10.
  static DensityMatrix from_matrix(CMatrix m, bool check_spectrum = true);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& entries() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }
  double trace() const { return m_.trace().real(); }
  double hermiticity_defect() const;
  double min_eigenvalue() const;

private:
  explicit DensityMatrix(CMatrix m) : m_(std::move(m)) {}
  friend DensityMatrix outer(const StateVector& v);
  friend DensityMatrix mix(std::span<const WeightedDensity> parts);

  CMatrix m_;
};

struct WeightedDensity {
  double weight;
  DensityMatrix rho;
};

/// |alpha|^2 <= dim / 4: below this the truncated displacement is exact to
/// well under 1e-9 on the lower half of the space.
bool truncation_safe(Complex alpha, int dim);

OperatorMatrix create_op(int dim);
OperatorMatrix annihilate_op(int dim);

/// Truncated exponential of alpha a^dag - alpha^* a. Column 0 is the
/// coherent state |alpha>.
OperatorMatrix displacement_op(Complex alpha, int dim);

/// Truncated exponential of (r/2)(a^dag^2 - a^2). Real; couples levels of
/// equal parity only.
OperatorMatrix squeeze_op(double r, int dim);

/// diag((-1)^n).
OperatorMatrix parity_op(int dim);

SparseCMatrix displacement_generator(Complex alpha, int dim);
SparseCMatrix squeeze_generator(double r, int dim);

/// apply(displacement_op(alpha, dim), v) without forming the dense matrix.
StateVector displace(const StateVector& v, Complex alpha);
/// apply(squeeze_op(r, dim), v) without forming the dense matrix.
StateVector squeeze(const StateVector& v, double r);
/// a^dag v (top level is dropped).
StateVector add_photon(const StateVector& v);

/// S(r)|n> from the closed-form squeezed vacuum and the ladder relation
/// S a^dag S^dag = a^dag cosh r - a sinh r. O(dim) per level.
std::vector<CVector> squeezed_fock_columns(double r, int nmax, int dim);

Complex inner(const StateVector& a, const StateVector& b);
double norm(const StateVector& a);
/// Unit vector along `a`; the result's scale() is the norm of `a`.
StateVector normalize(const StateVector& a);
StateVector apply(const OperatorMatrix& m, const StateVector& v);
/// |<a|b>|^2 of the normalized arguments.
double overlap_sq(const StateVector& a, const StateVector& b);

DensityMatrix outer(const StateVector& v);
/// Convex combination. Weights must be >= 0 and sum to 1 within 1e-12.
DensityMatrix mix(std::span<const WeightedDensity> parts);

} // namespace catsim
