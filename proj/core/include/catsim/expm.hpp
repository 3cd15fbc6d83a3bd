#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace catsim {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using SparseCMatrix = Eigen::SparseMatrix<Complex>;

/// Dense matrix exponential by scaling and squaring around a Taylor core.
/// The scaled matrix has 1-norm at most 1/2 and the series is summed until
/// the next term drops below unit roundoff relative to the partial sum.
CMatrix expm(const CMatrix& a);

/// exp(A) v without forming exp(A). A is split into s substeps with
/// |A/s|_1 <= 1 and each substep is a truncated Taylor series, which is
/// backward stable for the skew-Hermitian and real-symmetric-skew
/// generators used here.
CVector expm_multiply(const SparseCMatrix& a, const CVector& v);

/// Induced 1-norm (max absolute column sum).
double one_norm(const CMatrix& a);
double one_norm(const SparseCMatrix& a);

} // namespace catsim
