#include "catsim/expm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace catsim {

double one_norm(const CMatrix& a) {
  if (a.size() == 0)
    return 0.0;
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

double one_norm(const SparseCMatrix& a) {
  double best = 0.0;
  for (int k = 0; k < a.outerSize(); ++k) {
    double col = 0.0;
    for (SparseCMatrix::InnerIterator it(a, k); it; ++it)
      col += std::abs(it.value());
    best = std::max(best, col);
  }
  return best;
}

CMatrix expm(const CMatrix& a) {
  const auto n = a.rows();
  const double norm = one_norm(a);
  int squarings = 0;
  if (norm > 0.5)
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const CMatrix scaled = a / std::ldexp(1.0, squarings);

  CMatrix result = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int k = 1; k < 64; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    result += term;
    if (one_norm(term) <= eps * one_norm(result))
      break;
  }
  for (int i = 0; i < squarings; ++i)
    result = (result * result).eval();
  return result;
}

CVector expm_multiply(const SparseCMatrix& a, const CVector& v) {
  const double norm = one_norm(a);
  const int steps = std::max(1, static_cast<int>(std::ceil(norm)));
  const double h = 1.0 / steps;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  CVector out = v;
  CVector term(v.size());
  for (int s = 0; s < steps; ++s) {
    term = out;
    for (int k = 1; k < 64; ++k) {
      term = (a * term) * (h / k);
      out += term;
      if (term.lpNorm<1>() <= eps * out.lpNorm<1>())
        break;
    }
  }
  return out;
}

} // namespace catsim
