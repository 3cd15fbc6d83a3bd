#include "catsim/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "catsim/error.hpp"

namespace catsim {

namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
constexpr double kImagResidual = 1e-10;

double gauss(double dx, double dp) { return kTwoOverPi * std::exp(-2.0 * dx * dx - 2.0 * dp * dp); }

void require_sign(int s, const char* where) {
  if (s != 1 && s != -1)
    throw InvalidArgument(std::string(where) + ": q_sign must be +1 or -1");
}

double cat_prefactor(int q_sign, Complex a) {
  const double denom = 1.0 + q_sign * std::exp(-2.0 * std::norm(a));
  if (denom < 1e-12)
    throw DegenerateCatError("cat Wigner function: odd cat with vanishing amplitude");
  return 1.0 / (2.0 * denom);
}

// Cat Wigner function at the (already transformed) point (u, v).
double cat_at(int q_sign, Complex a, double u, double v) {
  const double xs = a.real();
  const double ps = a.imag();
  const double w0 = gauss(u - xs, v - ps);
  const double wm = gauss(u + xs, v + ps);
  const double xi = kTwoOverPi * std::exp(-2.0 * u * u - 2.0 * v * v) * std::cos(4.0 * (u * ps - v * xs));
  return cat_prefactor(q_sign, a) * (w0 + wm + 2.0 * q_sign * xi);
}

} // namespace

double w_scs(int q_sign, Complex alpha_scs, PhasePoint at) {
  require_sign(q_sign, "w_scs");
  return cat_at(q_sign, alpha_scs, at.x, at.p);
}

double w_dsscs(int q_sign, const TargetCat& target, PhasePoint at) {
  require_sign(q_sign, "w_dsscs");
  const double u = (at.x - target.disp.real()) / std::exp(target.squeeze);
  const double v = (at.p - target.disp.imag()) / std::exp(-target.squeeze);
  return cat_at(q_sign, target.alpha_scs, u, v);
}

double w_dsscs_substituted(int q_sign, const TargetCat& target, PhasePoint at) {
  require_sign(q_sign, "w_dsscs_substituted");
  const Complex d = at.alpha() - target.disp;
  const Complex b = std::cosh(target.squeeze) * d - std::sinh(target.squeeze) * std::conj(d);
  return w_scs(q_sign, target.alpha_scs, {b.real(), b.imag()});
}

double w2_grouped(Complex center, PhasePoint at) {
  const double X = at.x - center.real();
  const double P = at.p - center.imag();
  const double X2 = X * X;
  const double P2 = P * P;
  const double poly = 1.0 + 4.0 * (2.0 * X2 + 2.0 * P2 - 1.0) + 3.0 + 4.0 * (2.0 * X2 - 3.0) * X2 +
                      4.0 * (2.0 * P2 - 3.0) * P2 + (1.0 - 4.0 * X2) * (1.0 - 4.0 * P2);
  return gauss(X, P) * poly;
}

double w_halffinished(const HalfFinished& h, Complex center, PhasePoint at) {
  if (h.order != 1 && h.order != 2)
    throw InvalidArgument("w_halffinished: order must be 1 or 2");
  const Complex d = at.alpha() - center;
  const double u = std::norm(d);
  const double y = gauss(d.real(), d.imag());

  const double w0 = y;
  const double w1 = y * (4.0 * u - 1.0);
  const double x01 = 4.0 * y * (h.a1 * std::conj(d)).real();
  if (h.order == 1)
    return (w0 + std::norm(h.a1) * w1 + x01) / (1.0 + std::norm(h.a1));

  const double w2 = y * (1.0 - 8.0 * u + 8.0 * u * u);
  const double x02 = 4.0 * std::numbers::sqrt2 * y * (h.a2 * std::conj(d) * std::conj(d)).real();
  const double x12 = 4.0 * std::numbers::sqrt2 * y * (h.a1 * std::conj(h.a2) * d).real() * (2.0 * u - 1.0);
  return (w0 + std::norm(h.a1) * w1 + std::norm(h.a2) * w2 + x01 + x02 + x12) /
         (1.0 + std::norm(h.a1) + std::norm(h.a2));
}

NumericWigner::NumericWigner(const DensityMatrix& rho) {
  const int dim = rho.dim();
  for (int n = 0; n < dim; ++n)
    if (rho(n, n).real() > 1e-32)
      support_ = n + 1;
  bands_.resize(support_);
  conj_bands_.resize(support_);
  for (int k = 0; k < support_; ++k) {
    for (int n = 0; n + k < support_; ++n) {
      bands_[k].push_back(rho(n + k, n));
      conj_bands_[k].push_back(rho(n, n + k));
    }
  }
  scale_ = std::max(1.0, rho.entries().cwiseAbs().maxCoeff());
}

double NumericWigner::operator()(PhasePoint at) const {
  // W for |n+k><n| is (2/pi) (-1)^n e^{-ik phi} l_n^k(X), X = 4|alpha|^2,
  // l_n^k = sqrt(n!/(n+k)!) X^{k/2} e^{-X/2} L_n^k(X).
  const double X = 4.0 * (at.x * at.x + at.p * at.p);
  const double phi = std::atan2(at.p, at.x);
  const double logx = X > 0.0 ? std::log(X) : 0.0;

  Complex total = 0.0;
  for (int k = 0; k < support_; ++k) {
    double l0 = 0.0;
    if (X > 0.0)
      l0 = std::exp(0.5 * k * logx - 0.5 * X - 0.5 * std::lgamma(k + 1.0));
    else if (k == 0)
      l0 = 1.0;
    const auto& band = bands_[k];
    const auto& cband = conj_bands_[k];
    Complex s = 0.0;
    Complex sc = 0.0;
    double prev = 0.0;
    double cur = l0;
    for (std::size_t n = 0; n < band.size(); ++n) {
      const double signed_l = (n % 2 == 0) ? cur : -cur;
      s += signed_l * band[n];
      sc += signed_l * cband[n];
      const double dn = static_cast<double>(n);
      const double next = ((2.0 * dn + 1.0 + k - X) * cur - std::sqrt(dn * (dn + k)) * prev) /
                          std::sqrt((dn + 1.0) * (dn + 1.0 + k));
      prev = cur;
      cur = next;
    }
    const Complex ph = std::polar(1.0, -k * phi);
    total += ph * s;
    if (k > 0)
      total += std::conj(ph) * sc;
  }
  total *= kTwoOverPi;
  if (std::abs(total.imag()) > kImagResidual * scale_)
    throw TruncationError("w_numeric: imaginary residual above threshold");
  return total.real();
}

double w_numeric(const DensityMatrix& rho, PhasePoint at) { return NumericWigner(rho)(at); }

double w_numeric(const StateVector& psi, PhasePoint at) { return w_numeric(outer(normalize(psi)), at); }

OperatorMatrix displaced_parity_op(Complex alpha, int dim) {
  const OperatorMatrix d = displacement_op(alpha, dim);
  return OperatorMatrix(kTwoOverPi * (d * parity_op(dim) * d.adjoint()).entries());
}

void GridWindow::validate() const {
  if (nx < 2 || np < 2)
    throw InvalidArgument("GridWindow: need at least 2 points per axis");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(p_min) || !std::isfinite(p_max))
    throw InvalidArgument("GridWindow: extents must be finite");
  if (!(x_max > x_min) || !(p_max > p_min))
    throw InvalidArgument("GridWindow: empty extent");
}

double WignerGrid::norm() const {
  double s = 0.0;
  for (double v : values)
    s += v;
  return s * window.dx() * window.dp();
}

double WignerGrid::max_abs_diff(const WignerGrid& other) const {
  if (values.size() != other.values.size())
    throw DimensionError("WignerGrid: grids differ in size");
  double m = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k)
    m = std::max(m, std::abs(values[k] - other.values[k]));
  return m;
}

Marginals marginals(const WignerGrid& grid) {
  const GridWindow& w = grid.window;
  Marginals m{std::vector<double>(w.nx, 0.0), std::vector<double>(w.np, 0.0)};
  for (int j = 0; j < w.np; ++j)
    for (int i = 0; i < w.nx; ++i) {
      const double v = grid.at(i, j);
      m.x_dist[i] += v * w.dp();
      m.p_dist[j] += v * w.dx();
    }
  return m;
}

double centroid(const std::vector<double>& dist, double lo, double step) {
  double mass = 0.0;
  double first = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    mass += dist[k];
    first += dist[k] * (lo + static_cast<double>(k) * step);
  }
  if (mass == 0.0)
    throw InvalidArgument("centroid: distribution has zero mass");
  return first / mass;
}

double evaluate(const WignerSource& source, PhasePoint at) {
  struct Visitor {
    PhasePoint at;
    double operator()(const ScsSource& s) const { return w_scs(s.q_sign, s.alpha_scs, at); }
    double operator()(const DsscsSource& s) const { return w_dsscs(s.q_sign, s.target, at); }
    double operator()(const HalfFinishedSource& s) const { return w_halffinished(s.h, s.center, at); }
    double operator()(const DensityMatrix& rho) const { return w_numeric(rho, at); }
  };
  return std::visit(Visitor{at}, source);
}

WignerGrid make_grid(const WignerSource& source, const GridWindow& window) {
  window.validate();
  WignerGrid grid;
  grid.window = window;
  grid.values.resize(static_cast<std::size_t>(window.nx) * window.np);

  auto fill = [&](auto&& f) {
    for (int j = 0; j < window.np; ++j)
      for (int i = 0; i < window.nx; ++i)
        grid.values[static_cast<std::size_t>(j) * window.nx + i] = f(PhasePoint{grid.x(i), grid.p(j)});
  };
  if (const auto* rho = std::get_if<DensityMatrix>(&source)) {
    const NumericWigner w(*rho);
    fill(w);
  } else {
    fill([&](PhasePoint at) { return evaluate(source, at); });
  }
  return grid;
}

} // namespace catsim
