#include "catsim/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "catsim/error.hpp"

namespace catsim {

namespace {

struct Simplex {
  std::vector<std::vector<double>> x;
  std::vector<double> f;
};

class Search {
public:
  Search(const Objective& f, std::size_t n, int budget) : f_(f), n_(n), budget_(budget) {}

  double eval(std::span<const double> x) {
    ++used_;
    const double v = f_(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  }

  bool exhausted() const { return used_ >= budget_; }
  int used() const { return used_; }

  Simplex build(const std::vector<double>& x0, std::span<const double> steps) {
    Simplex s;
    s.x.push_back(x0);
    for (std::size_t i = 0; i < n_; ++i) {
      auto v = x0;
      v[i] += steps[i];
      s.x.push_back(std::move(v));
    }
    for (const auto& v : s.x)
      s.f.push_back(eval(v));
    return s;
  }

  // Returns true when the objective spread fell below ftol.
  bool run(Simplex& s, double ftol) {
    const std::size_t m = n_ + 1;
    std::vector<std::size_t> order(m);
    std::vector<double> centroid(n_), xr(n_), xe(n_), xc(n_);
    for (;;) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return s.f[a] < s.f[b]; });
      const std::size_t best = order.front();
      const std::size_t worst = order.back();
      const std::size_t second = order[m - 2];
      if (s.f[worst] - s.f[best] <= ftol)
        return true;
      if (exhausted())
        return false;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t k = 0; k + 1 < m; ++k)
        for (std::size_t i = 0; i < n_; ++i)
          centroid[i] += s.x[order[k]][i];
      for (auto& c : centroid)
        c /= static_cast<double>(n_);

      const auto& xw = s.x[worst];
      for (std::size_t i = 0; i < n_; ++i)
        xr[i] = centroid[i] + (centroid[i] - xw[i]);
      const double fr = eval(xr);

      if (fr < s.f[best]) {
        for (std::size_t i = 0; i < n_; ++i)
          xe[i] = centroid[i] + 2.0 * (centroid[i] - xw[i]);
        const double fe = eval(xe);
        if (fe < fr) {
          s.x[worst] = xe;
          s.f[worst] = fe;
        } else {
          s.x[worst] = xr;
          s.f[worst] = fr;
        }
        continue;
      }
      if (fr < s.f[second]) {
        s.x[worst] = xr;
        s.f[worst] = fr;
        continue;
      }

      const bool outside = fr < s.f[worst];
      for (std::size_t i = 0; i < n_; ++i)
        xc[i] = outside ? centroid[i] + 0.5 * (xr[i] - centroid[i])
                        : centroid[i] + 0.5 * (xw[i] - centroid[i]);
      const double fc = eval(xc);
      if (fc < (outside ? fr : s.f[worst])) {
        s.x[worst] = xc;
        s.f[worst] = fc;
        continue;
      }

      const auto xb = s.x[best];
      for (std::size_t k = 0; k < m; ++k) {
        if (k == best)
          continue;
        for (std::size_t i = 0; i < n_; ++i)
          s.x[k][i] = xb[i] + 0.5 * (s.x[k][i] - xb[i]);
        s.f[k] = eval(s.x[k]);
      }
    }
  }

private:
  const Objective& f_;
  std::size_t n_;
  int budget_;
  int used_ = 0;
};

} // namespace

SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, std::span<const double> steps,
                          const SimplexOptions& options) {
  const std::size_t n = x0.size();
  if (n == 0 || steps.size() != n)
    throw InvalidArgument("nelder_mead: empty start point or mismatched step vector");

  Search search(f, n, options.max_evaluations);
  Simplex s = search.build(x0, steps);
  bool converged = search.run(s, options.ftol);

  auto best_of = [](const Simplex& sx) {
    return static_cast<std::size_t>(std::min_element(sx.f.begin(), sx.f.end()) - sx.f.begin());
  };

  // Rebuild around the best vertex: a collapsed simplex can report a small
  // spread away from a minimum.
  std::vector<double> rebuild_steps(steps.begin(), steps.end());
  for (int k = 0; converged && k < options.max_rebuilds && !search.exhausted(); ++k) {
    const std::size_t b = best_of(s);
    const double before = s.f[b];
    for (auto& st : rebuild_steps)
      st *= 0.1;
    Simplex t = search.build(s.x[b], rebuild_steps);
    converged = search.run(t, options.ftol);
    const std::size_t tb = best_of(t);
    const bool improved = t.f[tb] < before - options.ftol;
    if (t.f[tb] <= before)
      s = std::move(t);
    if (!improved)
      break;
  }

  const std::size_t b = best_of(s);
  return {s.x[b], s.f[b], search.used(), converged};
}

} // namespace catsim
