#include "condcop/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace condcop {

namespace {

// Calls fn(i) for i = 0..rows-1, distributing contiguous blocks of rows over
// `threads` workers. fn must only write to row-owned storage.
template <class Fn>
void for_rows(int rows, int threads, Fn&& fn) {
  threads = std::clamp(threads, 1, std::max(1, rows));
  if (threads == 1) {
    for (int i = 0; i < rows; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    const int lo = static_cast<int>(static_cast<long long>(rows) * t / threads);
    const int hi = static_cast<int>(static_cast<long long>(rows) * (t + 1) / threads);
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

double midpoint(int i, int m) { return (i + 0.5) / m; }
double lattice(int j, int m) { return static_cast<double>(j) / m; }

}  // namespace

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t h = v.size() / 2;
  return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

void validate(const Quadrature& q) {
  if (q.m < 8) throw std::invalid_argument("quadrature: m must be >= 8");
  if (q.threads < 1) throw std::invalid_argument("quadrature: threads must be >= 1");
}

double d_inf(const Copula& c1, const Copula& c2, const Quadrature& q) {
  validate(q);
  const int m = q.m;
  std::vector<double> row_max(static_cast<std::size_t>(m + 1), 0.0);
  for_rows(m + 1, q.threads, [&](int i) {
    const double x = lattice(i, m);
    double best = 0.0;
    for (int j = 0; j <= m; ++j) {
      const double y = lattice(j, m);
      best = std::max(best, std::abs(c1.cdf(x, y) - c2.cdf(x, y)));
    }
    row_max[static_cast<std::size_t>(i)] = best;
  });
  return *std::max_element(row_max.begin(), row_max.end());
}

double d_inf_error_bound(const Quadrature& q) { return 2.0 / q.m; }

KernelDistances kernel_distances(const Copula& c1, const Copula& c2,
                                 const Quadrature& q) {
  validate(q);
  const int m = q.m;
  const std::size_t ny = static_cast<std::size_t>(m - 1);
  std::vector<double> abs_diff(static_cast<std::size_t>(m) * ny);
  std::vector<double> row_abs(static_cast<std::size_t>(m));
  std::vector<double> row_sq(static_cast<std::size_t>(m));
  for_rows(m, q.threads, [&](int i) {
    const double x = midpoint(i, m);
    double* out = abs_diff.data() + static_cast<std::size_t>(i) * ny;
    double sa = 0.0;
    double ss = 0.0;
    for (int j = 1; j < m; ++j) {
      const double y = lattice(j, m);
      const double d = c1.kernel_cdf(x, y) - c2.kernel_cdf(x, y);
      out[j - 1] = std::abs(d);
      sa += std::abs(d);
      ss += d * d;
    }
    row_abs[static_cast<std::size_t>(i)] = sa;
    row_sq[static_cast<std::size_t>(i)] = ss;
  });
  const double w = 1.0 / (static_cast<double>(m) * m);
  KernelDistances out;
  out.d1 = pairwise_sum(row_abs) * w;
  out.d2_squared = pairwise_sum(row_sq) * w;
  for (std::size_t j = 0; j < ny; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += abs_diff[static_cast<std::size_t>(i) * ny + j];
    out.d_infty = std::max(out.d_infty, s / m);
  }
  return out;
}

double d1(const Copula& c1, const Copula& c2, const Quadrature& q) {
  return kernel_distances(c1, c2, q).d1;
}

double d2_squared(const Copula& c1, const Copula& c2, const Quadrature& q) {
  return kernel_distances(c1, c2, q).d2_squared;
}

double d_infty_metric(const Copula& c1, const Copula& c2, const Quadrature& q) {
  return kernel_distances(c1, c2, q).d_infty;
}

double partial_distance(const Copula& c1, const Copula& c2, const Quadrature& q) {
  return d1(c1, c2, q) + d1(transpose(c1), transpose(c2), q);
}

DependenceMeasures dependence_measures(const Copula& c, const Quadrature& q) {
  validate(q);
  const int m = q.m;
  const std::size_t ny = static_cast<std::size_t>(m - 1);
  std::vector<double> row_abs(static_cast<std::size_t>(m));
  for_rows(m, q.threads, [&](int i) {
    const double x = midpoint(i, m);
    double sa = 0.0;
    for (int j = 1; j < m; ++j) {
      const double y = lattice(j, m);
      sa += std::abs(c.kernel_cdf(x, y) - y);
    }
    row_abs[static_cast<std::size_t>(i)] = sa;
  });
  // r uses the exact x-average of the kernel over each cell,
  // m [C((i+1)/m, y) - C(i/m, y)], so that the averages integrate to y exactly
  // and r = 6 D2^2(C, Pi) holds on the nodes up to rounding.
  std::vector<double> cdf_rows(static_cast<std::size_t>(m + 1) * ny);
  for_rows(m + 1, q.threads, [&](int i) {
    const double x = lattice(i, m);
    double* out = cdf_rows.data() + static_cast<std::size_t>(i) * ny;
    for (int j = 1; j < m; ++j) out[j - 1] = c.cdf(x, lattice(j, m));
  });
  std::vector<double> row_sq(static_cast<std::size_t>(m));
  std::vector<double> row_k2(static_cast<std::size_t>(m));
  for_rows(m, q.threads, [&](int i) {
    const double* lo = cdf_rows.data() + static_cast<std::size_t>(i) * ny;
    const double* hi = lo + ny;
    double ss = 0.0;
    double sk = 0.0;
    for (int j = 1; j < m; ++j) {
      const double y = lattice(j, m);
      const double k = std::clamp((hi[j - 1] - lo[j - 1]) * m, 0.0, 1.0);
      const double d = k - y;
      ss += d * d;
      // K^2 - y^2 vanishes at y = 0 and y = 1, so the constant 2 = 6 int y^2
      // is integrated by the same rule.
      sk += k * k - y * y;
    }
    row_sq[static_cast<std::size_t>(i)] = ss;
    row_k2[static_cast<std::size_t>(i)] = sk;
  });
  const double w = 1.0 / (static_cast<double>(m) * m);
  DependenceMeasures out;
  out.zeta1 = 3.0 * pairwise_sum(row_abs) * w;
  out.r = 6.0 * pairwise_sum(row_k2) * w;
  out.r_via_d2 = 6.0 * pairwise_sum(row_sq) * w;
  return out;
}

double zeta1(const Copula& c, const Quadrature& q) { return dependence_measures(c, q).zeta1; }

double RMeasure::gap() const { return std::abs(value - via_d2); }

RMeasure r_measure_checked(const Copula& c, const Quadrature& q) {
  const DependenceMeasures d = dependence_measures(c, q);
  return {d.r, d.r_via_d2};
}

double r_measure(const Copula& c, const Quadrature& q) { return r_measure_checked(c, q).value; }

namespace {

struct GridCdf {
  std::span<const double> v;
  double scale;  // M = v.size() - 1

  double operator()(double z) const {
    if (z < 0.0) return 0.0;
    if (z >= 1.0) return 1.0;
    const double s = z * scale;
    const std::size_t j = std::min(static_cast<std::size_t>(s), v.size() - 2);
    const double f = s - static_cast<double>(j);
    return v[j] + f * (v[j + 1] - v[j]);
  }
};

bool levy_holds(const GridCdf& f, const GridCdf& g, double eps) {
  const std::size_t n = f.v.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double z = static_cast<double>(j) / f.scale;
    if (f.v[j] > g(z + eps) + eps) return false;
    if (g.v[j] > f(z + eps) + eps) return false;
    if (f(z - eps) - eps > g.v[j]) return false;
    if (g(z - eps) - eps > f.v[j]) return false;
  }
  return true;
}

}  // namespace

double levy_distance(std::span<const double> f, std::span<const double> g) {
  if (f.size() != g.size() || f.size() < 2) {
    throw std::invalid_argument("levy_distance: grids must match and have >= 2 points");
  }
  const GridCdf F{f, static_cast<double>(f.size() - 1)};
  const GridCdf G{g, static_cast<double>(g.size() - 1)};
  if (levy_holds(F, G, 0.0)) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 50; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (levy_holds(F, G, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double levy_distance(const std::function<double(double)>& f,
                     const std::function<double(double)>& g, int grid) {
  if (grid < 1) throw std::invalid_argument("levy_distance: grid must be >= 1");
  std::vector<double> fv(static_cast<std::size_t>(grid) + 1);
  std::vector<double> gv(fv.size());
  for (int j = 0; j <= grid; ++j) {
    const double y = static_cast<double>(j) / grid;
    fv[static_cast<std::size_t>(j)] = f(y);
    gv[static_cast<std::size_t>(j)] = g(y);
  }
  return levy_distance(fv, gv);
}

std::vector<double> golden_abscissae(int count) {
  const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 1; i <= count; ++i) {
    const long double v = static_cast<long double>(i) * phi;
    xs.push_back(static_cast<double>(v - std::floor(v)));
  }
  return xs;
}

double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw std::invalid_argument("quantile: empty sample");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * std::clamp(p, 0.0, 1.0);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

WccProfile wcc_profile(const Copula& c1, const Copula& c2, const std::vector<double>& xs,
                       int y_grid) {
  if (y_grid < 1) throw std::invalid_argument("wcc_profile: y_grid must be >= 1");
  WccProfile p;
  p.xs = xs;
  std::vector<double> f(static_cast<std::size_t>(y_grid) + 1);
  std::vector<double> g(f.size());
  for (double x : xs) {
    for (int j = 0; j <= y_grid; ++j) {
      const double y = static_cast<double>(j) / y_grid;
      f[static_cast<std::size_t>(j)] = c1.kernel_cdf(x, y);
      g[static_cast<std::size_t>(j)] = c2.kernel_cdf(x, y);
    }
    p.dist.push_back(std::clamp(levy_distance(f, g), 0.0, 1.0));
  }
  if (!p.dist.empty()) {
    p.max = *std::max_element(p.dist.begin(), p.dist.end());
    p.mean = pairwise_sum(p.dist) / static_cast<double>(p.dist.size());
    p.q95 = quantile(p.dist, 0.95);
  }
  return p;
}

}  // namespace condcop
