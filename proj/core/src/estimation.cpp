#include "condcop/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace condcop {

namespace {

// Average ranks (1-based) of v; sets `ties` when any value repeats.
std::vector<double> average_ranks(const std::vector<double>& v, bool& ties) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> rank(n);
  ties = false;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && v[idx[j]] == v[idx[i]]) ++j;
    if (j - i > 1) ties = true;
    const double avg = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) rank[idx[k]] = avg;
    i = j;
  }
  return rank;
}

}  // namespace

PseudoObservations pseudo_obs(const SampleSet& s) {
  validate(s);
  PseudoObservations p;
  const double denom = static_cast<double>(s.size()) + 1.0;
  p.u = average_ranks(s.x, p.ties_u);
  p.v = average_ranks(s.y, p.ties_v);
  for (double& r : p.u) r /= denom;
  for (double& r : p.v) r /= denom;
  return p;
}

double empirical_copula_cdf(const PseudoObservations& p, double x, double y) {
  if (p.size() == 0) throw std::invalid_argument("empirical copula: empty sample");
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.u[i] <= x && p.v[i] <= y) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(p.size());
}

double chatterjee_r(const SampleSet& s, std::uint64_t seed) {
  validate(s);
  const std::size_t n = s.size();
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> key(n);
  for (auto& k : key) k = rng();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (s.x[a] != s.x[b]) return s.x[a] < s.x[b];
    if (key[a] != key[b]) return key[a] < key[b];
    return a < b;
  });
  std::vector<double> ys = s.y;
  std::sort(ys.begin(), ys.end());
  std::vector<double> r(n);
  double denom = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = s.y[order[i]];
    const auto le = std::upper_bound(ys.begin(), ys.end(), y) - ys.begin();
    const auto lt = std::lower_bound(ys.begin(), ys.end(), y) - ys.begin();
    r[i] = static_cast<double>(le);
    const double l = static_cast<double>(static_cast<std::ptrdiff_t>(n) - lt);
    denom += l * (static_cast<double>(n) - l);
  }
  if (denom == 0.0) throw std::invalid_argument("chatterjee_r: y is constant");
  double num = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) num += std::abs(r[i + 1] - r[i]);
  return 1.0 - static_cast<double>(n) * num / (2.0 * denom);
}

EmpiricalKendall::EmpiricalKendall(std::vector<double> w, bool projected)
    : w_(std::move(w)), projected_(projected) {
  if (w_.empty()) throw std::invalid_argument("EmpiricalKendall: no levels");
  std::sort(w_.begin(), w_.end());
}

double EmpiricalKendall::raw(double t) const {
  const auto c = std::upper_bound(w_.begin(), w_.end(), t) - w_.begin();
  return static_cast<double>(c) / static_cast<double>(w_.size());
}

double EmpiricalKendall::operator()(double t) const {
  if (t >= 1.0) return 1.0;
  const double k = raw(t);
  if (!projected_) return k;
  return std::max(k, std::max(t, 0.0));
}

std::vector<double> kendall_levels(const PseudoObservations& p) {
  const std::size_t n = p.size();
  if (n < 2) throw std::invalid_argument("kendall_levels: need n >= 2");
  std::vector<double> vs = p.v;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<std::size_t> vrank(n);
  for (std::size_t i = 0; i < n; ++i) {
    vrank[i] = static_cast<std::size_t>(
        std::lower_bound(vs.begin(), vs.end(), p.v[i]) - vs.begin());
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&p](std::size_t a, std::size_t b) { return p.u[a] < p.u[b]; });
  // Fenwick tree over v ranks of points with strictly smaller u.
  std::vector<std::size_t> tree(vs.size() + 1, 0);
  auto add = [&tree](std::size_t r) {
    for (std::size_t k = r + 1; k < tree.size(); k += k & (~k + 1)) ++tree[k];
  };
  auto count_below = [&tree](std::size_t r) {  // ranks < r
    std::size_t c = 0;
    for (std::size_t k = r; k > 0; k -= k & (~k + 1)) c += tree[k];
    return c;
  };
  std::vector<double> w(n);
  const double scale = 1.0 / static_cast<double>(n - 1);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && p.u[order[j]] == p.u[order[i]]) ++j;
    for (std::size_t k = i; k < j; ++k) {
      w[order[k]] = static_cast<double>(count_below(vrank[order[k]])) * scale;
    }
    for (std::size_t k = i; k < j; ++k) add(vrank[order[k]]);
    i = j;
  }
  return w;
}

EmpiricalKendall empirical_kendall(const PseudoObservations& p, bool projected) {
  return EmpiricalKendall(kendall_levels(p), projected);
}

Generator reconstruct_generator(const std::function<double(double)>& kendall_cdf,
                                const ReconstructionOptions& opt) {
  if (opt.grid < 4 || opt.grid % 2 != 0) {
    throw std::invalid_argument("reconstruct_generator: grid must be even and >= 4");
  }
  if (!(opt.eps > 0.0)) throw std::invalid_argument("reconstruct_generator: eps must be > 0");
  const int n = opt.grid;
  const double h = 1.0 / n;
  std::vector<double> g(static_cast<std::size_t>(n));  // integrand at t_k = (k+1)/n
  for (int k = 0; k < n; ++k) {
    const double t = static_cast<double>(k + 1) / n;
    g[static_cast<std::size_t>(k)] = 1.0 / std::min(t - kendall_cdf(t), -opt.eps);
  }
  std::vector<double> log_phi(static_cast<std::size_t>(n));
  const std::size_t half = static_cast<std::size_t>(n / 2 - 1);
  log_phi[half] = 0.0;
  for (std::size_t k = half + 1; k < log_phi.size(); ++k) {
    log_phi[k] = log_phi[k - 1] + 0.5 * h * (g[k - 1] + g[k]);
  }
  for (std::size_t k = half; k-- > 0;) {
    log_phi[k] = log_phi[k + 1] - 0.5 * h * (g[k] + g[k + 1]);
  }
  log_phi.back() = -kInfinity;
  const bool strict = log_phi.front() > std::log(opt.strict_threshold);
  return make_tabulated_generator("reconstructed", std::move(log_phi), strict);
}

Generator reconstruct_generator(const EmpiricalKendall& k, const ReconstructionOptions& opt) {
  return reconstruct_generator([&k](double t) { return k(t); }, opt);
}

RawPickands cfg_estimator(const PseudoObservations& p, int t_grid) {
  if (t_grid < 2) throw std::invalid_argument("cfg_estimator: t_grid must be >= 2");
  const std::size_t n = p.size();
  if (n < 2) throw std::invalid_argument("cfg_estimator: need n >= 2");
  std::vector<double> la(n);
  std::vector<double> lb(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(p.u[i] > 0.0 && p.u[i] < 1.0 && p.v[i] > 0.0 && p.v[i] < 1.0)) {
      throw std::invalid_argument("cfg_estimator: pseudo-observations must lie in (0, 1)");
    }
    la[i] = std::log(-std::log(p.u[i]));
    lb[i] = std::log(-std::log(p.v[i]));
  }
  constexpr double kEulerGamma = 0.57721566490153286061;
  RawPickands raw;
  std::vector<double> log_a(static_cast<std::size_t>(t_grid));
  std::vector<double> terms(n);
  for (int k = 0; k < t_grid; ++k) {
    const double t = static_cast<double>(k) / (t_grid - 1);
    const double l1 = std::log1p(-t);  // -inf at t = 1
    const double l0 = std::log(t);     // -inf at t = 0
    for (std::size_t i = 0; i < n; ++i) {
      terms[i] = std::min(la[i] - l1, lb[i] - l0);
    }
    log_a[static_cast<std::size_t>(k)] =
        -kEulerGamma - pairwise_sum(terms) / static_cast<double>(n);
    raw.t.push_back(t);
  }
  const double l0 = log_a.front();
  const double l1 = log_a.back();
  for (std::size_t k = 0; k < log_a.size(); ++k) {
    const double t = raw.t[k];
    raw.a.push_back(std::exp(log_a[k] - (1.0 - t) * l0 - t * l1));
  }
  raw.a.front() = 1.0;
  raw.a.back() = 1.0;
  return raw;
}

std::vector<PickandsKnot> greatest_convex_minorant(const std::vector<double>& xs,
                                                   const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw std::invalid_argument("greatest_convex_minorant: bad input sizes");
  }
  std::vector<PickandsKnot> hull;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const PickandsKnot p{xs[i], ys[i]};
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const double cross = (a.first - o.first) * (p.second - o.second) -
                           (a.second - o.second) * (p.first - o.first);
      if (cross > 0.0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

PickandsFunction convexify_pickands(const RawPickands& raw) {
  if (raw.t.size() != raw.a.size() || raw.t.size() < 2 || raw.t.front() != 0.0 ||
      raw.t.back() != 1.0) {
    throw std::invalid_argument("convexify_pickands: table must span [0, 1]");
  }
  std::vector<double> clamped(raw.a.size());
  for (std::size_t k = 0; k < raw.a.size(); ++k) {
    const double t = raw.t[k];
    const double a = std::isnan(raw.a[k]) ? 1.0 : raw.a[k];
    clamped[k] = std::clamp(a, std::max(t, 1.0 - t), 1.0);
  }
  return make_piecewise_linear_pickands(greatest_convex_minorant(raw.t, clamped),
                                        "cfg-convexified");
}

Copula plugin_copula(const PseudoObservations& p, Structure which) {
  if (which == Structure::archimedean) {
    return archimedean_copula(reconstruct_generator(empirical_kendall(p)));
  }
  return ev_copula(convexify_pickands(cfg_estimator(p)));
}

PluginEstimate plugin_zeta1_r(const PseudoObservations& p, Structure which,
                              const Quadrature& q) {
  const DependenceMeasures d = dependence_measures(plugin_copula(p, which), q);
  return {d.zeta1, d.r};
}

}  // namespace condcop
