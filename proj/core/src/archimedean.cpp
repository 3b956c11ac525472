#include "condcop/archimedean.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace condcop {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double log_add_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -kInfinity) return a;
  return a + std::log1p(std::exp(b - a));
}

std::string with_param(const std::string& name, double theta) {
  std::ostringstream os;
  os << name << ":" << theta;
  return os.str();
}

}  // namespace

Generator::Generator(std::string label, GeneratorFunctions fns)
    : label_(std::move(label)),
      fns_(std::make_shared<const GeneratorFunctions>(std::move(fns))),
      strict_(std::isinf(fns_->phi_at_zero)) {
  if (!fns_->phi || !fns_->dplus_phi) {
    throw std::invalid_argument("Generator: phi and dplus_phi are required");
  }
  if (!(fns_->phi_at_zero > 0.0)) {
    throw std::invalid_argument("Generator: phi(0+) must be positive");
  }
}

double Generator::phi(double t) const {
  if (t >= 1.0) return 0.0;
  if (t <= 0.0) return fns_->phi_at_zero;
  return fns_->phi(t);
}

double Generator::dplus_phi(double t) const {
  if (t >= 1.0) return 0.0;
  if (t <= 0.0) return strict_ ? -kInfinity : fns_->dplus_phi(0.0);
  return fns_->dplus_phi(t);
}

double Generator::log_phi(double t) const {
  if (t >= 1.0) return -kInfinity;
  if (t <= 0.0) return std::log(fns_->phi_at_zero);
  if (fns_->log_phi) return fns_->log_phi(t);
  return std::log(fns_->phi(t));
}

double Generator::log_neg_dplus_phi(double t) const {
  if (t >= 1.0) return -kInfinity;
  if (t <= 0.0) return strict_ ? kInfinity : std::log(-fns_->dplus_phi(0.0));
  if (fns_->log_neg_dplus_phi) return fns_->log_neg_dplus_phi(t);
  return std::log(-fns_->dplus_phi(t));
}

double Generator::pseudo_inverse(double s) const {
  if (!(s > 0.0)) return 1.0;
  if (s >= fns_->phi_at_zero) return 0.0;
  if (fns_->inverse) return std::clamp(fns_->inverse(s), 0.0, 1.0);
  if (fns_->inverse_from_log) {
    return std::clamp(fns_->inverse_from_log(std::log(s)), 0.0, 1.0);
  }
  return bisect_inverse(s);
}

double Generator::pseudo_inverse_from_log(double log_s) const {
  if (log_s == -kInfinity) return 1.0;
  if (std::isnan(log_s)) return 1.0;
  if (log_s >= std::log(fns_->phi_at_zero)) return 0.0;
  if (fns_->inverse_from_log) {
    return std::clamp(fns_->inverse_from_log(log_s), 0.0, 1.0);
  }
  return pseudo_inverse(std::exp(log_s));
}

double Generator::bisect_inverse(double s) const {
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double v = fns_->phi(mid);
    if (std::abs(v - s) <= 1e-12 * (1.0 + s)) return mid;
    if (v > s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Generator make_clayton(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("clayton: theta must be > 0");
  }
  const double c = std::expm1(theta * kLn2);
  const double log_c = std::log(c);
  GeneratorFunctions f;
  f.phi = [theta, c](double t) { return std::expm1(-theta * std::log(t)) / c; };
  f.dplus_phi = [theta, c](double t) {
    return -theta * std::exp(-(theta + 1.0) * std::log(t)) / c;
  };
  f.log_phi = [theta, log_c](double t) {
    const double u = -theta * std::log(t);
    if (u > 30.0) return u + std::log1p(-std::exp(-u)) - log_c;
    return std::log(std::expm1(u)) - log_c;
  };
  f.log_neg_dplus_phi = [theta, log_c](double t) {
    return std::log(theta) - (theta + 1.0) * std::log(t) - log_c;
  };
  f.inverse = [theta, c](double s) { return std::exp(-std::log1p(s * c) / theta); };
  f.inverse_from_log = [theta, log_c](double log_s) {
    const double u = log_s + log_c;
    const double l = u > 0.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
    return std::exp(-l / theta);
  };
  return Generator(with_param("clayton", theta), std::move(f));
}

Generator make_gumbel(double theta) {
  if (!(theta >= 1.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("gumbel: theta must be >= 1");
  }
  const double log_ln2 = std::log(kLn2);
  GeneratorFunctions f;
  f.phi = [theta](double t) { return std::pow(-std::log(t) / kLn2, theta); };
  f.dplus_phi = [theta](double t) {
    const double l = -std::log(t);
    return -theta * std::pow(l / kLn2, theta - 1.0) / (kLn2 * t);
  };
  f.log_phi = [theta, log_ln2](double t) {
    return theta * (std::log(-std::log(t)) - log_ln2);
  };
  f.log_neg_dplus_phi = [theta, log_ln2](double t) {
    const double ll = std::log(-std::log(t));
    return std::log(theta) + (theta - 1.0) * (ll - log_ln2) - log_ln2 - std::log(t);
  };
  f.inverse = [theta](double s) { return std::exp(-kLn2 * std::pow(s, 1.0 / theta)); };
  f.inverse_from_log = [theta](double log_s) {
    return std::exp(-kLn2 * std::exp(log_s / theta));
  };
  return Generator(with_param("gumbel", theta), std::move(f));
}

Generator make_frank(double theta) {
  if (theta == 0.0 || !std::isfinite(theta)) {
    throw std::invalid_argument("frank: theta must be nonzero and finite");
  }
  const double norm = std::log1p(std::exp(-theta / 2.0));
  const double em = std::expm1(-theta);
  GeneratorFunctions f;
  f.phi = [theta, norm, em](double t) {
    return -std::log(std::expm1(-theta * t) / em) / norm;
  };
  f.dplus_phi = [theta, norm](double t) {
    return theta * std::exp(-theta * t) / std::expm1(-theta * t) / norm;
  };
  f.inverse = [theta, norm, em](double s) {
    return -std::log1p(std::exp(-s * norm) * em) / theta;
  };
  return Generator(with_param("frank", theta), std::move(f));
}

Generator make_w_generator() {
  GeneratorFunctions f;
  f.phi = [](double t) { return 2.0 * (1.0 - t); };
  f.dplus_phi = [](double) { return -2.0; };
  f.phi_at_zero = 2.0;
  f.inverse = [](double s) { return 1.0 - 0.5 * s; };
  return Generator("w", std::move(f));
}

namespace {

struct GeneratorTable {
  std::size_t n = 0;            // nodes t_k = (k + 1) / n, k = 0..n-1
  std::vector<double> log_phi;  // log phi(t_k); last entry -inf
  std::vector<double> log_slope;  // log(-slope) on [t_k, t_{k+1}], isotonized
  bool strict = true;

  double t0() const { return 1.0 / static_cast<double>(n); }
  double phi0() const { return std::exp(log_phi[0]); }
  // |D+phi(t0)| / phi(t0); phi(t0) itself may overflow.
  double rel_slope0() const { return std::exp(log_slope[0] - log_phi[0]); }

  // Interval index and weight for t in [t0, 1).
  std::pair<std::size_t, double> locate(double t) const {
    const double s = t * static_cast<double>(n);
    std::size_t k = s >= 1.0 ? static_cast<std::size_t>(s) - 1 : 0;
    k = std::min(k, n - 2);
    const double w = std::clamp(s - static_cast<double>(k + 1), 0.0, 1.0);
    return {k, w};
  }

  double eval_log_phi(double t) const {
    if (t < t0()) {
      if (strict) return log_phi[0] + std::log1p(rel_slope0() * t0() * std::log(t0() / t));
      return log_phi[0] + std::log1p(rel_slope0() * (t0() - t));
    }
    const auto [k, w] = locate(t);
    if (w == 0.0) return log_phi[k];
    if (w == 1.0) return log_phi[k + 1];
    return log_add_exp(std::log1p(-w) + log_phi[k], std::log(w) + log_phi[k + 1]);
  }

  double eval_log_slope(double t) const {
    if (t < t0()) {
      return strict ? log_slope[0] + std::log(t0() / t) : log_slope[0];
    }
    return log_slope[locate(t).first];
  }

  double inverse_from_log(double ls) const {
    if (ls >= log_phi[0]) {
      const double excess = std::expm1(ls - log_phi[0]);  // (s - phi(t0)) / phi(t0)
      if (strict) return t0() * std::exp(-excess / (rel_slope0() * t0()));
      return std::max(0.0, t0() - excess / rel_slope0());
    }
    // First node with log phi < ls; log_phi is strictly decreasing.
    const auto it = std::partition_point(log_phi.begin(), log_phi.end(),
                                         [ls](double v) { return v >= ls; });
    const std::size_t i = static_cast<std::size_t>(it - log_phi.begin());
    const std::size_t k = i - 1;
    const double w = std::expm1(ls - log_phi[k]) / std::expm1(log_phi[k + 1] - log_phi[k]);
    return (static_cast<double>(k + 1) + std::clamp(w, 0.0, 1.0)) /
           static_cast<double>(n);
  }
};

}  // namespace

Generator make_tabulated_generator(std::string label, std::vector<double> log_phi,
                                   bool strict) {
  const std::size_t n = log_phi.size();
  if (n < 2) throw std::invalid_argument("tabulated generator: need at least 2 nodes");
  if (log_phi.back() != -kInfinity) {
    throw std::invalid_argument("tabulated generator: phi(1) must be 0");
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!std::isfinite(log_phi[k]) || !(log_phi[k] > log_phi[k + 1])) {
      throw std::invalid_argument(
          "tabulated generator: phi must be finite and strictly decreasing on (0, 1)");
    }
  }
  auto t = std::make_shared<GeneratorTable>();
  t->n = n;
  t->strict = strict;
  t->log_phi = std::move(log_phi);
  t->log_slope.resize(n - 1);
  const double log_n = std::log(static_cast<double>(n));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double d = t->log_phi[k + 1] - t->log_phi[k];
    t->log_slope[k] = t->log_phi[k] + std::log(-std::expm1(d)) + log_n;
    if (k > 0) t->log_slope[k] = std::min(t->log_slope[k], t->log_slope[k - 1]);
  }
  // Rebuild the nodes from the isotonized slopes so that phi is convex and
  // consistent with D+phi, keeping the value at 1/2.
  const double half = t->eval_log_phi(0.5);
  for (std::size_t k = n - 1; k-- > 0;) {
    t->log_phi[k] = log_add_exp(t->log_phi[k + 1], t->log_slope[k] - log_n);
  }
  const double shift = half - t->eval_log_phi(0.5);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    t->log_phi[k] += shift;
    t->log_slope[k] += shift;
  }
  GeneratorFunctions f;
  f.phi = [t](double x) { return std::exp(t->eval_log_phi(x)); };
  f.dplus_phi = [t](double x) { return -std::exp(t->eval_log_slope(x)); };
  f.log_phi = [t](double x) { return t->eval_log_phi(x); };
  f.log_neg_dplus_phi = [t](double x) { return t->eval_log_slope(x); };
  f.inverse_from_log = [t](double ls) { return t->inverse_from_log(ls); };
  f.inverse = [t](double s) { return t->inverse_from_log(std::log(s)); };
  f.phi_at_zero = strict ? kInfinity : t->phi0() * (1.0 + t->rel_slope0() * t->t0());
  return Generator(std::move(label), std::move(f));
}

double pseudo_inverse(const Generator& g, double s) { return g.pseudo_inverse(s); }

double level_function(const Generator& g, double t, double x) {
  if (!(t >= 0.0 && t <= 1.0 && x <= 1.0)) {
    throw std::invalid_argument("level_function: t and x must lie in [0, 1]");
  }
  if (x < t) throw std::invalid_argument("level_function: requires x >= t");
  return g.pseudo_inverse(g.phi(t) - g.phi(x));
}

namespace {

double archimedean_cdf(const Generator& g, double x, double y) {
  if (x <= 0.0 || y <= 0.0) return 0.0;
  if (x >= 1.0) return std::min(y, 1.0);
  if (y >= 1.0) return x;
  const double c = g.pseudo_inverse_from_log(log_add_exp(g.log_phi(x), g.log_phi(y)));
  return std::clamp(c, std::max(0.0, x + y - 1.0), std::min(x, y));
}

double archimedean_kernel(const Generator& g, double x, double y) {
  if (x <= 0.0 || x >= 1.0) return 1.0;
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  const double ls = log_add_exp(g.log_phi(x), g.log_phi(y));
  if (!g.strict() && ls > std::log(g.phi_at_zero())) return 0.0;
  const double c = std::clamp(g.pseudo_inverse_from_log(ls),
                              std::max(0.0, x + y - 1.0), std::min(x, y));
  const double k = std::exp(g.log_neg_dplus_phi(x) - g.log_neg_dplus_phi(c));
  if (std::isnan(k)) return 1.0;
  return std::clamp(k, 0.0, 1.0);
}

}  // namespace

Copula archimedean_copula(const Generator& g) {
  return Copula(
      "archimedean:" + g.label(),
      [g](double x, double y) { return archimedean_cdf(g, x, y); },
      [g](double x, double y) { return archimedean_kernel(g, x, y); },
      // Archimedean copulas are symmetric.
      [g](double x, double y) { return archimedean_kernel(g, x, y); });
}

double KendallFunction::operator()(double x) const {
  if (x >= 1.0) return 1.0;
  if (x <= 0.0) {
    if (g_.strict()) return 0.0;
    return std::min(1.0, g_.phi_at_zero() / -g_.dplus_phi(0.0));
  }
  const double r = std::exp(g_.log_phi(x) - g_.log_neg_dplus_phi(x));
  return std::clamp(x + r, x, 1.0);
}

KendallFunction kendall_function(const Generator& g) { return KendallFunction(g); }

}  // namespace condcop
