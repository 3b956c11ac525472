#pragma once

// Property checks shared by the unit and acceptance tests. Each returns the
// worst defect found so callers can compare against their own tolerance.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "condcop/archimedean.hpp"
#include "condcop/copula.hpp"
#include "condcop/extreme_value.hpp"

namespace condcop::testing {

struct AxiomDefects {
  double grounded = 0.0;
  double margins = 0.0;
  double two_increasing = 0.0;  // largest negative rectangle volume, as a positive number
  double kernel_monotone = 0.0;
  double kernel_top = 0.0;      // |K(x, 1) - 1|
  double kernel_range = 0.0;

  double worst() const {
    return std::max({grounded, margins, two_increasing, kernel_monotone, kernel_top,
                     kernel_range});
  }
};

// Lattice {i/n} for the cdf; interior midpoints for the kernel.
inline AxiomDefects copula_axioms(const Copula& c, int n = 100) {
  AxiomDefects d;
  std::vector<double> prev(n + 1), cur(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    for (int j = 0; j <= n; ++j) {
      const double y = static_cast<double>(j) / n;
      cur[j] = c.cdf(x, y);
    }
    d.grounded = std::max({d.grounded, std::abs(cur[0]), std::abs(c.cdf(0.0, x))});
    d.margins = std::max({d.margins, std::abs(cur[n] - x), std::abs(c.cdf(1.0, x) - x)});
    if (i > 0) {
      for (int j = 1; j <= n; ++j) {
        const double vol = cur[j] - prev[j] - cur[j - 1] + prev[j - 1];
        d.two_increasing = std::max(d.two_increasing, -vol);
      }
    }
    std::swap(prev, cur);
  }
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) / n;
    double last = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double k = c.kernel_cdf(x, static_cast<double>(j) / n);
      d.kernel_range = std::max({d.kernel_range, -k, k - 1.0});
      d.kernel_monotone = std::max(d.kernel_monotone, last - k);
      last = k;
    }
    d.kernel_top = std::max(d.kernel_top, std::abs(c.kernel_cdf(x, 1.0) - 1.0));
  }
  return d;
}

// max_y |int_0^1 K(x, [0, y]) dx - y| with an m-point midpoint rule in x.
inline double disintegration_defect(const Copula& c, int m = 2000, int ys = 49) {
  double worst = 0.0;
  for (int j = 1; j <= ys; ++j) {
    const double y = static_cast<double>(j) / (ys + 1);
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += c.kernel_cdf((i + 0.5) / m, y);
    worst = std::max(worst, std::abs(s / m - y));
  }
  return worst;
}

struct GeneratorDefects {
  double normalization = 0.0;  // |phi(1/2) - 1|
  double at_one = 0.0;         // |phi(1)|
  bool strictly_decreasing = true;
  double convexity = 0.0;      // largest midpoint-convexity violation, relative
  bool slopes_negative = true;
  bool slopes_nondecreasing = true;
};

// Grid t_k = k / n, k = 1..n. Everything is checked on log phi and
// log(-D+phi) because reconstructed generators overflow doubles near 0.
// Convexity is the midpoint excess relative to the chord midpoint.
inline GeneratorDefects generator_validity(const Generator& g, int n = 1000) {
  GeneratorDefects d;
  d.normalization = std::abs(g.phi(0.5) - 1.0);
  d.at_one = std::abs(g.phi(1.0));
  auto log_mid = [&g](double a, double b) {
    const double la = g.log_phi(a);
    const double lb = g.log_phi(b);
    const double hi = std::max(la, lb);
    return hi + std::log1p(std::exp(std::min(la, lb) - hi)) - std::log(2.0);
  };
  double prev_phi = kInfinity;
  double prev_slope = kInfinity;
  for (int k = 1; k < n; ++k) {
    const double t = static_cast<double>(k) / n;
    const double p = g.log_phi(t);
    if (!(p < prev_phi) || !std::isfinite(p)) d.strictly_decreasing = false;
    prev_phi = p;
    const double s = g.log_neg_dplus_phi(t);
    if (!std::isfinite(s)) d.slopes_negative = false;
    if (s > prev_slope) d.slopes_nondecreasing = false;
    prev_slope = s;
    if (k > 1) {
      d.convexity = std::max(d.convexity, std::expm1(p - log_mid(t - 1.0 / n, t + 1.0 / n)));
    }
  }
  return d;
}

struct PickandsDefects {
  double endpoints = 0.0;
  double bounds = 0.0;
  double convexity = 0.0;
  double slope_range = 0.0;
  bool slopes_nondecreasing = true;
  double slope_integral = 0.0;  // |int D+A|
};

inline PickandsDefects pickands_validity(const PickandsFunction& a, int n = 1000) {
  PickandsDefects d;
  d.endpoints = std::max(std::abs(a(0.0) - 1.0), std::abs(a(1.0) - 1.0));
  double prev_slope = -kInfinity;
  double integral = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double x = static_cast<double>(k) / n;
    const double v = a(x);
    d.bounds = std::max({d.bounds, std::max(x, 1.0 - x) - v, v - 1.0});
    if (k > 0 && k < n) {
      const double excess = v - 0.5 * (a(x - 1.0 / n) + a(x + 1.0 / n));
      d.convexity = std::max(d.convexity, excess);
    }
    const double s = a.dplus_a(x);
    d.slope_range = std::max({d.slope_range, -1.0 - s, s - 1.0});
    if (s < prev_slope) d.slopes_nondecreasing = false;
    prev_slope = s;
  }
  for (int k = 0; k < n; ++k) integral += a.dplus_a((k + 0.5) / n) / n;
  d.slope_integral = std::abs(integral);
  return d;
}

}  // namespace condcop::testing
