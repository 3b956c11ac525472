#include "condcop/extreme_value.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace condcop {

PickandsFunction::PickandsFunction(std::string label, Fn a, Fn dplus_a, Fn dminus_a)
    : label_(std::move(label)),
      a_(std::move(a)),
      dplus_(std::move(dplus_a)),
      dminus_(std::move(dminus_a)) {
  if (!a_ || !dplus_) {
    throw std::invalid_argument("PickandsFunction: a and dplus_a are required");
  }
}

namespace {

std::string with_param(const std::string& name, double theta) {
  std::ostringstream os;
  os << name << ":" << theta;
  return os.str();
}

}  // namespace

PickandsFunction make_galambos(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("galambos: theta must be > 0");
  }
  // Written in q = x / (1 - x) (or its reciprocal) to avoid overflow of x^-theta.
  auto a = [theta](double x) {
    x = std::clamp(x, 0.0, 1.0);
    if (x <= 0.5) {
      const double q = x / (1.0 - x);
      return 1.0 - x * std::pow(1.0 + std::pow(q, theta), -1.0 / theta);
    }
    const double p = (1.0 - x) / x;
    return 1.0 - (1.0 - x) * std::pow(1.0 + std::pow(p, theta), -1.0 / theta);
  };
  auto da = [theta](double x) {
    x = std::clamp(x, 0.0, 1.0);
    if (x <= 0.5) {
      const double q = x / (1.0 - x);
      return std::pow(1.0 + std::pow(q, theta), -1.0 / theta - 1.0) *
             (std::pow(q, theta + 1.0) - 1.0);
    }
    const double p = (1.0 - x) / x;
    return std::pow(1.0 + std::pow(p, theta), -1.0 / theta - 1.0) *
           (1.0 - std::pow(p, theta + 1.0));
  };
  return PickandsFunction(with_param("galambos", theta), a, da);
}

PickandsFunction make_gumbel_pickands(double theta) {
  if (!(theta >= 1.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("gumbel-ev: theta must be >= 1");
  }
  auto a = [theta](double x) {
    x = std::clamp(x, 0.0, 1.0);
    const double v = std::pow(std::pow(x, theta) + std::pow(1.0 - x, theta), 1.0 / theta);
    return std::clamp(v, std::max(x, 1.0 - x), 1.0);
  };
  auto da = [theta](double x) {
    x = std::clamp(x, 0.0, 1.0);
    const double s = std::pow(x, theta) + std::pow(1.0 - x, theta);
    return std::pow(s, 1.0 / theta - 1.0) *
           (std::pow(x, theta - 1.0) - std::pow(1.0 - x, theta - 1.0));
  };
  return PickandsFunction(with_param("gumbel-ev", theta), a, da);
}

std::string pickands_knot_diagnostic(const std::vector<PickandsKnot>& knots) {
  constexpr double kTol = 1e-10;
  if (knots.size() < 2) return "at least two knots are required";
  for (const auto& [x, a] : knots) {
    if (!std::isfinite(x) || !std::isfinite(a)) return "knots must be finite";
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first)) {
      return "knot abscissae must be strictly increasing";
    }
  }
  if (knots.front().first != 0.0 || knots.back().first != 1.0) {
    return "endpoints: knots must start at x = 0 and end at x = 1";
  }
  if (std::abs(knots.front().second - 1.0) > kTol ||
      std::abs(knots.back().second - 1.0) > kTol) {
    return "endpoints: A(0) = A(1) = 1 is violated";
  }
  for (const auto& [x, a] : knots) {
    if (a > 1.0 + kTol || a < std::max(x, 1.0 - x) - kTol) {
      std::ostringstream os;
      os << "bounds: max(x, 1 - x) <= A(x) <= 1 is violated at x = " << x;
      return os.str();
    }
  }
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    const double left = (knots[i].second - knots[i - 1].second) /
                        (knots[i].first - knots[i - 1].first);
    const double right = (knots[i + 1].second - knots[i].second) /
                         (knots[i + 1].first - knots[i].first);
    if (right < left - kTol) {
      std::ostringstream os;
      os << "convexity: slopes decrease at x = " << knots[i].first;
      return os.str();
    }
  }
  return {};
}

namespace {

struct KnotTable {
  std::vector<double> x;
  std::vector<double> a;
  std::vector<double> slope;  // slope[k] on [x_k, x_{k+1}]

  // Segment containing x with right-continuous convention; the last segment
  // also covers x = 1.
  std::size_t segment(double t) const {
    const auto it = std::upper_bound(x.begin(), x.end(), t);
    std::size_t k = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
    return std::min(k, slope.size() - 1);
  }
  std::size_t left_segment(double t) const {
    const auto it = std::lower_bound(x.begin(), x.end(), t);
    std::size_t k = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
    return std::min(k, slope.size() - 1);
  }
  double eval(double t) const {
    t = std::clamp(t, 0.0, 1.0);
    const std::size_t k = segment(t);
    const double v = a[k] + slope[k] * (t - x[k]);
    return std::clamp(v, std::max(t, 1.0 - t), 1.0);
  }
};

}  // namespace

PickandsFunction make_piecewise_linear_pickands(std::vector<PickandsKnot> knots,
                                                std::string label) {
  const std::string diag = pickands_knot_diagnostic(knots);
  if (!diag.empty()) throw std::invalid_argument("pickands-pwl: " + diag);
  auto t = std::make_shared<KnotTable>();
  for (const auto& [x, a] : knots) {
    t->x.push_back(x);
    t->a.push_back(a);
  }
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    // knots within max(t, 1 - t) <= a <= 1 bound the slope by 1 up to rounding
    t->slope.push_back(
        std::clamp((t->a[k + 1] - t->a[k]) / (t->x[k + 1] - t->x[k]), -1.0, 1.0));
  }
  return PickandsFunction(
      std::move(label), [t](double x) { return t->eval(x); },
      [t](double x) { return t->slope[t->segment(std::clamp(x, 0.0, 1.0))]; },
      [t](double x) { return t->slope[t->left_segment(std::clamp(x, 0.0, 1.0))]; });
}

std::vector<PickandsKnot> example_pickands_knots() {
  return {{0.0, 1.0}, {0.25, 0.75}, {0.7, 0.7}, {1.0, 1.0}};
}

std::vector<PickandsKnot> read_knots_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open knots file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty knots file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,a") {
    throw std::invalid_argument("knots file must start with header 'x,a': " + path);
  }
  std::vector<PickandsKnot> knots;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("knots file line " + std::to_string(lineno) +
                                  ": expected two columns");
    }
    try {
      std::size_t used = 0;
      const std::string xs = line.substr(0, comma);
      const std::string as = line.substr(comma + 1);
      const double x = std::stod(xs, &used);
      if (used != xs.size()) throw std::invalid_argument(xs);
      const double a = std::stod(as, &used);
      if (used != as.size()) throw std::invalid_argument(as);
      knots.emplace_back(x, a);
    } catch (const std::exception&) {
      throw std::invalid_argument("knots file line " + std::to_string(lineno) +
                                  ": not a number");
    }
  }
  return knots;
}

PickandsFunction transpose_pickands(const PickandsFunction& a) {
  auto src = std::make_shared<const PickandsFunction>(a);
  return PickandsFunction(
      a.label() + "^t", [src](double x) { return src->a(1.0 - x); },
      [src](double x) { return -src->dminus_a(1.0 - x); },
      [src](double x) { return -src->dplus_a(1.0 - x); });
}

namespace {

double ev_cdf(const PickandsFunction& a, double x, double y) {
  if (x <= 0.0 || y <= 0.0) return 0.0;
  if (x >= 1.0) return std::min(y, 1.0);
  if (y >= 1.0) return x;
  const double lx = std::log(x);
  const double s = lx + std::log(y);
  const double t = std::clamp(lx / s, 0.0, 1.0);
  return std::clamp(std::exp(s * a(t)), std::max(0.0, x + y - 1.0), std::min(x, y));
}

double ev_kernel(const PickandsFunction& a, double x, double y) {
  if (x <= 0.0 || x >= 1.0) return 1.0;
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  const double lx = std::log(x);
  const double s = lx + std::log(y);
  const double t = std::clamp(lx / s, 0.0, 1.0);
  const double at = a(t);
  const double k = std::exp(s * at - lx) * (at + (1.0 - t) * a.dplus_a(t));
  return std::clamp(k, 0.0, 1.0);
}

}  // namespace

Copula ev_copula(const PickandsFunction& a) {
  const PickandsFunction at = transpose_pickands(a);
  return Copula(
      "ev:" + a.label(), [a](double x, double y) { return ev_cdf(a, x, y); },
      [a](double x, double y) { return ev_kernel(a, x, y); },
      [at](double x, double y) { return ev_kernel(at, x, y); });
}

double max_stability_check(const Copula& c, int n, int grid) {
  if (n < 1 || grid < 1) {
    throw std::invalid_argument("max_stability_check: n and grid must be >= 1");
  }
  const double inv_n = 1.0 / n;
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double x = (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      const double y = (j + 0.5) / grid;
      const double v = std::pow(c.cdf(std::pow(x, inv_n), std::pow(y, inv_n)), n);
      worst = std::max(worst, std::abs(c.cdf(x, y) - v));
    }
  }
  return worst;
}

}  // namespace condcop
