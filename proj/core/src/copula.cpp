#include "condcop/copula.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace condcop {

Copula::Copula(std::string label, BivariateFn cdf, BivariateFn kernel_cdf,
               BivariateFn transposed_kernel_cdf)
    : label_(std::move(label)),
      cdf_(std::move(cdf)),
      kernel_(std::move(kernel_cdf)),
      transposed_kernel_(std::move(transposed_kernel_cdf)) {
  if (!cdf_ || !kernel_) {
    throw std::invalid_argument("Copula: cdf and kernel_cdf must be callable");
  }
}

double Copula::transposed_kernel_cdf(double x, double y) const {
  if (transposed_kernel_) return transposed_kernel_(x, y);
  const auto& c = cdf_;
  return difference_quotient_kernel(
      [&c](double u, double v) { return c(v, u); }, x, y);
}

double difference_quotient_kernel(const BivariateFn& cdf, double x, double y,
                                  double h) {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  const double lo = std::max(0.0, x - h);
  const double hi = std::min(1.0, x + h);
  const double q = (cdf(hi, y) - cdf(lo, y)) / (hi - lo);
  return std::clamp(q, 0.0, 1.0);
}

Copula make_pi() {
  auto kernel = [](double, double y) { return std::clamp(y, 0.0, 1.0); };
  return Copula(
      "pi",
      [](double x, double y) {
        return std::clamp(x, 0.0, 1.0) * std::clamp(y, 0.0, 1.0);
      },
      kernel, kernel);
}

Copula make_m() {
  auto kernel = [](double x, double y) { return x <= y ? 1.0 : 0.0; };
  return Copula(
      "m",
      [](double x, double y) {
        return std::clamp(std::min(x, y), 0.0, 1.0);
      },
      kernel, kernel);
}

Copula make_w() {
  // Point mass at 1 - x.
  auto kernel = [](double x, double y) { return y >= 1.0 - x ? 1.0 : 0.0; };
  return Copula(
      "w",
      [](double x, double y) {
        return std::clamp(x + y - 1.0, 0.0, 1.0);
      },
      kernel, kernel);
}

namespace {

double mo_cdf(double alpha, double beta, double x, double y) {
  if (x <= 0.0 || y <= 0.0) return 0.0;
  if (x >= 1.0) return std::min(y, 1.0);
  if (y >= 1.0) return x;
  if (std::pow(x, alpha) >= std::pow(y, beta)) {
    return std::pow(x, 1.0 - alpha) * y;
  }
  return x * std::pow(y, 1.0 - beta);
}

double mo_kernel(double alpha, double beta, double x, double y) {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  const double xa = std::pow(x, alpha);
  if (std::pow(y, beta) < xa) {
    return std::clamp((1.0 - alpha) * y / xa, 0.0, 1.0);
  }
  return std::pow(y, 1.0 - beta);
}

}  // namespace

Copula make_marshall_olkin(MarshallOlkinParams p) {
  if (!(p.alpha >= 0.0 && p.alpha <= 1.0 && p.beta >= 0.0 && p.beta <= 1.0)) {
    throw std::invalid_argument(
        "marshall-olkin: alpha and beta must lie in [0, 1]");
  }
  std::ostringstream label;
  label << "marshall-olkin:" << p.alpha << "," << p.beta;
  const double a = p.alpha;
  const double b = p.beta;
  return Copula(
      label.str(), [a, b](double x, double y) { return mo_cdf(a, b, x, y); },
      [a, b](double x, double y) { return mo_kernel(a, b, x, y); },
      // The transpose of M_{a,b} is M_{b,a}.
      [a, b](double x, double y) { return mo_kernel(b, a, x, y); });
}

Copula transpose(const Copula& c) {
  auto cdf = c.cdf_fn();
  BivariateFn swapped = [cdf](double x, double y) { return cdf(y, x); };
  BivariateFn kernel;
  if (c.has_closed_transposed_kernel()) {
    kernel = c.transposed_kernel_fn();
  } else {
    kernel = [swapped](double x, double y) {
      return difference_quotient_kernel(swapped, x, y);
    };
  }
  return Copula(c.label() + "^t", std::move(swapped), std::move(kernel),
                c.kernel_fn());
}

}  // namespace condcop
