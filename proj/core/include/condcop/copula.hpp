#pragma once

// Bivariate copulas described by their distribution function C(x, y) and a
// version of their Markov kernel, stored as the conditional distribution
// function y -> K_C(x, [0, y]).

#include <functional>
#include <string>
#include <utility>

namespace condcop {

using BivariateFn = std::function<double(double, double)>;

// Step used by the symmetric difference quotient when a copula has no
// closed-form kernel for its transpose.
inline constexpr double kDifferenceQuotientStep = 1e-5;

class Copula {
 public:
  // `transposed_kernel_cdf` is optional. When empty, the kernel of the
  // transpose is obtained numerically from `cdf`.
  Copula(std::string label, BivariateFn cdf, BivariateFn kernel_cdf,
         BivariateFn transposed_kernel_cdf = {});

  double cdf(double x, double y) const { return cdf_(x, y); }

  // K_C(x, [0, y]); nondecreasing and right-continuous in y, equal to 1 at y = 1.
  double kernel_cdf(double x, double y) const { return kernel_(x, y); }

  // K_{C^t}(x, [0, y]).
  double transposed_kernel_cdf(double x, double y) const;

  bool has_closed_transposed_kernel() const {
    return static_cast<bool>(transposed_kernel_);
  }

  const std::string& label() const { return label_; }

  const BivariateFn& cdf_fn() const { return cdf_; }
  const BivariateFn& kernel_fn() const { return kernel_; }
  const BivariateFn& transposed_kernel_fn() const { return transposed_kernel_; }

 private:
  std::string label_;
  BivariateFn cdf_;
  BivariateFn kernel_;
  BivariateFn transposed_kernel_;
};

// d/dx C(x, y) as [C(x+h, y) - C(x-h, y)] / (2h), one-sided at the borders,
// clamped to [0, 1].
double difference_quotient_kernel(const BivariateFn& cdf, double x, double y,
                                  double h = kDifferenceQuotientStep);

Copula make_pi();
Copula make_m();
Copula make_w();

struct MarshallOlkinParams {
  double alpha = 0.0;
  double beta = 0.0;
};

Copula make_marshall_olkin(MarshallOlkinParams params);

// C^t(x, y) = C(y, x). The kernel of C^t uses the closed form registered on
// `c` when there is one, else the difference quotient of C^t in x.
Copula transpose(const Copula& c);

}  // namespace condcop
