#pragma once

// Archimedean generators and copulas.
//
// Generators are normalized so that phi(1/2) = 1 and are right-continuous at 0,
// i.e. phi(0) is stored as phi(0+). A generator is strict when phi(0+) = inf.
//
// Every generator can also be evaluated in log space (log phi and
// log(-D+phi)); the copula and kernel are computed there so that generators
// with very small values near t = 1 stay strictly decreasing in floating
// point.

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "condcop/copula.hpp"

namespace condcop {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Closed-form pieces of a generator. `phi` and `dplus_phi` are only called on
// (0, 1); `dplus_phi` is additionally called at 0 for non-strict generators.
// Optional members fall back to generic evaluation (log of phi, bisection).
struct GeneratorFunctions {
  std::function<double(double)> phi;
  std::function<double(double)> dplus_phi;
  double phi_at_zero = kInfinity;
  std::function<double(double)> inverse;         // s in (0, phi(0+))
  std::function<double(double)> log_phi;         // t in (0, 1)
  std::function<double(double)> log_neg_dplus_phi;  // t in (0, 1)
  std::function<double(double)> inverse_from_log;   // log s, s in (0, phi(0+))
};

class Generator {
 public:
  Generator(std::string label, GeneratorFunctions fns);

  const std::string& label() const { return label_; }
  bool strict() const { return strict_; }
  double phi_at_zero() const { return fns_->phi_at_zero; }

  // phi(t) on [0, 1]; phi(1) = 0 and phi(0) = phi(0+).
  double phi(double t) const;
  // Right derivative with D+phi(1) = 0 and, for strict generators, D+phi(0) = -inf.
  double dplus_phi(double t) const;

  double log_phi(double t) const;
  // log(-D+phi(t)); -inf at t = 1, +inf at 0 for strict generators.
  double log_neg_dplus_phi(double t) const;

  // phi^-(s): phi^-1(s) for s < phi(0+), 0 otherwise; 1 for s <= 0.
  double pseudo_inverse(double s) const;
  double pseudo_inverse_from_log(double log_s) const;

  bool has_closed_inverse() const { return static_cast<bool>(fns_->inverse); }

  // Pseudo-inverse by bisection on phi, ignoring any closed form.
  double bisect_inverse(double s) const;

 private:

  std::string label_;
  std::shared_ptr<const GeneratorFunctions> fns_;
  bool strict_;
};

// Normalized parametric families.
Generator make_clayton(double theta);   // theta > 0
Generator make_gumbel(double theta);    // theta >= 1; theta = 1 generates Pi
Generator make_frank(double theta);     // theta != 0
Generator make_w_generator();           // phi(t) = 2(1 - t), non-strict

// Piecewise-linear generator through (k/N, exp(log_phi[k-1])), k = 1..N.
// log_phi[N-1] must be -inf (phi(1) = 0) and the values strictly decreasing;
// normalization is left to the caller. Below 1/N the generator is continued linearly (non-strict) or
// logarithmically, phi(t) = phi(t0) - D+phi(t0) t0 log(t0 / t) (strict).
// D+phi is the right difference quotient on the nodes, isotonized.
Generator make_tabulated_generator(std::string label, std::vector<double> log_phi,
                                   bool strict);

double pseudo_inverse(const Generator& g, double s);

// t-level function f^t(x) = phi^-(phi(t) - phi(x)) on [t, 1]; throws
// std::invalid_argument when x < t.
double level_function(const Generator& g, double t, double x);

// C(x, y) = phi^-(phi(x) + phi(y)) with the strict / non-strict kernels.
Copula archimedean_copula(const Generator& g);

class KendallFunction {
 public:
  explicit KendallFunction(Generator g) : g_(std::move(g)) {}
  // x - phi(x) / D+phi(x) on (0, 1), 1 at x = 1, P(C(U, V) = 0) at x = 0.
  double operator()(double x) const;
  const Generator& generator() const { return g_; }

 private:
  Generator g_;
};

KendallFunction kendall_function(const Generator& g);

}  // namespace condcop
