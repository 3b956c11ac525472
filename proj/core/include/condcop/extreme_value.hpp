#pragma once

// Pickands dependence functions and Extreme-Value copulas
// C_A(x, y) = (xy)^A(ln x / ln xy).

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "condcop/copula.hpp"

namespace condcop {

class PickandsFunction {
 public:
  using Fn = std::function<double(double)>;

  // `dplus_a` is the right derivative on [0, 1) extended to 1 by the left
  // derivative. `dminus_a` is the left derivative on (0, 1] extended to 0 by
  // the right derivative; when empty the function is taken to be C^1 and
  // dplus_a is used.
  PickandsFunction(std::string label, Fn a, Fn dplus_a, Fn dminus_a = {});

  double operator()(double x) const { return a_(x); }
  double a(double x) const { return a_(x); }
  double dplus_a(double x) const { return dplus_(x); }
  double dminus_a(double x) const { return dminus_ ? dminus_(x) : dplus_(x); }
  const std::string& label() const { return label_; }

 private:
  std::string label_;
  Fn a_;
  Fn dplus_;
  Fn dminus_;
};

// A(x) = 1 - (x^-theta + (1-x)^-theta)^(-1/theta), theta > 0.
PickandsFunction make_galambos(double theta);

// A(x) = (x^theta + (1-x)^theta)^(1/theta), theta >= 1.
PickandsFunction make_gumbel_pickands(double theta);

using PickandsKnot = std::pair<double, double>;  // (x, A(x))

// Describes the first violated invariant of a knot list, or returns an empty
// string when the knots define a valid Pickands function. Slopes are compared
// with absolute tolerance 1e-10.
std::string pickands_knot_diagnostic(const std::vector<PickandsKnot>& knots);

// Linear interpolation of the knots. Throws std::invalid_argument carrying
// the diagnostic above.
PickandsFunction make_piecewise_linear_pickands(std::vector<PickandsKnot> knots,
                                                std::string label = "pickands-pwl");

// Knots of the piecewise-linear example used in the simulation studies:
// (1 - x) on [0, 1/4], (7 - x) / 9 on [1/4, 7/10], x on [7/10, 1].
std::vector<PickandsKnot> example_pickands_knots();

// Reads a CSV file with header `x,a`.
std::vector<PickandsKnot> read_knots_csv(const std::string& path);

// A^t(x) = A(1 - x), D+A^t(x) = -D-A(1 - x).
PickandsFunction transpose_pickands(const PickandsFunction& a);

Copula ev_copula(const PickandsFunction& a);

// max over a grid x grid midpoint lattice of |C(x, y) - C(x^(1/n), y^(1/n))^n|.
double max_stability_check(const Copula& c, int n, int grid);

}  // namespace condcop
