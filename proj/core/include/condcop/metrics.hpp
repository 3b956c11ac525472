#pragma once

// Kernel-based distances and dependence measures.
//
// Double integrals over [0,1]^2 use midpoints x_i = (i + 1/2)/m in x and the
// interior lattice y_j = j/m, j = 1..m-1, in y. The y rule is the trapezoid
// rule for integrands vanishing at y = 0 and y = 1, which every integrand
// below does. Kernels are therefore never evaluated at x in {0, 1}.

#include <functional>
#include <span>
#include <vector>

#include "condcop/copula.hpp"

namespace condcop {

struct Quadrature {
  int m = 512;
  int threads = 1;  // rows are split across threads; results do not depend on it
};

void validate(const Quadrature& q);

// Sup-distance on the (m+1)^2 lattice; exact up to d_inf_error_bound(q).
double d_inf(const Copula& c1, const Copula& c2, const Quadrature& q = {});
double d_inf_error_bound(const Quadrature& q);

struct KernelDistances {
  double d1 = 0.0;
  double d2_squared = 0.0;
  double d_infty = 0.0;  // sup_y of int |K1 - K2| dx
};

KernelDistances kernel_distances(const Copula& c1, const Copula& c2,
                                 const Quadrature& q = {});

double d1(const Copula& c1, const Copula& c2, const Quadrature& q = {});
double d2_squared(const Copula& c1, const Copula& c2, const Quadrature& q = {});
double d_infty_metric(const Copula& c1, const Copula& c2, const Quadrature& q = {});

// D1(c1, c2) + D1(c1^t, c2^t).
double partial_distance(const Copula& c1, const Copula& c2, const Quadrature& q = {});

double zeta1(const Copula& c, const Quadrature& q = {});

// r integrates the exact cell averages m [C((i+1)/m, y) - C(i/m, y)] of the
// kernel instead of midpoint values; these satisfy the disintegration identity
// on the nodes, which is what r = 6 D2^2(C, Pi) rests on.
struct RMeasure {
  double value = 0.0;   // 6 int int K^2 - 2
  double via_d2 = 0.0;  // 6 int int (K - y)^2 on the same nodes
  double gap() const;
};

RMeasure r_measure_checked(const Copula& c, const Quadrature& q = {});
double r_measure(const Copula& c, const Quadrature& q = {});

// zeta1 and r of c, sharing the cdf and kernel evaluations.
struct DependenceMeasures {
  double zeta1 = 0.0;
  double r = 0.0;
  double r_via_d2 = 0.0;
};
DependenceMeasures dependence_measures(const Copula& c, const Quadrature& q = {});

// Levy distance between two distribution functions on [0, 1] given by their
// values on the uniform grid j/M, j = 0..M (linear interpolation in between,
// 0 below 0 and 1 above 1). Both spans must have the same size >= 2.
double levy_distance(std::span<const double> f, std::span<const double> g);

double levy_distance(const std::function<double(double)>& f,
                     const std::function<double(double)>& g, int grid = 2048);

// x_i = frac(i * golden ratio), i = 1..count.
std::vector<double> golden_abscissae(int count = 25);

struct WccProfile {
  std::vector<double> xs;
  std::vector<double> dist;
  double max = 0.0;
  double mean = 0.0;
  double q95 = 0.0;
};

// Per-x Levy distance between y -> K1(x, [0, y]) and y -> K2(x, [0, y]).
WccProfile wcc_profile(const Copula& c1, const Copula& c2, const std::vector<double>& xs,
                       int y_grid = 2048);

// Type-7 sample quantile of an unsorted sample.
double quantile(std::vector<double> values, double p);

// Pairwise (cascade) sum.
double pairwise_sum(std::span<const double> v);

}  // namespace condcop
