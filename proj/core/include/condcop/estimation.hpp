#pragma once

// Rank-based estimators: pseudo-observations, the empirical copula,
// Chatterjee's coefficient, the empirical Kendall distribution with generator
// reconstruction, and the endpoint-corrected CFG Pickands estimator.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "condcop/archimedean.hpp"
#include "condcop/extreme_value.hpp"
#include "condcop/metrics.hpp"
#include "condcop/sample_set.hpp"

namespace condcop {

struct PseudoObservations {
  std::vector<double> u;
  std::vector<double> v;
  bool ties_u = false;
  bool ties_v = false;

  std::size_t size() const { return u.size(); }
};

// Average ranks divided by n + 1.
PseudoObservations pseudo_obs(const SampleSet& s);

// (1/n) #{i : u_i <= x, v_i <= y}.
double empirical_copula_cdf(const PseudoObservations& p, double x, double y);

// Chatterjee's rank coefficient; ties in x are broken uniformly at random
// with a generator seeded by `seed`. Throws when all y are equal.
double chatterjee_r(const SampleSet& s, std::uint64_t seed);

class EmpiricalKendall {
 public:
  // `w` are the pseudo-observation levels W_i; `projected` selects
  // max(K_n(t), t) instead of the raw step function K_n.
  EmpiricalKendall(std::vector<double> w, bool projected);

  double operator()(double t) const;
  double raw(double t) const;  // K_n(t) = #{W_i <= t} / n
  const std::vector<double>& jumps() const { return w_; }
  bool projected() const { return projected_; }

 private:
  std::vector<double> w_;  // sorted
  bool projected_;
};

// W_i = #{j != i : u_j < u_i, v_j < v_i} / (n - 1).
std::vector<double> kendall_levels(const PseudoObservations& p);

EmpiricalKendall empirical_kendall(const PseudoObservations& p, bool projected = true);

struct ReconstructionOptions {
  int grid = 10000;               // nodes k / grid, k = 1..grid; must be even
  double eps = 1e-6;              // t - F(t) is floored at -eps
  double strict_threshold = 1e6;  // strict iff phi(1 / grid) exceeds this
};

// log phi(x) = int_{1/2}^{x} dt / min(t - F(t), -eps) by the trapezoid rule,
// so phi(1/2) = 1.
Generator reconstruct_generator(const std::function<double(double)>& kendall_cdf,
                                const ReconstructionOptions& opt = {});
Generator reconstruct_generator(const EmpiricalKendall& k,
                                const ReconstructionOptions& opt = {});

struct RawPickands {
  std::vector<double> t;
  std::vector<double> a;
};

// Endpoint-corrected CFG estimator on t_k = k / (t_grid - 1).
RawPickands cfg_estimator(const PseudoObservations& p, int t_grid = 501);

// Greatest convex minorant of the points (xs sorted increasingly); returns the
// hull vertices.
std::vector<PickandsKnot> greatest_convex_minorant(const std::vector<double>& xs,
                                                   const std::vector<double>& ys);

// Clamps to [max(t, 1 - t), 1] and takes the greatest convex minorant.
PickandsFunction convexify_pickands(const RawPickands& raw);

enum class Structure { archimedean, extreme_value };

Copula plugin_copula(const PseudoObservations& p, Structure which);

struct PluginEstimate {
  double zeta1 = 0.0;
  double r = 0.0;
};

PluginEstimate plugin_zeta1_r(const PseudoObservations& p, Structure which,
                              const Quadrature& q = {});

}  // namespace condcop
