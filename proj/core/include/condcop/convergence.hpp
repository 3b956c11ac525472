#pragma once

// Discrepancies between a family member and a limit, one per equivalent mode
// of convergence.

#include <string>
#include <vector>

#include "condcop/archimedean.hpp"
#include "condcop/extreme_value.hpp"
#include "condcop/metrics.hpp"

namespace condcop {

struct ConvergenceGrid {
  int cdf_grid = 100;         // sup |C_k - C| on {i/100}^2
  int function_grid = 1000;   // grid for phi, D+phi, Kendall, A, D+A
  double phi_lower = 0.05;    // phi and D+phi are compared on [phi_lower, 1)
  Quadrature quadrature{};    // D1
  int wcc_points = 25;
  int wcc_y_grid = 2048;
};

struct Discrepancy {
  std::string name;
  double value = 0.0;
};

// cdf, kendall, phi, dplus_phi, d1, wcc.
std::vector<Discrepancy> archimedean_discrepancies(const Generator& gk, const Generator& g,
                                                   const ConvergenceGrid& grid = {});

// cdf, pickands, dplus_pickands, d1, wcc.
std::vector<Discrepancy> ev_discrepancies(const PickandsFunction& ak,
                                          const PickandsFunction& a,
                                          const ConvergenceGrid& grid = {});

// cdf, d1, wcc for arbitrary copulas.
std::vector<Discrepancy> copula_discrepancies(const Copula& ck, const Copula& c,
                                              const ConvergenceGrid& grid = {});

}  // namespace condcop
