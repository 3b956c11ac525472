#include "condcop/convergence.hpp"

#include <algorithm>
#include <cmath>

namespace condcop {

namespace {

template <class F>
double sup_on(double lo, double hi, int points, bool include_hi, F&& f) {
  double worst = 0.0;
  const int last = include_hi ? points : points - 1;
  for (int i = 0; i <= last; ++i) {
    const double t = lo + (hi - lo) * i / points;
    worst = std::max(worst, std::abs(f(t)));
  }
  return worst;
}

}  // namespace

std::vector<Discrepancy> copula_discrepancies(const Copula& ck, const Copula& c,
                                              const ConvergenceGrid& grid) {
  Quadrature lattice = grid.quadrature;
  lattice.m = grid.cdf_grid;
  return {
      {"cdf", d_inf(ck, c, lattice)},
      {"d1", d1(ck, c, grid.quadrature)},
      {"wcc", wcc_profile(ck, c, golden_abscissae(grid.wcc_points), grid.wcc_y_grid).max},
  };
}

std::vector<Discrepancy> archimedean_discrepancies(const Generator& gk, const Generator& g,
                                                   const ConvergenceGrid& grid) {
  const Copula ck = archimedean_copula(gk);
  const Copula c = archimedean_copula(g);
  const KendallFunction fk = kendall_function(gk);
  const KendallFunction f = kendall_function(g);
  const int n = grid.function_grid;
  const auto base = copula_discrepancies(ck, c, grid);
  return {
      base[0],
      {"kendall", sup_on(0.0, 1.0, n, false, [&](double t) {
         return t == 0.0 ? 0.0 : fk(t) - f(t);
       })},
      {"phi", sup_on(grid.phi_lower, 1.0, n, true,
                     [&](double t) { return gk.phi(t) - g.phi(t); })},
      {"dplus_phi", sup_on(grid.phi_lower, 1.0, n, false,
                           [&](double t) { return gk.dplus_phi(t) - g.dplus_phi(t); })},
      base[1],
      base[2],
  };
}

std::vector<Discrepancy> ev_discrepancies(const PickandsFunction& ak,
                                          const PickandsFunction& a,
                                          const ConvergenceGrid& grid) {
  const auto base = copula_discrepancies(ev_copula(ak), ev_copula(a), grid);
  const int n = grid.function_grid;
  return {
      base[0],
      {"pickands", sup_on(0.0, 1.0, n, true, [&](double t) { return ak(t) - a(t); })},
      {"dplus_pickands", sup_on(0.0, 1.0, n, false, [&](double t) {
         return t == 0.0 ? 0.0 : ak.dplus_a(t) - a.dplus_a(t);
       })},
      base[1],
      base[2],
  };
}

}  // namespace condcop
