#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "condcop/copula.hpp"

namespace condcop {

// Cell masses of an N x N checkerboard. Entry (i, j) is the mass of
// [i/N, (i+1)/N] x [j/N, (j+1)/N]; i indexes x, j indexes y.
class CheckerboardMatrix {
 public:
  // Requires mass.size() == n * n (row-major in i) with finite, nonnegative
  // entries. Margins are not checked here; see max_margin_defect().
  CheckerboardMatrix(std::size_t n, std::vector<double> mass);

  std::size_t resolution() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return mass_[i * n_ + j]; }
  std::span<const double> masses() const { return mass_; }

  // max over rows and columns of |sum - 1/N|.
  double max_margin_defect() const;
  double total_mass() const;

 private:
  std::size_t n_;
  std::vector<double> mass_;
};

// N-checkerboard approximation: cell masses are the C-volumes of the cells.
CheckerboardMatrix checkerboard_approx(const Copula& c, std::size_t n);

inline constexpr double kCheckerboardMarginTolerance = 1e-9;

// Checkerboard copula spreading each cell's mass uniformly. The kernel is
// constant in x on every column of cells. Throws std::invalid_argument when
// the margins deviate from 1/N by more than kCheckerboardMarginTolerance.
Copula checkerboard_copula(const CheckerboardMatrix& m);

}  // namespace condcop
