#include "condcop/checkerboard.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace condcop {

CheckerboardMatrix::CheckerboardMatrix(std::size_t n, std::vector<double> mass)
    : n_(n), mass_(std::move(mass)) {
  if (n_ == 0) throw std::invalid_argument("checkerboard: resolution must be >= 1");
  if (mass_.size() != n_ * n_) {
    throw std::invalid_argument("checkerboard: expected " +
                                std::to_string(n_ * n_) + " cell masses");
  }
  for (double m : mass_) {
    if (!std::isfinite(m) || m < 0.0) {
      throw std::invalid_argument("checkerboard: cell masses must be finite and >= 0");
    }
  }
}

double CheckerboardMatrix::max_margin_defect() const {
  const double target = 1.0 / static_cast<double>(n_);
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      row += mass_[i * n_ + j];
      col += mass_[j * n_ + i];
    }
    worst = std::max({worst, std::abs(row - target), std::abs(col - target)});
  }
  return worst;
}

double CheckerboardMatrix::total_mass() const {
  double s = 0.0;
  for (double m : mass_) s += m;
  return s;
}

CheckerboardMatrix checkerboard_approx(const Copula& c, std::size_t n) {
  if (n == 0) throw std::invalid_argument("checkerboard_approx: N must be >= 1");
  const double dn = static_cast<double>(n);
  // Lattice values C(i/N, j/N), i, j = 0..N.
  std::vector<double> lattice((n + 1) * (n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      lattice[i * (n + 1) + j] =
          c.cdf(static_cast<double>(i) / dn, static_cast<double>(j) / dn);
    }
  }
  std::vector<double> mass(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = lattice[(i + 1) * (n + 1) + (j + 1)] -
                       lattice[i * (n + 1) + (j + 1)] -
                       lattice[(i + 1) * (n + 1) + j] + lattice[i * (n + 1) + j];
      // Rounding can leave volumes of order -1e-17.
      mass[i * n + j] = std::max(v, 0.0);
    }
  }
  return CheckerboardMatrix(n, std::move(mass));
}

namespace {

struct CheckerboardTables {
  std::size_t n = 0;
  std::vector<double> cumulative;  // (n+1)^2, S(i, j) = mass of [0,i/N]x[0,j/N]
  std::vector<double> row_prefix;  // n x (n+1), N * sum_{j'<j} mass(i, j')
  std::vector<double> col_prefix;  // n x (n+1), N * sum_{i'<i} mass(i', j)

  std::size_t cell(double t) const {
    const double s = t * static_cast<double>(n);
    if (s <= 0.0) return 0;
    return std::min(static_cast<std::size_t>(s), n - 1);
  }

  double cdf(double x, double y) const {
    x = std::clamp(x, 0.0, 1.0);
    y = std::clamp(y, 0.0, 1.0);
    const double dn = static_cast<double>(n);
    const std::size_t i = cell(x);
    const std::size_t j = cell(y);
    const double fx = x * dn - static_cast<double>(i);
    const double fy = y * dn - static_cast<double>(j);
    const std::size_t w = n + 1;
    const double s00 = cumulative[i * w + j];
    const double s10 = cumulative[(i + 1) * w + j];
    const double s01 = cumulative[i * w + j + 1];
    const double s11 = cumulative[(i + 1) * w + j + 1];
    // Exact at lattice points: fx = fy = 0 returns s00 unchanged.
    if (fx == 0.0 && fy == 0.0) return s00;
    return s00 * (1.0 - fx) * (1.0 - fy) + s10 * fx * (1.0 - fy) +
           s01 * (1.0 - fx) * fy + s11 * fx * fy;
  }

  static double along(const std::vector<double>& prefix, std::size_t n,
                      std::size_t row, double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double dn = static_cast<double>(n);
    const std::size_t j = std::min(static_cast<std::size_t>(t * dn), n - 1);
    const double f = t * dn - static_cast<double>(j);
    const double* p = prefix.data() + row * (n + 1);
    return std::clamp(p[j] + f * (p[j + 1] - p[j]), 0.0, 1.0);
  }

  double kernel(double x, double y) const {
    return along(row_prefix, n, cell(x), y);
  }
  double transposed_kernel(double x, double y) const {
    return along(col_prefix, n, cell(x), y);
  }
};

}  // namespace

Copula checkerboard_copula(const CheckerboardMatrix& m) {
  const double defect = m.max_margin_defect();
  if (!(defect <= kCheckerboardMarginTolerance)) {
    throw std::invalid_argument(
        "checkerboard_copula: matrix is not doubly stochastic (margin defect " +
        std::to_string(defect) + ")");
  }
  auto t = std::make_shared<CheckerboardTables>();
  const std::size_t n = m.resolution();
  const double dn = static_cast<double>(n);
  t->n = n;
  t->cumulative.assign((n + 1) * (n + 1), 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      t->cumulative[i * (n + 1) + j] = m(i - 1, j - 1) +
                                       t->cumulative[(i - 1) * (n + 1) + j] +
                                       t->cumulative[i * (n + 1) + j - 1] -
                                       t->cumulative[(i - 1) * (n + 1) + j - 1];
    }
  }
  t->row_prefix.assign(n * (n + 1), 0.0);
  t->col_prefix.assign(n * (n + 1), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t->row_prefix[i * (n + 1) + j + 1] = t->row_prefix[i * (n + 1) + j] + dn * m(i, j);
      t->col_prefix[i * (n + 1) + j + 1] = t->col_prefix[i * (n + 1) + j] + dn * m(j, i);
    }
  }
  return Copula(
      "checkerboard:" + std::to_string(n),
      [t](double x, double y) { return t->cdf(x, y); },
      [t](double x, double y) { return t->kernel(x, y); },
      [t](double x, double y) { return t->transposed_kernel(x, y); });
}

}  // namespace condcop
