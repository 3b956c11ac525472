#include <doctest.h>

#include <cmath>

#include "../common/checks.hpp"
#include "condcop/checkerboard.hpp"
#include "condcop/copula.hpp"
#include "condcop/registry.hpp"

using namespace condcop;
using condcop::testing::copula_axioms;
using condcop::testing::disintegration_defect;

TEST_CASE("basic copulas") {
  const Copula pi = make_pi();
  CHECK(pi.cdf(0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(pi.kernel_cdf(0.3, 0.7) == 0.7);
  CHECK(pi.cdf(1.0, 0.37) == 0.37);

  const Copula m = make_m();
  CHECK(m.kernel_cdf(0.4, 0.4) == 1.0);
  CHECK(m.kernel_cdf(0.4, 0.39) == 0.0);
  CHECK(m.cdf(0.3, 0.8) == 0.3);

  const Copula w = make_w();
  CHECK(w.kernel_cdf(0.3, 0.69) == 0.0);
  CHECK(w.kernel_cdf(0.3, 0.7) == 1.0);
  CHECK(w.cdf(0.3, 0.8) == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("Marshall-Olkin") {
  const Copula pi_like = make_marshall_olkin({0.0, 0.0});
  for (double x : {0.1, 0.5, 0.9}) {
    for (double y : {0.2, 0.6, 0.95}) CHECK(pi_like.cdf(x, y) == doctest::Approx(x * y));
  }
  CHECK(make_marshall_olkin({1.0, 1.0}).cdf(0.4, 0.7) == doctest::Approx(0.4));
  // boundary case y^beta = x^alpha
  CHECK(make_marshall_olkin({0.5, 0.5}).kernel_cdf(0.25, 0.25) ==
        doctest::Approx(std::pow(0.25, 0.5)));
  CHECK(make_marshall_olkin({0.5, 0.5}).kernel_cdf(0.25, 0.5) ==
        doctest::Approx(std::pow(0.5, 0.5)));
  CHECK_THROWS_AS(make_marshall_olkin({1.2, 0.3}), std::invalid_argument);
  CHECK_THROWS_AS(make_marshall_olkin({0.2, -0.1}), std::invalid_argument);
}

TEST_CASE("transpose") {
  const Copula t = transpose(make_pi());
  CHECK(t.cdf(0.3, 0.6) == doctest::Approx(0.18));
  const Copula mo = make_marshall_olkin({0.3, 0.6});
  const Copula swapped = make_marshall_olkin({0.6, 0.3});
  const Copula mt = transpose(mo);
  const Copula mtt = transpose(mt);
  double worst = 0.0;
  double worst_tt = 0.0;
  for (int i = 0; i <= 50; ++i) {
    for (int j = 0; j <= 50; ++j) {
      const double x = i / 50.0;
      const double y = j / 50.0;
      worst = std::max(worst, std::abs(mt.cdf(x, y) - swapped.cdf(x, y)));
      worst_tt = std::max(worst_tt, std::abs(mtt.cdf(x, y) - mo.cdf(x, y)));
    }
  }
  CHECK(worst <= 1e-12);
  CHECK(worst_tt == 0.0);
  // numerical kernel of the transpose against the closed form of the swapped family
  double kernel_gap = 0.0;
  for (double x : {0.13, 0.41, 0.77}) {
    for (double y : {0.05, 0.3, 0.62, 0.9}) {
      kernel_gap = std::max(kernel_gap, std::abs(mt.kernel_cdf(x, y) - swapped.kernel_cdf(x, y)));
    }
  }
  CHECK(kernel_gap <= 1e-4);
}

TEST_CASE("checkerboard approximation") {
  const auto pi2 = checkerboard_approx(make_pi(), 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(pi2(i, j) == doctest::Approx(0.25));
  }
  const auto m4 = checkerboard_approx(make_m(), 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(m4(i, j) == doctest::Approx(i == j ? 0.25 : 0.0));
  }
  const auto w2 = checkerboard_approx(make_w(), 2);
  CHECK(w2(0, 1) == doctest::Approx(0.5));
  CHECK(w2(1, 0) == doctest::Approx(0.5));
  CHECK(w2(0, 0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(checkerboard_approx(make_pi(), 0), std::invalid_argument);
  CHECK(checkerboard_approx(make_copula("clayton:2"), 16).max_margin_defect() <= 1e-12);
}

TEST_CASE("checkerboard copula") {
  const Copula uniform = checkerboard_copula(checkerboard_approx(make_pi(), 2));
  CHECK(uniform.cdf(0.5, 0.5) == doctest::Approx(0.25));
  const Copula diag = checkerboard_copula(checkerboard_approx(make_m(), 4));
  for (double y : {0.0, 0.05, 0.1, 0.2, 0.25}) {
    CHECK(diag.kernel_cdf(0.1, y) == doctest::Approx(std::min(4.0 * y, 1.0)));
  }
  CHECK(diag.kernel_cdf(0.1, 0.6) == 1.0);
  CHECK_THROWS_AS(checkerboard_copula(CheckerboardMatrix(2, {0.5, 0.0, 0.0, 0.4})),
                  std::invalid_argument);
  CHECK_THROWS_AS(CheckerboardMatrix(2, {0.5, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(CheckerboardMatrix(2, {0.5, -0.1, 0.1, 0.5}), std::invalid_argument);

  const Copula clayton = make_copula("clayton:2");
  const auto mat = checkerboard_approx(clayton, 8);
  const Copula cb = checkerboard_copula(mat);
  double lattice = 0.0;
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      lattice = std::max(lattice, std::abs(cb.cdf(i / 8.0, j / 8.0) - clayton.cdf(i / 8.0, j / 8.0)));
    }
  }
  CHECK(lattice <= 1e-15);
  CHECK(disintegration_defect(cb, 64 * 8) <= 1e-10);
}

TEST_CASE("copula axioms and disintegration for every registered family") {
  for (const auto& spec : example_family_specs()) {
    CAPTURE(spec);
    const Copula c = make_copula(spec);
    const auto d = copula_axioms(c);
    CHECK(d.grounded <= 1e-10);
    CHECK(d.margins <= 1e-10);
    CHECK(d.two_increasing <= 1e-10);
    CHECK(d.kernel_monotone <= 1e-10);
    CHECK(d.kernel_top <= 1e-12);
    CHECK(d.kernel_range <= 1e-12);
    CHECK(disintegration_defect(c) <= 1e-3);
  }
}

TEST_CASE("copula axioms for transposes and checkerboards") {
  for (const char* spec : {"marshall-olkin:0.3,0.6", "pickands-pwl", "clayton:2"}) {
    CAPTURE(spec);
    const Copula c = make_copula(spec);
    CHECK(copula_axioms(transpose(c)).worst() <= 1e-8);
    CHECK(disintegration_defect(transpose(c)) <= 1e-3);
    const Copula cb = checkerboard_copula(checkerboard_approx(c, 16));
    CHECK(copula_axioms(cb).worst() <= 1e-10);
  }
}
