#include <doctest.h>

#include <cmath>
#include <random>

#include "condcop/fixtures.hpp"
#include "condcop/metrics.hpp"
#include "condcop/registry.hpp"

using namespace condcop;

namespace {

// Clayton kernel written out directly, independent of the generator code.
double clayton_kernel(double theta, double x, double y) {
  const double s = std::pow(x, -theta) + std::pow(y, -theta) - 1.0;
  return std::pow(x, -theta - 1.0) * std::pow(s, -1.0 / theta - 1.0);
}

// Two-dimensional R2 low-discrepancy sequence.
double clayton_d1_oracle(double theta, int points) {
  const double g = 1.32471795724474602596;
  const double a1 = 1.0 / g;
  const double a2 = 1.0 / (g * g);
  double sum = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = std::fmod(0.5 + a1 * (i + 1), 1.0);
    const double y = std::fmod(0.5 + a2 * (i + 1), 1.0);
    sum += std::abs(clayton_kernel(theta, x, y) - y);
  }
  return sum / points;
}

}  // namespace

TEST_CASE("quadrature validation") {
  CHECK_THROWS_AS(validate(Quadrature{4, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Quadrature{64, 0}), std::invalid_argument);
  CHECK_NOTHROW(validate(Quadrature{8, 1}));
}

TEST_CASE("d_inf") {
  const Quadrature q{512, 1};
  CHECK(d_inf(make_pi(), make_pi(), q) == 0.0);
  CHECK(d_inf(make_m(), make_pi(), q) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(d_inf(make_w(), make_pi(), q) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(d_inf_error_bound(q) == doctest::Approx(2.0 / 512));
}

TEST_CASE("kernel distances between the basic copulas") {
  const Quadrature q{512, 1};
  CHECK(d1(make_m(), make_pi(), q) == doctest::Approx(1.0 / 3.0).epsilon(2e-3 * 3));
  CHECK(std::abs(d1(make_m(), make_pi(), q) - 1.0 / 3.0) <= 2e-3);
  CHECK(d1(make_pi(), make_pi(), q) == 0.0);
  CHECK(std::abs(d2_squared(make_m(), make_pi(), q) - 1.0 / 6.0) <= 2e-3);
  CHECK(d2_squared(make_pi(), make_pi(), q) == 0.0);
  CHECK(std::abs(d_infty_metric(make_m(), make_pi(), q) - 0.5) <= 2e-3);
  CHECK(std::abs(partial_distance(make_m(), make_pi(), q) - 2.0 / 3.0) <= 4e-3);
  const Copula c = make_copula("gumbel:3");
  CHECK(partial_distance(c, c, q) == 0.0);
}

TEST_CASE("D1 of Clayton against a quasi-random oracle") {
  const double oracle = clayton_d1_oracle(2.0, 1000000);
  const double value = d1(make_copula("clayton:2"), make_pi(), Quadrature{512, 1});
  CHECK(std::abs(value - oracle) <= 1e-3);
}

TEST_CASE("dependence measures of the basic copulas") {
  const Quadrature q{512, 1};
  CHECK(zeta1(make_pi(), q) == 0.0);
  CHECK(r_measure(make_pi(), q) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(zeta1(make_m(), q) - 1.0) <= 6e-3);
  CHECK(std::abs(r_measure(make_m(), q) - 1.0) <= 6e-3);
  CHECK(std::abs(r_measure(make_w(), q) - 1.0) <= 6e-3);
  CHECK(std::abs(zeta1(make_copula("galambos:3"), q) - 0.7513) <= 5e-3);
  CHECK(std::abs(zeta1(make_copula("gumbel:3"), q) - 0.6910) <= 5e-3);
}

TEST_CASE("r identity, range and bounds on every family") {
  const Quadrature q{256, 1};
  for (const auto& spec : example_family_specs()) {
    CAPTURE(spec);
    const Copula c = make_copula(spec);
    const RMeasure r = r_measure_checked(c, q);
    CHECK(r.gap() <= 1e-6);
    const DependenceMeasures dm = dependence_measures(c, q);
    CHECK(dm.r == doctest::Approx(r.value).epsilon(1e-12));
    CHECK(dm.zeta1 >= -6e-3);
    CHECK(dm.zeta1 <= 1.0 + 6e-3);
    CHECK(dm.r >= -6e-3);
    CHECK(dm.r <= 1.0 + 6e-3);
    const double d = d1(c, make_pi(), q);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0 / 3.0 + 2.0 / q.m);
  }
}

TEST_CASE("metric axioms on family members") {
  const Quadrature q{128, 1};
  std::vector<Copula> members;
  for (const char* s : {"clayton:1", "clayton:4", "gumbel:2", "gumbel:5", "frank:3", "frank:-3",
                        "galambos:1", "galambos:3", "marshall-olkin:0.2,0.7", "pi", "m"}) {
    members.push_back(make_copula(s));
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  for (int t = 0; t < 10; ++t) {
    const Copula& a = members[pick(rng)];
    const Copula& b = members[pick(rng)];
    const Copula& c = members[pick(rng)];
    CHECK(std::abs(d1(a, b, q) - d1(b, a, q)) <= 1e-12);
    CHECK(d1(a, c, q) <= d1(a, b, q) + d1(b, c, q) + 1e-3);
  }
}

TEST_CASE("thread count does not change results") {
  const Copula c = make_copula("galambos:3");
  const auto one = kernel_distances(c, make_pi(), Quadrature{256, 1});
  const auto four = kernel_distances(c, make_pi(), Quadrature{256, 4});
  CHECK(one.d1 == four.d1);
  CHECK(one.d2_squared == four.d2_squared);
  CHECK(one.d_infty == four.d_infty);
  CHECK(r_measure(c, Quadrature{256, 1}) == r_measure(c, Quadrature{256, 3}));
}

TEST_CASE("shift copulas") {
  const Quadrature q{512, 1};
  const Copula pi = make_pi();
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const Copula c = shift_copula(n);
    CHECK(std::abs(d1(c, pi, q) - 1.0 / 3.0) <= 2e-3);
  }
  const Copula c4 = shift_copula(4);
  const double pd = partial_distance(c4, pi, q);
  CHECK(pd > 1.0 / 3.0 - 2e-3);
  CHECK(pd < 1.0 / 3.0 + 0.05);
}

TEST_CASE("Levy distance") {
  std::vector<double> f(101), g(101), h(101);
  for (int j = 0; j <= 100; ++j) {
    const double y = j / 100.0;
    f[j] = y >= 0.5 ? 1.0 : 0.0;
    g[j] = y >= 0.6 ? 1.0 : 0.0;
    h[j] = y;
  }
  CHECK(levy_distance(f, f) == 0.0);
  // interpolated steps are ramps of width 0.01: eps + 100 (eps - 0.09) = 1
  CHECK(levy_distance(f, g) == doctest::Approx(10.0 / 101.0).epsilon(1e-9));
  CHECK(levy_distance(f, g) == doctest::Approx(levy_distance(g, f)).epsilon(1e-12));
  const double fh = levy_distance(f, h);
  CHECK(fh > 0.0);
  CHECK(fh <= 0.5);
  CHECK_THROWS_AS(levy_distance(std::vector<double>{0.0, 1.0}, std::vector<double>{0.0, 0.5, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("wcc profile") {
  const auto xs = golden_abscissae(25);
  REQUIRE(xs.size() == 25);
  CHECK(xs[0] == doctest::Approx(0.6180339887498949));
  for (double x : xs) {
    CHECK(x > 0.0);
    CHECK(x < 1.0);
    CHECK(std::abs(x * 256 - std::round(x * 256)) > 1e-6);
  }
  const Copula c = make_copula("clayton:2");
  const WccProfile same = wcc_profile(c, c, xs);
  CHECK(same.max == 0.0);
  CHECK(same.mean == 0.0);
  const WccProfile p = wcc_profile(c, make_pi(), xs, 512);
  double mx = 0.0;
  double mean = 0.0;
  for (double d : p.dist) {
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
    mx = std::max(mx, d);
    mean += d / p.dist.size();
  }
  CHECK(p.max == mx);
  CHECK(p.mean == doctest::Approx(mean));
  CHECK(p.q95 <= p.max);
  CHECK(p.q95 == quantile(p.dist, 0.95));
}

TEST_CASE("quantile and pairwise sum") {
  CHECK(quantile({4.0, 1.0, 3.0, 2.0}, 0.25) == doctest::Approx(1.75));
  CHECK(quantile({4.0, 1.0, 3.0, 2.0}, 0.5) == doctest::Approx(2.5));
  CHECK(quantile({5.0}, 0.9) == 5.0);
  std::vector<double> v(1000, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}
