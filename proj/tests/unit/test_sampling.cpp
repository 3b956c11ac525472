#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "condcop/registry.hpp"
#include "condcop/sample_set.hpp"
#include "condcop/sampling.hpp"

using namespace condcop;

namespace {

double pearson(const SampleSet& s) {
  const double n = static_cast<double>(s.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    mx += s.x[i] / n;
    my += s.y[i] / n;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    sxy += (s.x[i] - mx) * (s.y[i] - my);
    sxx += (s.x[i] - mx) * (s.x[i] - mx);
    syy += (s.y[i] - my) * (s.y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

double ks_uniform(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    d = std::max({d, (i + 1) / n - v[i], v[i] - i / n});
  }
  return d;
}

}  // namespace

TEST_CASE("uniform draws lie strictly inside the unit interval") {
  auto e = make_engine({1, 2});
  for (int i = 0; i < 100000; ++i) {
    const double u = uniform_open(e);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("basic samplers") {
  const SampleSet pi = sample(make_pi(), 10000, {42, 0});
  CHECK(std::abs(pearson(pi)) <= 0.03);
  const SampleSet m = sample(make_m(), 1000, {1, 0});
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(std::abs(m.y[i] - m.x[i]) <= 1e-9);
  const SampleSet w = sample(make_w(), 1000, {1, 0});
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(std::abs(w.y[i] - (1.0 - w.x[i])) <= 1e-9);
  CHECK_THROWS_AS(sample(make_pi(), 0, {1, 0}), std::invalid_argument);
}

TEST_CASE("determinism and stream separation") {
  const Copula c = make_copula("clayton:2");
  const SampleSet a = sample(c, 500, {9, 3});
  const SampleSet b = sample(c, 500, {9, 3});
  const SampleSet other = sample(c, 500, {9, 4});
  CHECK(a.x == b.x);
  CHECK(a.y == b.y);
  CHECK(a.x != other.x);
}

TEST_CASE("conditional inverse lands on atoms") {
  const Copula mo = make_copula("marshall-olkin:0.3,0.6");
  // the atom of the kernel is where y^beta = x^alpha
  const double x = 0.4;
  const double y_atom = std::pow(std::pow(x, 0.3), 1.0 / 0.6);
  const double lo = mo.kernel_cdf(x, y_atom * (1.0 - 1e-12));
  const double hi = mo.kernel_cdf(x, y_atom);
  REQUIRE(hi - lo > 0.1);
  CHECK(conditional_inverse(mo, x, 0.5 * (lo + hi)) == doctest::Approx(y_atom).epsilon(1e-12));
}

TEST_CASE("marginal uniformity") {
  const std::size_t n = 1000;
  const double bound = 1.63 / std::sqrt(static_cast<double>(n));
  for (const char* spec : {"clayton:2", "galambos:3", "marshall-olkin:0.3,0.6", "w-gen"}) {
    CAPTURE(spec);
    const Copula c = make_copula(spec);
    int ok_x = 0;
    int ok_y = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const SampleSet s = sample(c, n, {seed, 77});
      ok_x += ks_uniform(s.x) < bound;
      ok_y += ks_uniform(s.y) < bound;
    }
    CHECK(ok_x >= 95);
    CHECK(ok_y >= 95);
  }
}

TEST_CASE("sample fidelity") {
  CHECK(sample_fidelity(make_pi(), 100, {3, 0}) <= 0.2);
  for (const char* spec : {"clayton:2", "galambos:3"}) {
    CAPTURE(spec);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      CHECK(sample_fidelity(make_copula(spec), 20000, {seed, 0}) <= 0.02);
    }
  }
}

TEST_CASE("sample CSV round trip") {
  const SampleSet s = sample(make_copula("gumbel:3"), 50, {5, 0});
  std::stringstream io;
  write_sample_csv(io, s);
  CHECK(io.str().rfind("x,y\n", 0) == 0);
  const SampleSet back = read_sample_csv(io);
  CHECK(back.x == s.x);
  CHECK(back.y == s.y);

  std::stringstream bad_header("a,b\n0.1,0.2\n");
  CHECK_THROWS_AS(read_sample_csv(bad_header), std::invalid_argument);
  std::stringstream bad_row("x,y\n0.1\n");
  CHECK_THROWS_AS(read_sample_csv(bad_row), std::invalid_argument);
  std::stringstream bad_value("x,y\n0.1,abc\n");
  CHECK_THROWS_AS(read_sample_csv(bad_value), std::invalid_argument);
}
