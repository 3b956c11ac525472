#pragma once

// Sampling by conditional inversion: x ~ U(0,1), then
// y = inf{y : K(x, [0, y]) >= u} with u ~ U(0,1).

#include <cstdint>
#include <random>

#include "condcop/copula.hpp"
#include "condcop/sample_set.hpp"

namespace condcop {

struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// mt19937_64 seeded through std::seed_seq with the 32-bit halves of seed and
// stream, in that order.
std::mt19937_64 make_engine(const RngSpec& rng);

// Uniform double in (0, 1): ((r >> 11) + 1/2) * 2^-53.
double uniform_open(std::mt19937_64& engine);

inline constexpr int kInversionSteps = 60;

// Generalized inverse of y -> c.kernel_cdf(x, y) at level u by bisection.
double conditional_inverse(const Copula& c, double x, double u,
                           int steps = kInversionSteps);

SampleSet sample(const Copula& c, std::size_t n, const RngSpec& rng);

// Lattice sup-distance between the empirical copula of a fresh sample and c
// on {i/grid} x {j/grid}.
double sample_fidelity(const Copula& c, std::size_t n, const RngSpec& rng, int grid = 100);

}  // namespace condcop
