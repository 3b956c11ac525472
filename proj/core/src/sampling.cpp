#include "condcop/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "condcop/estimation.hpp"

namespace condcop {

std::mt19937_64 make_engine(const RngSpec& rng) {
  std::seed_seq seq{static_cast<std::uint32_t>(rng.seed),
                    static_cast<std::uint32_t>(rng.seed >> 32),
                    static_cast<std::uint32_t>(rng.stream),
                    static_cast<std::uint32_t>(rng.stream >> 32)};
  return std::mt19937_64(seq);
}

double uniform_open(std::mt19937_64& engine) {
  return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

double conditional_inverse(const Copula& c, double x, double u, int steps) {
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < steps; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (c.kernel_cdf(x, mid) >= u) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

SampleSet sample(const Copula& c, std::size_t n, const RngSpec& rng) {
  if (n == 0) throw std::invalid_argument("sample: n must be >= 1");
  auto engine = make_engine(rng);
  SampleSet s;
  s.x.reserve(n);
  s.y.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = uniform_open(engine);
    const double u = uniform_open(engine);
    s.x.push_back(x);
    s.y.push_back(conditional_inverse(c, x, u));
  }
  return s;
}

namespace {

// Smallest i in 0..grid with v <= i / grid.
int lattice_bin(double v, int grid) {
  int b = std::clamp(static_cast<int>(std::ceil(v * grid)), 0, grid);
  while (b > 0 && v <= static_cast<double>(b - 1) / grid) --b;
  while (b < grid && v > static_cast<double>(b) / grid) ++b;
  return b;
}

}  // namespace

double sample_fidelity(const Copula& c, std::size_t n, const RngSpec& rng, int grid) {
  if (grid < 1) throw std::invalid_argument("sample_fidelity: grid must be >= 1");
  const PseudoObservations p = pseudo_obs(sample(c, n, rng));
  const std::size_t w = static_cast<std::size_t>(grid) + 1;
  std::vector<double> count(w * w, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    count[static_cast<std::size_t>(lattice_bin(p.u[k], grid)) * w +
          static_cast<std::size_t>(lattice_bin(p.v[k], grid))] += 1.0;
  }
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      double v = count[i * w + j];
      if (i > 0) v += count[(i - 1) * w + j];
      if (j > 0) v += count[i * w + j - 1];
      if (i > 0 && j > 0) v -= count[(i - 1) * w + j - 1];
      count[i * w + j] = v;
    }
  }
  double worst = 0.0;
  const double inv_n = 1.0 / static_cast<double>(p.size());
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      const double x = static_cast<double>(i) / grid;
      const double y = static_cast<double>(j) / grid;
      worst = std::max(worst, std::abs(count[i * w + j] * inv_n - c.cdf(x, y)));
    }
  }
  return worst;
}

}  // namespace condcop
