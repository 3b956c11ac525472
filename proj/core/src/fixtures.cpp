#include "condcop/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace condcop {

Copula typewriter_copula(int big_n, int i) {
  if (big_n < 0 || big_n > 40) throw std::invalid_argument("typewriter: N must lie in 0..40");
  const long long cells = 1LL << big_n;
  if (i < 1 || i > cells) throw std::invalid_argument("typewriter: i must lie in 1..2^N");
  const double len = std::ldexp(1.0, -big_n);
  const double a = static_cast<double>(i - 1) * len;
  const double b = a + len;
  std::ostringstream label;
  label << "typewriter:" << big_n << "," << i;
  auto cdf = [a, b, len](double x, double y) {
    x = std::clamp(x, 0.0, 1.0);
    y = std::clamp(y, 0.0, 1.0);
    const double overlap = std::max(0.0, std::min(x, b) - a);
    const double strip = std::max(0.0, std::min({x, b, a + y * len}) - a);
    return y * (x - overlap) + strip;
  };
  auto kernel = [a, b, big_n, i](double x, double y) {
    if (x >= a && x <= b) {
      const double h = std::ldexp(x, big_n) + 1.0 - i;
      return h <= y ? 1.0 : 0.0;
    }
    return std::clamp(y, 0.0, 1.0);
  };
  return Copula(label.str(), cdf, kernel);
}

TypewriterIndex typewriter_index(long long n) {
  if (n < 0) throw std::invalid_argument("typewriter: index must be >= 0");
  int big_n = 0;
  while ((1LL << (big_n + 1)) <= n + 1) ++big_n;
  return {big_n, static_cast<int>(n + 2 - (1LL << big_n))};
}

Copula shift_copula(int n) {
  if (n < 0 || n > 40) throw std::invalid_argument("shift copula: n must lie in 0..40");
  const double scale = std::ldexp(1.0, n);
  auto h = [n](double x) {
    const double s = std::ldexp(x, n);
    return s - std::floor(s);
  };
  auto cdf = [n](double x, double y) {
    x = std::clamp(x, 0.0, 1.0);
    y = std::clamp(y, 0.0, 1.0);
    const double s = std::ldexp(x, n);
    const double k = std::floor(s);
    return std::ldexp(k * y + std::min(s - k, y), -n);
  };
  auto kernel = [h](double x, double y) { return h(x) <= y ? 1.0 : 0.0; };
  auto transposed = [scale](double x, double y) {
    if (y < 0.0) return 0.0;
    // #{i in 0..2^n-1 : (x + i) / 2^n <= y}
    const double c = std::floor(y * scale - x) + 1.0;
    return std::clamp(c, 0.0, scale) / scale;
  };
  return Copula("shift:" + std::to_string(n), cdf, kernel, transposed);
}

Generator make_w_limit_generator(double k) {
  if (!(k > 0.0)) throw std::invalid_argument("w-limit generator: k must be > 0");
  constexpr double kLn2 = 0.69314718055994530942;
  const double norm = 1.0 + 1.0 / k;
  GeneratorFunctions f;
  f.phi = [k, norm](double t) { return (2.0 * (1.0 - t) - std::log(t) / (k * kLn2)) / norm; };
  f.dplus_phi = [k, norm](double t) { return (-2.0 - 1.0 / (k * t * kLn2)) / norm; };
  std::ostringstream label;
  label << "w-limit:" << k;
  return Generator(label.str(), std::move(f));
}

}  // namespace condcop
