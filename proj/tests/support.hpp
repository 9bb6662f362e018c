#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace sconvex::prop {

inline constexpr std::uint64_t kSeed = 0x5c0ffee5u;

// Seeded generator for property tests. Every draw is reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(integer(0, static_cast<int>(xs.size()) - 1))];
  }

  // 0 < a < b with b - a bounded away from zero.
  std::pair<double, double> interval(double lo, double hi) {
    const double a = uniform(lo, hi);
    return {a, a + uniform(0.05, hi - lo)};
  }

 private:
  std::mt19937_64 rng_;
};

inline double rel_diff(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return out;
}

}  // namespace sconvex::prop
