#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "monobox/geometry.hpp"

namespace testing_support {

/// Product of random Givens rotations; any n >= 2.
inline monobox::Rotation random_rotation(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double t = ang(rng);
      const double c = std::cos(t), s = std::sin(t);
      for (std::size_t r = 0; r < n; ++r) {
        const double x = m[r * n + a], y = m[r * n + b];
        m[r * n + a] = c * x - s * y;
        m[r * n + b] = s * x + c * y;
      }
    }
  }
  return monobox::Rotation(n, m);
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace testing_support
