#pragma once

#include <random>

#include "algent/linalg.hpp"

namespace algent::testing {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

inline IntMatrix random_nonsingular(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  while (true) {
    IntMatrix m = random_matrix(rng, n, lo, hi);
    if (determinant(m) != 0) return m;
  }
}

// Laplace expansion along the first row; independent of Bareiss.
inline Int cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return a(0, 0);
  Int total(0);
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = a(i, j);
      }
    Int term = a(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline const IntMatrix& counterexample() {
  static const IntMatrix a{{-1, 1, 0}, {-1, 0, 1}, {1, 0, 0}};
  return a;
}

}  // namespace algent::testing
