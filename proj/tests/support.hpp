#pragma once

// Shared helpers for the test binaries: a fixed-seed generator and small
// random objects built from it.

#include "sl2flip/lattice.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sl2test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline sl2flip::lattice::IntMatrix random_matrix(std::size_t rows, std::size_t cols, long bound) {
  sl2flip::lattice::IntMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = uniform(-bound, bound);
  return a;
}

/// Product of random elementary moves; determinant +-1.
inline std::vector<std::vector<std::int64_t>> random_unimodular_2d() {
  std::int64_t m[2][2] = {{1, 0}, {0, 1}};
  for (int step = 0; step < 6; ++step) {
    const std::int64_t t = uniform(-3, 3);
    const int which = static_cast<int>(uniform(0, 2));
    if (which == 0) {
      for (auto& row : m) row[0] += t * row[1];
    } else if (which == 1) {
      for (auto& row : m) row[1] += t * row[0];
    } else {
      for (auto& row : m) std::swap(row[0], row[1]);
    }
  }
  return {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}};
}

inline sl2flip::lattice::IntVec apply(const std::vector<std::vector<std::int64_t>>& u,
                                      const sl2flip::lattice::IntVec& v) {
  return {u[0][0] * v[0] + u[0][1] * v[1], u[1][0] * v[0] + u[1][1] * v[1]};
}

struct Instance {
  std::int64_t p, q, m;
};

/// Reduced heights p/q with q <= q_max and degrees m <= m_max.
inline std::vector<Instance> sweep(std::int64_t q_max, std::int64_t m_max, bool include_height_one = true) {
  std::vector<Instance> out;
  for (std::int64_t q = 1; q <= q_max; ++q)
    for (std::int64_t p = 1; p <= q; ++p) {
      if (sl2flip::lattice::gcd(p, q) != 1) continue;
      if (p == q && !include_height_one) continue;
      for (std::int64_t m = 1; m <= m_max; ++m) out.push_back({p, q, m});
    }
  return out;
}

}  // namespace sl2test
