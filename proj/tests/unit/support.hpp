#pragma once

#include <random>

#include "oracles.hpp"
#include "solfour/exact/int_matrix.hpp"

namespace testing_support {

inline oracle::M2 to_m2(const solfour::IntMatrix& m) {
  return {solfour::to_long(m(0, 0)), solfour::to_long(m(0, 1)), solfour::to_long(m(1, 0)), solfour::to_long(m(1, 1))};
}

inline solfour::IntMatrix from_m2(const oracle::M2& m) { return {{m[0], m[1]}, {m[2], m[3]}}; }

inline oracle::Dense to_dense(const solfour::IntMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<oracle::i64>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = solfour::to_long(m(i, j));
  return d;
}

inline solfour::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  solfour::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline solfour::IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, long bound) {
  while (true) {
    auto m = random_matrix(rng, n, n, bound);
    if (solfour::is_unimodular(m)) return m;
  }
}

}  // namespace testing_support
