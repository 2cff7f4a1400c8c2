#pragma once

#include <vector>

#include "solfour/exact/int_matrix.hpp"

namespace solfour {

/// P * M * Q = S with P, Q unimodular and S diagonal.  The diagonal is
/// nonnegative, each entry divides the next, and zeros trail.  The inverses
/// of P and Q are accumulated alongside so callers never need to invert.
struct SmithDecomposition {
  IntMatrix S;
  IntMatrix P;
  IntMatrix Q;
  IntMatrix P_inv;
  IntMatrix Q_inv;

  /// The min(rows, cols) diagonal entries d_1 | d_2 | ...
  [[nodiscard]] std::vector<Int> diagonal() const;
  /// Number of nonzero diagonal entries.
  [[nodiscard]] std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

}  // namespace solfour
