#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "solfour/exact/int_matrix.hpp"

// Box searches over GL(2,Z).  The parallel kernels run over a precomputed
// list of small unimodular matrices in machine integers; the serial
// reference walks the same box with exact arithmetic and is kept for
// testing and benchmarking.  Both visit candidates in the same order:
// by max |entry|, then lexicographically in (a, b, c, d).
namespace solfour::gl2z::kernels {

/// Largest box half-width accepted by the searches.
inline constexpr int kMaxBound = 40;

struct Mat2 {
  std::int64_t a, b, c, d;  // [[a, b], [c, d]]

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

constexpr Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

/// Narrow a 2x2 matrix whose entries fit comfortably in machine words.
std::optional<Mat2> to_small(const IntMatrix& m);
IntMatrix to_int_matrix(const Mat2& m);

/// Every matrix with entries in [-bound, bound] and |det| = 1, in search order.
/// Cached per bound; the returned span stays valid for the process lifetime.
std::span<const Mat2> unimodular_box(int bound);

namespace parallel {
std::optional<std::size_t> first_conjugator(std::span<const Mat2> box, const Mat2& m, const Mat2& n);
std::vector<std::size_t> centralizer(std::span<const Mat2> box, const Mat2& m);
}  // namespace parallel

namespace serial {
std::optional<IntMatrix> first_conjugator(const IntMatrix& m, const IntMatrix& n, int bound);
std::vector<IntMatrix> centralizer(const IntMatrix& m, int bound);
}  // namespace serial

}  // namespace solfour::gl2z::kernels
