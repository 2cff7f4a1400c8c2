#include "solfour/gl2z/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

namespace solfour::gl2z::kernels {

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 31;

std::int64_t norm(const Mat2& m) {
  return std::max({std::llabs(m.a), std::llabs(m.b), std::llabs(m.c), std::llabs(m.d)});
}

std::vector<Mat2> build_box(int bound) {
  std::vector<Mat2> out;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      for (std::int64_t c = -bound; c <= bound; ++c)
        for (std::int64_t d = -bound; d <= bound; ++d) {
          const std::int64_t det = a * d - b * c;
          if (det == 1 || det == -1) out.push_back({a, b, c, d});
        }
  std::stable_sort(out.begin(), out.end(), [](const Mat2& x, const Mat2& y) { return norm(x) < norm(y); });
  return out;
}

void check_bound(int bound) {
  if (bound < 0 || bound > kMaxBound)
    throw BoundError("search bound " + std::to_string(bound) + " outside [0, " + std::to_string(kMaxBound) + "]");
}

}  // namespace

std::optional<Mat2> to_small(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) return std::nullopt;
  std::int64_t e[4];
  for (std::size_t i = 0; i < 4; ++i) {
    const Int& x = m(i / 2, i % 2);
    if (!x.fits_slong_p()) return std::nullopt;
    e[i] = x.get_si();
    if (e[i] >= kSmallLimit || e[i] <= -kSmallLimit) return std::nullopt;
  }
  return Mat2{e[0], e[1], e[2], e[3]};
}

IntMatrix to_int_matrix(const Mat2& m) { return IntMatrix{{static_cast<long>(m.a), static_cast<long>(m.b)}, {static_cast<long>(m.c), static_cast<long>(m.d)}}; }

std::span<const Mat2> unimodular_box(int bound) {
  check_bound(bound);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const std::vector<Mat2>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[bound];
  if (!slot) slot = std::make_unique<const std::vector<Mat2>>(build_box(bound));
  return *slot;
}

namespace parallel {

std::optional<std::size_t> first_conjugator(std::span<const Mat2> box, const Mat2& m, const Mat2& n) {
  const auto size = static_cast<std::int64_t>(box.size());
  std::int64_t best = size;
#pragma omp parallel for reduction(min : best) schedule(static)
  for (std::int64_t i = 0; i < size; ++i) {
    const Mat2& c = box[static_cast<std::size_t>(i)];
    if (mul(c, m) == mul(n, c)) best = std::min(best, i);
  }
  if (best == size) return std::nullopt;
  return static_cast<std::size_t>(best);
}

std::vector<std::size_t> centralizer(std::span<const Mat2> box, const Mat2& m) {
  const auto size = static_cast<std::int64_t>(box.size());
  std::vector<unsigned char> hit(box.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) {
    const Mat2& c = box[static_cast<std::size_t>(i)];
    hit[static_cast<std::size_t>(i)] = mul(c, m) == mul(m, c) ? 1 : 0;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

}  // namespace parallel

namespace serial {

namespace {

// Visits the box shell by shell (max |entry| = s), lexicographically inside
// each shell, stopping when `visit` returns true.
template <typename Visit>
void walk_box(int bound, Visit&& visit) {
  for (long s = 0; s <= bound; ++s)
    for (long a = -s; a <= s; ++a)
      for (long b = -s; b <= s; ++b)
        for (long c = -s; c <= s; ++c)
          for (long d = -s; d <= s; ++d) {
            if (std::max({std::labs(a), std::labs(b), std::labs(c), std::labs(d)}) != s) continue;
            IntMatrix x{{a, b}, {c, d}};
            if (abs(determinant(x)) != 1) continue;
            if (visit(x)) return;
          }
}

}  // namespace

std::optional<IntMatrix> first_conjugator(const IntMatrix& m, const IntMatrix& n, int bound) {
  check_bound(bound);
  std::optional<IntMatrix> found;
  walk_box(bound, [&](const IntMatrix& c) {
    if (c * m == n * c) {
      found = c;
      return true;
    }
    return false;
  });
  return found;
}

std::vector<IntMatrix> centralizer(const IntMatrix& m, int bound) {
  check_bound(bound);
  std::vector<IntMatrix> out;
  walk_box(bound, [&](const IntMatrix& c) {
    if (c * m == m * c) out.push_back(c);
    return false;
  });
  return out;
}

}  // namespace serial

}  // namespace solfour::gl2z::kernels
