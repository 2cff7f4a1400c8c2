#include "solfour/exact/smith.hpp"

#include <utility>

namespace solfour {

std::vector<Int> SmithDecomposition::diagonal() const {
  const std::size_t k = std::min(S.rows(), S.cols());
  std::vector<Int> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = S(i, i);
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

// Elementary operations applied to the working matrix, mirrored on the
// transforms: row ops hit P (and the inverse column op hits P_inv), column
// ops hit Q (and the inverse row op hits Q_inv).
class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : a_(m),
        p_(IntMatrix::identity(m.rows())),
        p_inv_(IntMatrix::identity(m.rows())),
        q_(IntMatrix::identity(m.cols())),
        q_inv_(IntMatrix::identity(m.cols())) {}

  void row_add(std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(dst, j) += c * a_(src, j);
    for (std::size_t j = 0; j < p_.cols(); ++j) p_(dst, j) += c * p_(src, j);
    for (std::size_t i = 0; i < p_inv_.rows(); ++i) p_inv_(i, src) -= c * p_inv_(i, dst);
  }

  void row_swap(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(r, j), a_(s, j));
    for (std::size_t j = 0; j < p_.cols(); ++j) std::swap(p_(r, j), p_(s, j));
    for (std::size_t i = 0; i < p_inv_.rows(); ++i) std::swap(p_inv_(i, r), p_inv_(i, s));
  }

  void row_negate(std::size_t r) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(r, j) = -a_(r, j);
    for (std::size_t j = 0; j < p_.cols(); ++j) p_(r, j) = -p_(r, j);
    for (std::size_t i = 0; i < p_inv_.rows(); ++i) p_inv_(i, r) = -p_inv_(i, r);
  }

  void col_add(std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, dst) += c * a_(i, src);
    for (std::size_t i = 0; i < q_.rows(); ++i) q_(i, dst) += c * q_(i, src);
    for (std::size_t j = 0; j < q_inv_.cols(); ++j) q_inv_(src, j) -= c * q_inv_(dst, j);
  }

  void col_swap(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, r), a_(i, s));
    for (std::size_t i = 0; i < q_.rows(); ++i) std::swap(q_(i, r), q_(i, s));
    for (std::size_t j = 0; j < q_inv_.cols(); ++j) std::swap(q_inv_(r, j), q_inv_(s, j));
  }

  void run() {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
      if (!move_smallest_to(k)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t i = k + 1; i < m; ++i) {
          if (a_(i, k) == 0) continue;
          row_add(i, k, -quotient(a_(i, k), a_(k, k)));
          if (a_(i, k) != 0) dirty = true;
        }
        for (std::size_t j = k + 1; j < n; ++j) {
          if (a_(k, j) == 0) continue;
          col_add(j, k, -quotient(a_(k, j), a_(k, k)));
          if (a_(k, j) != 0) dirty = true;
        }
        if (dirty) {
          move_smallest_in_cross(k);
          continue;
        }
        // Pivot row and column are clear; enforce divisibility of the rest.
        std::size_t bad_row = m;
        for (std::size_t i = k + 1; i < m && bad_row == m; ++i)
          for (std::size_t j = k + 1; j < n; ++j)
            if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(k, k).get_mpz_t())) {
              bad_row = i;
              break;
            }
        if (bad_row == m) break;
        row_add(k, bad_row, 1);
      }
      if (a_(k, k) < 0) row_negate(k);
    }
  }

  SmithDecomposition result() && {
    return {std::move(a_), std::move(p_), std::move(q_), std::move(p_inv_), std::move(q_inv_)};
  }

 private:
  static Int quotient(const Int& x, const Int& d) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return q;
  }

  bool move_smallest_to(std::size_t k) {
    std::size_t bi = a_.rows(), bj = a_.cols();
    for (std::size_t i = k; i < a_.rows(); ++i)
      for (std::size_t j = k; j < a_.cols(); ++j)
        if (a_(i, j) != 0 && (bi == a_.rows() || abs(a_(i, j)) < abs(a_(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == a_.rows()) return false;
    row_swap(k, bi);
    col_swap(k, bj);
    return true;
  }

  // After a reduction pass leaves remainders in row k / column k, bring the
  // smallest of them to the pivot.
  void move_smallest_in_cross(std::size_t k) {
    std::size_t bi = k, bj = k;
    for (std::size_t i = k + 1; i < a_.rows(); ++i)
      if (a_(i, k) != 0 && abs(a_(i, k)) < abs(a_(bi, bj))) {
        bi = i;
        bj = k;
      }
    for (std::size_t j = k + 1; j < a_.cols(); ++j)
      if (a_(k, j) != 0 && abs(a_(k, j)) < abs(a_(bi, bj))) {
        bi = k;
        bj = j;
      }
    row_swap(k, bi);
    col_swap(k, bj);
  }

  IntMatrix a_, p_, p_inv_, q_, q_inv_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  Reducer r(m);
  r.run();
  return std::move(r).result();
}

}  // namespace solfour
