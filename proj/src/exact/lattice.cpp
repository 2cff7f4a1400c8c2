#include "solfour/exact/lattice.hpp"

#include "solfour/exact/smith.hpp"

namespace solfour {

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve_integer: right-hand side has wrong dimension");
  const auto snf = smith_normal_form(m);
  const IntVector pb = snf.P * b;
  const auto d = snf.diagonal();
  IntVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const bool pivot = i < d.size() && d[i] != 0;
    if (!pivot) {
      if (pb[i] != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(pb[i].get_mpz_t(), d[i].get_mpz_t())) return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), pb[i].get_mpz_t(), d[i].get_mpz_t());
  }
  return snf.Q * y;
}

bool in_image(const IntMatrix& m, const IntVector& b) { return solve_integer(m, b).has_value(); }

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  std::vector<IntVector> cols;
  for (std::size_t j = r; j < m.cols(); ++j) cols.push_back(snf.Q.column(j));
  return hermite_basis(cols, m.cols());
}

std::vector<IntVector> image_basis(const IntMatrix& m) {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return hermite_basis(cols, m.rows());
}

std::vector<IntVector> saturation(std::span<const IntVector> vectors, std::size_t n) {
  if (vectors.empty()) return {};
  const IntMatrix l = IntMatrix::from_rows({vectors.begin(), vectors.end()}, n);
  const auto snf = smith_normal_form(l);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < snf.rank(); ++i) rows.push_back(snf.Q_inv.row(i));
  return hermite_basis(rows, n);
}

std::vector<IntVector> hermite_basis(std::span<const IntVector> vectors, std::size_t n) {
  std::vector<IntVector> a(vectors.begin(), vectors.end());
  for (const auto& v : a)
    if (v.size() != n) throw DimensionError("hermite_basis: vector has wrong dimension");
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    for (;;) {
      std::size_t piv = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 && (piv == a.size() || abs(a[i][c]) < abs(a[piv][c]))) piv = i;
      if (piv == a.size()) break;
      std::swap(a[r], a[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        a[i] -= q * a[r];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < a.size() && a[r][c] != 0) {
      if (a[r][c] < 0) a[r] = -a[r];
      for (std::size_t i = 0; i < r; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        a[i] -= q * a[r];
      }
      ++r;
    }
  }
  a.resize(r);
  return a;
}

IntVector primitive_normalized(IntVector v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) v = -v;
    break;
  }
  return v;
}

CokernelInvariants cokernel_invariants(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  CokernelInvariants out;
  out.free_rank = m.rows() - snf.rank();
  for (const auto& d : snf.diagonal())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::optional<IntVector> coordinates_in(std::span<const IntVector> basis, const IntVector& v, std::size_t n) {
  if (basis.empty()) return v.is_zero() ? std::optional<IntVector>(IntVector(0)) : std::nullopt;
  const IntMatrix b = IntMatrix::from_columns({basis.begin(), basis.end()}, n);
  return solve_integer(b, v);
}

Int sublattice_index(std::span<const IntVector> sub, std::span<const IntVector> span, std::size_t n) {
  if (sub.size() < span.size()) return 0;
  if (sub.size() > span.size()) throw DimensionError("sublattice_index: more generators than the ambient rank");
  IntMatrix coords(span.size(), sub.size());
  for (std::size_t j = 0; j < sub.size(); ++j) {
    auto c = coordinates_in(span, sub[j], n);
    if (!c) throw std::invalid_argument("sublattice_index: vector outside the ambient lattice");
    for (std::size_t i = 0; i < span.size(); ++i) coords(i, j) = (*c)[i];
  }
  return abs(determinant(coords));
}

}  // namespace solfour
