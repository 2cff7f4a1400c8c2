#include "oracles.hpp"

#include <cstdlib>
#include <numeric>

namespace oracle {

M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

i64 det(const M2& m) { return m[0] * m[3] - m[1] * m[2]; }

M2 power(M2 m, int k) {
  M2 r{1, 0, 0, 1};
  for (int i = 0; i < k; ++i) r = mul(r, m);
  return r;
}

bool is_identity(const M2& m) { return m == M2{1, 0, 0, 1}; }

std::vector<M2> unimodular_box(int bound) {
  std::vector<M2> out;
  for (i64 a = -bound; a <= bound; ++a)
    for (i64 b = -bound; b <= bound; ++b)
      for (i64 c = -bound; c <= bound; ++c)
        for (i64 d = -bound; d <= bound; ++d)
          if (std::llabs(a * d - b * c) == 1) out.push_back({a, b, c, d});
  return out;
}

int order(const M2& m) {
  M2 p = m;
  for (int k = 1; k <= 12; ++k) {
    if (is_identity(p)) return k;
    p = mul(p, m);
  }
  return 0;
}

std::optional<M2> conjugator(const M2& m, const M2& n, int bound) {
  for (const auto& c : unimodular_box(bound))
    if (mul(c, m) == mul(n, c)) return c;
  return std::nullopt;
}

std::vector<Psi> scan_invariants(i64 max_entry) {
  std::vector<Psi> out;
  for (i64 p = -max_entry; p <= max_entry; ++p) {
    if (p % 2 == 0 || std::llabs(p) <= 1) continue;
    for (i64 q = 1; q <= max_entry; ++q)
      for (i64 r = -max_entry; r <= max_entry; ++r)
        if (q % 2 == 0 && r % 2 == 0 && p * p - q * r == 1) out.push_back({p, q, r});
  }
  return out;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

namespace {

// Exact determinant by cofactor expansion; minors here are at most 5x5.
__int128 det_dense(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  __int128 s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<i64> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const __int128 term = static_cast<__int128>(m[0][j]) * det_dense(minor);
    s += (j % 2 == 0) ? term : -term;
  }
  return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

}  // namespace

Cokernel cokernel_by_minors(const Dense& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows[0].size() : 0;
  std::vector<i64> divisors{1};
  for (std::size_t k = 1; k <= std::min(nr, nc); ++k) {
    i64 g = 0;
    for (const auto& rs : subsets(nr, k))
      for (const auto& cs : subsets(nc, k)) {
        Dense m;
        for (auto i : rs) {
          std::vector<i64> row;
          for (auto j : cs) row.push_back(rows[i][j]);
          m.push_back(row);
        }
        const __int128 d = det_dense(m);
        g = std::gcd(g, static_cast<i64>(d < 0 ? -d : d));
      }
    if (g == 0) break;
    divisors.push_back(g);
  }
  Cokernel out;
  const std::size_t rank = divisors.size() - 1;
  out.free_rank = nc - rank;
  for (std::size_t k = 1; k <= rank; ++k) {
    const i64 s = divisors[k] / divisors[k - 1];
    if (s > 1) out.torsion.push_back(s);
  }
  return out;
}

std::optional<std::vector<i64>> solve_in_box(const Dense& m, const std::vector<i64>& b, i64 box) {
  const std::size_t n = m.empty() ? 0 : m[0].size();
  std::vector<i64> x(n, -box);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < m.size() && ok; ++i) {
      i64 s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m[i][j] * x[j];
      ok = s == b[i];
    }
    if (ok) return x;
    std::size_t j = 0;
    while (j < n && x[j] == box) x[j++] = -box;
    if (j == n) return std::nullopt;
    ++x[j];
  }
}

}  // namespace oracle
