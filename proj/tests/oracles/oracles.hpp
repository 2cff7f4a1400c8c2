#pragma once

// Brute-force reference computations in machine integers.  Nothing here
// touches the library; tests compare library output against these.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

/// [[a, b], [c, d]] stored as {a, b, c, d}.
using M2 = std::array<i64, 4>;

M2 mul(const M2& x, const M2& y);
i64 det(const M2& m);
M2 power(M2 m, int k);
bool is_identity(const M2& m);

/// Every 2x2 matrix with entries in [-bound, bound] and |det| = 1.
std::vector<M2> unimodular_box(int bound);

/// Smallest k in 1..12 with M^k = I, or 0.
int order(const M2& m);

/// C M C^-1 = N, tested as C M = N C with |det C| = 1.
std::optional<M2> conjugator(const M2& m, const M2& n, int bound);

struct Psi {
  i64 p, q, r;
  friend bool operator==(const Psi&, const Psi&) = default;
};

/// All [[p, q], [r, p]] in the box with det 1, p odd, |p| > 1, q and r even,
/// q > 0.  Unordered.
std::vector<Psi> scan_invariants(i64 max_entry);

using Dense = std::vector<std::vector<i64>>;

struct Cokernel {
  std::size_t free_rank = 0;
  std::vector<i64> torsion;  // > 1, divisibility chain
};

/// Z^cols / rowspace(M) from determinantal divisors (gcd of k x k minors).
Cokernel cokernel_by_minors(const Dense& rows);

/// Some x with ||x||_inf <= box and M x = b.
std::optional<std::vector<i64>> solve_in_box(const Dense& m, const std::vector<i64>& b, i64 box);

i64 gcd(i64 a, i64 b);

}  // namespace oracle
