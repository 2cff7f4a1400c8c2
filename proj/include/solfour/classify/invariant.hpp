#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "solfour/exact/int_matrix.hpp"

namespace solfour::classify {

/// Psi = [[p, q], [r, p]] with p odd, |p| > 1, q and r even, q > 0 and
/// p^2 - qr = 1.  Written as [[a, b], [-c, a]], (p, q, r) = (a, b, -c).
struct PillowcaseInvariant {
  Int p;
  Int q;
  Int r;

  [[nodiscard]] IntMatrix matrix() const;
  [[nodiscard]] IntMatrix inverse_matrix() const;

  friend bool operator==(const PillowcaseInvariant&, const PillowcaseInvariant&) = default;
};

/// Order used by enumerate: |p|, then sign of p (negative first), then q.
bool enumeration_less(const PillowcaseInvariant& a, const PillowcaseInvariant& b);

enum class Defect {
  NotTwoByTwo,
  UnequalDiagonal,
  EvenP,
  SmallP,
  OddOffDiagonal,
  DetNotOne,
  NonPositiveQ,
};

std::string_view to_string(Defect d);

class InvariantError : public std::invalid_argument {
 public:
  InvariantError(Defect d, const std::string& what) : std::invalid_argument(what), defect_(d) {}
  [[nodiscard]] Defect defect() const noexcept { return defect_; }

 private:
  Defect defect_;
};

/// First violated constraint, if any.
std::optional<Defect> find_defect(const IntMatrix& m);

/// Throws InvariantError naming the first violated constraint.
PillowcaseInvariant validate(const IntMatrix& m);

/// The representative with q > 0 among M and M^-1.
PillowcaseInvariant normalize(const IntMatrix& m);
PillowcaseInvariant normalize(const PillowcaseInvariant& psi);

bool isomorphic(const PillowcaseInvariant& a, const PillowcaseInvariant& b);

/// Largest max_entry accepted by enumerate.
inline constexpr long kMaxEnumerationEntry = 20000;

/// All invariants with max(|p|, q, r) <= max_entry, in enumeration order.
std::vector<PillowcaseInvariant> enumerate(long max_entry);

namespace serial {
std::vector<PillowcaseInvariant> enumerate(long max_entry);
}

}  // namespace solfour::classify
