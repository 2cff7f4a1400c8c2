#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solfour/exact/int_matrix.hpp"
#include "solfour/ext/presentation.hpp"

namespace solfour::ext {

/// Virtually cyclic (or Klein bottle) quotients Q of an extension
/// 1 -> Z^n -> pi -> Q -> 1, each with a built-in normal form.
enum class QuotientKind {
  Trivial,  // no generators
  C2,       // g, g^2 = 1
  Zq,       // t
  ZxC2,     // t, g with g^2 = 1 and [t, g] = 1
  Dinf,     // u, v with u^2 = v^2 = 1
  Klein,    // x, y with x y x^-1 = y^-1
};

std::string_view to_string(QuotientKind k);
QuotientKind parse_quotient_kind(std::string_view s);

/// Normal form of a quotient element, interpreted per kind:
///   C2     a = epsilon in {0, 1}
///   Zq     a = k (t^k)
///   ZxC2   a = k, b = epsilon (t^k g^epsilon)
///   Dinf   a = length, b = first letter (0 = u, 1 = v); alternating word
///   Klein  a = alpha, b = beta (x^alpha y^beta)
struct QuotientWord {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const QuotientWord&, const QuotientWord&) = default;
};

/// t * section(q): translation part first, then the lifted quotient word.
struct GroupElement {
  IntVector t;
  QuotientWord q;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& x, const GroupElement& y) {
    if (x.q != y.q) return x.q < y.q;
    return x.t < y.t;
  }
};

/// Raw extension data, as read from a group description.
struct ExtensionData {
  QuotientKind kind = QuotientKind::Trivial;
  std::size_t rank = 0;
  std::vector<std::string> quotient_names;     // defaults per kind when empty
  std::vector<std::string> lattice_names;      // x, y, z or e1..en when empty
  std::map<std::string, IntMatrix> action;     // missing generators act trivially
  std::map<std::string, IntVector> cocycles;   // order-2 generator g: lift(g)^2
  std::optional<IntVector> commutator;         // ZxC2: [lift(t), lift(g)]
  std::map<std::string, int> axis_signs;       // empty = untagged
};

/// Extension of a catalog quotient by Z^n, given by the action and the
/// square (and, for ZxC2, commutator) cocycle vectors.  Immutable.
class ExtensionGroup {
 public:
  explicit ExtensionGroup(ExtensionData data);

  [[nodiscard]] QuotientKind kind() const noexcept { return data_.kind; }
  [[nodiscard]] std::size_t rank() const noexcept { return data_.rank; }
  [[nodiscard]] const ExtensionData& data() const noexcept { return data_; }

  [[nodiscard]] const std::vector<std::string>& quotient_names() const noexcept { return data_.quotient_names; }
  [[nodiscard]] const std::vector<std::string>& lattice_names() const noexcept { return data_.lattice_names; }
  /// Quotient generators first, then the lattice basis.
  [[nodiscard]] std::vector<std::string> generator_names() const;
  [[nodiscard]] std::size_t quotient_generator_count() const noexcept { return data_.quotient_names.size(); }

  [[nodiscard]] const IntMatrix& generator_action(std::size_t j) const { return actions_.at(j); }
  [[nodiscard]] bool is_order_two(std::size_t j) const;
  [[nodiscard]] const IntVector& square_cocycle(std::size_t j) const { return squares_.at(j); }
  [[nodiscard]] const IntVector& commutator_cocycle() const noexcept { return commutator_; }

  /// Action of a quotient element on the lattice.
  [[nodiscard]] IntMatrix action(const QuotientWord& q) const;

  [[nodiscard]] GroupElement identity() const;
  [[nodiscard]] GroupElement lattice_element(IntVector t) const;
  [[nodiscard]] GroupElement quotient_lift(const QuotientWord& q) const;
  /// Generator by index into generator_names().
  [[nodiscard]] GroupElement generator(std::size_t index) const;
  [[nodiscard]] GroupElement generator(std::string_view name) const;

  [[nodiscard]] GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  [[nodiscard]] GroupElement inverse(const GroupElement& a) const;
  [[nodiscard]] GroupElement power(const GroupElement& a, long k) const;
  [[nodiscard]] GroupElement commutator(const GroupElement& a, const GroupElement& b) const;

  /// Evaluates a word over generator_names().
  [[nodiscard]] GroupElement evaluate(const Word& w) const;
  [[nodiscard]] GroupElement evaluate(std::string_view word) const;

  /// Order of q in Q, nullopt when infinite.
  [[nodiscard]] std::optional<std::int64_t> quotient_order(const QuotientWord& q) const;
  /// Normal form of q as syllables over the quotient generators.
  [[nodiscard]] Word quotient_syllables(const QuotientWord& q) const;
  [[nodiscard]] std::int64_t quotient_length(const QuotientWord& q) const;
  [[nodiscard]] bool is_valid(const GroupElement& a) const;

  [[nodiscard]] bool is_tagged() const noexcept { return !data_.axis_signs.empty(); }
  /// Product of the axis signs along the normal form; requires tagging.
  [[nodiscard]] int axis_sign(const QuotientWord& q) const;

  /// Presentation implied by the extension data, over generator_names().
  [[nodiscard]] FpPresentation presentation() const;

  [[nodiscard]] std::string format(const GroupElement& a) const;
  /// Syllables for a lattice vector over generator_names().
  [[nodiscard]] Word lattice_word(const IntVector& t) const;

 private:
  void append(GroupElement& x, std::size_t qgen, long exp) const;
  void append_order_two(GroupElement& x, std::size_t qgen) const;
  void check(const GroupElement& a) const;

  ExtensionData data_;
  std::vector<IntMatrix> actions_;   // per quotient generator
  std::vector<IntVector> squares_;   // per quotient generator (zero unless order two)
  IntVector commutator_;
  IntMatrix dinf_pair_[2];           // Dinf: action(u v), action(v u)
};

}  // namespace solfour::ext
