#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "solfour/exact/int_matrix.hpp"

// Structure of GL(2,Z): orders, canonical forms of torsion, bounded
// conjugacy search and typing of two-ended subgroups.
namespace solfour::gl2z {

/// Order of M in GL(2,Z), or nullopt for infinite order.  The finite orders
/// are 1, 2, 3, 4, 6, so M has finite order iff M^12 = I.
/// Throws std::invalid_argument unless M is 2x2 with |det M| = 1.
std::optional<int> element_order(const IntMatrix& m);

enum class FiniteClass { Identity, MinusIdentity, Reflection, Swap, Order3, Order4, Order6 };

std::string_view to_string(FiniteClass c);

struct FiniteOrderClass {
  FiniteClass tag;
  IntMatrix representative;
};

/// The listed representative for each class: I, -I, diag(1,-1), [[0,1],[1,0]],
/// [[0,1],[-1,-1]], [[0,1],[-1,0]], [[0,1],[-1,1]].
IntMatrix representative(FiniteClass c);

/// Conjugacy class of a finite-order element.  Reflection and Swap are told
/// apart by reduction mod 2 (Reflection iff M = I mod 2).
FiniteOrderClass finite_order_class(const IntMatrix& m);

/// Some C with |det C| = 1, entries bounded by `bound`, and C M C^-1 = N.
/// Bounded search: nullopt only means no conjugator exists inside the box.
std::optional<IntMatrix> conjugate_in_gl2z(const IntMatrix& m, const IntMatrix& n, int bound);

/// All C with |det C| = 1, entries bounded by `bound`, and C M = M C.
std::vector<IntMatrix> centralizer_sample(const IntMatrix& m, int bound);

struct TwoEndedType {
  int case_number = 0;              // 1..6
  std::vector<IntMatrix> witnesses;  // {generator} for cases 1-2, {A, B} otherwise
  bool has_minus_identity = false;
  /// True when -I membership was settled (adjoined or witnessed); false when
  /// it is only assumed absent after the word-length-12 search.
  bool minus_identity_certain = true;
};

class NotTwoEnded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Case of the two-ended subgroup generated by `generators` (one or two
/// matrices, optionally with -I adjoined).
TwoEndedType two_ended_type(std::span<const IntMatrix> generators);

enum class MonodromyImage { DihedralInfinite, Other };

std::string_view to_string(MonodromyImage m);

/// Classifies the image of the four order-2 generators of the pillowcase
/// orbifold group.
MonodromyImage monodromy_image_type(std::span<const IntMatrix> images);

}  // namespace solfour::gl2z
