#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solfour/exact/lattice.hpp"
#include "solfour/ext/extension_group.hpp"
#include "solfour/ext/presentation.hpp"

namespace solfour::ext {

class UnsupportedKind : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// True iff `a` has finite order.
bool is_torsion(const ExtensionGroup& g, const GroupElement& a);

/// Kind Dinf only.  Scans odd quotient words w of length <= max_word_len; the
/// coset of w holds torsion iff -s(w) lies in Im(I + action(w)), where s(w)
/// is the lattice part of lift(w)^2.  Returns the first witness found.
std::optional<GroupElement> find_torsion(const ExtensionGroup& g, int max_word_len = 7);

/// H_1 of a finite presentation, with the coordinate change that realizes it:
/// generator j maps to P e_j, and coordinate i lives in Z/moduli[i]
/// (0 = free, 1 = trivial).
struct AbelianizationMap {
  std::vector<std::string> generators;
  std::vector<Int> moduli;
  IntMatrix P;
  IntMatrix P_inv;

  [[nodiscard]] CokernelInvariants invariants() const;
  [[nodiscard]] IntVector coordinates(const IntVector& exponent_sums) const;
  /// Order of the image in H_1; nullopt when infinite.
  [[nodiscard]] std::optional<Int> order_of(const IntVector& exponent_sums) const;
  [[nodiscard]] std::optional<Int> generator_order(std::size_t j) const;
};

AbelianizationMap abelianization_map(const FpPresentation& p);
CokernelInvariants abelianization(const ExtensionGroup& g);

/// 0 if `a` preserves orientation, 1 if it reverses it.  Requires axis signs.
int orientation_character(const ExtensionGroup& g, const GroupElement& a);

struct W1Factoring {
  bool factors = false;
  /// Values in Z/4 of a lift of w_1, per generator of the presentation.
  std::vector<int> generator_values;
};

/// Whether the orientation character lifts along Z/4 -> Z/2 through H_1.
W1Factoring w1_factors_through_z4(const ExtensionGroup& g);

struct CenterInfo {
  std::size_t rank = 0;
  std::vector<IntVector> fixed_lattice;        // basis of the central lattice part
  std::vector<GroupElement> quotient_elements;  // central lifts of quotient directions
  /// All reported generators, lattice part first.
  [[nodiscard]] std::vector<GroupElement> generators(const ExtensionGroup& g) const;
};

bool is_central(const ExtensionGroup& g, const GroupElement& a);
CenterInfo center(const ExtensionGroup& g);

/// Saturated sublattice of Z^n whose elements have torsion image in H_1.
std::vector<IntVector> i_lattice(const ExtensionGroup& g);

/// For a bordered matrix [[1,0],[xi,Psi]] with hyperbolic Psi: whether it
/// is conjugate to blockdiag(1, Psi), i.e. whether xi lies in Im(I - Psi).
bool is_block_diagonalizable(const IntMatrix& theta);

/// Every relator of `src` evaluates to the identity under the images.
bool verify_homomorphism(const FpPresentation& src, std::span<const GroupElement> images, const ExtensionGroup& target);
bool verify_homomorphism(const FpPresentation& src, const std::map<std::string, GroupElement>& images,
                         const ExtensionGroup& target);

/// Some quotient element acts on the lattice with infinite order.
bool has_hyperbolic_direction(const ExtensionGroup& g);

/// Hirsch length: lattice rank plus that of the quotient.
std::size_t hirsch_length(const ExtensionGroup& g);

enum class Geometry { Sol3xE1, Sol3, NotSol };

std::string_view to_string(Geometry geo);

/// Sol^3 x E^1 for Hirsch length 4, Sol^3 for 3, given a hyperbolic direction.
Geometry geometry(const ExtensionGroup& g);

}  // namespace solfour::ext
