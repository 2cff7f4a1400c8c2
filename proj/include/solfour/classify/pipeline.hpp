#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "solfour/classify/invariant.hpp"
#include "solfour/exact/lattice.hpp"
#include "solfour/ext/extension_group.hpp"
#include "solfour/ext/presentation.hpp"

namespace solfour::classify {

/// The group determined by an invariant, with its explicit presentation
/// over u, v, x, y, z.
struct PillowcaseGroup {
  ext::FpPresentation presentation;
  ext::ExtensionGroup group;
  IntMatrix A;  // action of u on <x, y>
  IntVector ef;  // u^2 = x^e y^f
};

/// A = [[p, q], [-r, -p]], u acts by blockdiag(A, -1), v by diag(1, -1, -1),
/// u^2 = x^e y^f with (e, f) spanning ker(A - I), v^2 = x.
PillowcaseGroup presentation_from_invariant(const PillowcaseInvariant& psi);

/// Extension data of pillowcase(psi), without the presentation.
ext::ExtensionData pillowcase_data(const PillowcaseInvariant& psi);

enum class ExtractionFailure {
  BadShape,
  NotInvolutions,
  FiniteOrder,        // UV has finite order
  NotHyperbolic,      // UV has infinite order but no rank-2 hyperbolic part
  NotFiniteIndex,     // N + C has infinite index
  BadCocycle,         // cocycles incompatible with the actions
  Torsion,
  NoAdaptedBasis,     // v does not act on N as a reflection
};

std::string_view to_string(ExtractionFailure f);

class ExtractionError : public std::invalid_argument {
 public:
  ExtractionError(ExtractionFailure f, const std::string& what) : std::invalid_argument(what), failure_(f) {}
  [[nodiscard]] ExtractionFailure failure() const noexcept { return failure_; }

 private:
  ExtractionFailure failure_;
};

/// Recovers the invariant from a D_inf-by-Z^3 extension: C and N are the
/// saturations of ker(UV - I) and Im(UV - I), A and D the actions of u and
/// v on N in a basis where D = diag(1, -1), and Psi = D A.
PillowcaseInvariant from_extension(const IntMatrix& U, const IntMatrix& V, const IntVector& s_u, const IntVector& s_v);

struct HomologyReport {
  PillowcaseInvariant psi;
  CokernelInvariants h1;
  std::vector<std::pair<std::string, std::optional<Int>>> orders;  // u, v, x, y, z
  bool w1_factors = false;
  std::vector<int> w1_values;  // lift to Z/4 on u, v, x, y, z
};

HomologyReport homology_report(const PillowcaseInvariant& psi);

}  // namespace solfour::classify
