#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "solfour/classify/invariant.hpp"
#include "solfour/ext/extension_group.hpp"

namespace solfour::cli {

struct ResolvedGroup {
  std::string id;
  ext::ExtensionGroup group;
  bool pillowcase = false;
  std::vector<std::string> notes;
};

/// Named catalog ids: Dinf, G2, B1, B1-sd-theta, sigma,
/// sigma-variant, sigma-x-Z, kb-monodromy(3,2;4,3),
/// bordered((1,0),(3,2;4,3)), pillowcase(3,2,4) or pillowcase(3,2;4,3).
/// Anything else is read as a path to a JSON group description.
ResolvedGroup resolve_group(std::string_view id);

/// Parses "3,2,4" as (p, q, r) or "3,2;4,3" as a matrix, then normalizes.
classify::PillowcaseInvariant parse_invariant(std::string_view text);

}  // namespace solfour::cli
