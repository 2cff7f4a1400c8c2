#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "solfour/classify/pipeline.hpp"
#include "solfour/exact/int_matrix.hpp"
#include "solfour/exact/lattice.hpp"
#include "solfour/ext/extension_group.hpp"

namespace solfour::cli {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are numbers, larger ones decimal strings.
json to_json(const Int& x);
json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
json to_json(const classify::PillowcaseInvariant& psi);
json to_json(const CokernelInvariants& h1);
json to_json(const ext::ExtensionGroup& g);

Int int_from_json(const json& j);
IntVector vector_from_json(const json& j);
IntMatrix matrix_from_json(const json& j);
classify::PillowcaseInvariant invariant_from_json(const json& j);

/// {kind, rank, action, cocycles, axisSigns} plus optional commutator,
/// generators (quotient names) and latticeNames.
ext::ExtensionGroup group_from_json(const json& j);

}  // namespace solfour::cli
