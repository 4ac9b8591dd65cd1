#pragma once

#include <optional>

#include "gl2lab/mat2.hpp"
#include "gl2lab/subgroup.hpp"

namespace gl2 {

/// Witness m with m H m^-1 <= G, if one exists. Tries direct containment,
/// then a cyclic-generator shortcut, then the pruned exhaustive search.
std::optional<Mat2> conjugate_contains(const Subgroup& g, const Subgroup& h);

/// Pure exhaustive search: conjugators in increasing entry-tuple order,
/// generators conjugated first as a cheap reject. First witness returned.
std::optional<Mat2> conjugate_contains_bruteforce(const Subgroup& g, const Subgroup& h);

/// Witness m with m H m^-1 = G, if the subgroups are conjugate.
std::optional<Mat2> conjugate_equal_witness(const Subgroup& g, const Subgroup& h);

/// Least-encoding single generator when the subgroup is cyclic.
std::optional<Mat2> cyclic_generator(const Subgroup& g);

}  // namespace gl2
