#pragma once

#include <cstddef>
#include <vector>

#include "troploc/lattice.hpp"

namespace troploc::detail {

/// Generator form of a polyhedral cone {x : A x >= 0, E x = 0}.
struct GeneratorForm {
  IntMatrix lineality;  // basis of the lineality space
  IntMatrix rays;       // extreme rays modulo lineality, primitive
};

/// Exact double description (Motzkin) with algebraic adjacency test.
/// Inequalities a mean a . x >= 0, equations e mean e . x = 0.
GeneratorForm double_description(std::size_t rank, const IntMatrix& inequalities,
                                 const IntMatrix& equations);

}  // namespace troploc::detail
