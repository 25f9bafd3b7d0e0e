#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "troploc/arc.hpp"

namespace troploc::detail {

/// Coefficient vectors below are in ascending degree order.

/// Every complex root with its multiplicity. Roots whose eigenvalue
/// estimates fall within cluster_tol (relative) are merged and refined on the
/// matching derivative.
std::vector<std::pair<Complex, std::size_t>> complex_roots(const std::vector<Complex>& coeffs,
                                                           double cluster_tol = 1e-5);

struct RationalRoots {
  std::vector<std::pair<Rational, std::size_t>> roots;  // ascending
  std::vector<Rational> remaining;                      // cofactor without rational roots
};

RationalRoots rational_roots(std::vector<Rational> coeffs);

}  // namespace troploc::detail
