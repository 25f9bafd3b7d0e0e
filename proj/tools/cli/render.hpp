#pragma once

#include <string>

#include "io.hpp"

namespace troploc::cli {

struct RenderOptions {
  /// Lattice dots are drawn in [-box, box]^2 clipped to the picture.
  long box = 6;
};

/// SVG for a structured output: "tropicalization", "newton_fan" or
/// "newton_polyhedron". Rank 2 draws the plane picture, rank 3 the slice of
/// a fan in the triangle x1 + x2 + x3 = 1, higher ranks the incidence graph
/// of rays and maximal cones.
std::string render_svg(const json& doc, const RenderOptions& options = {});

}  // namespace troploc::cli
