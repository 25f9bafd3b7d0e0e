#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "troploc/cone.hpp"
#include "troploc/fan.hpp"
#include "troploc/series.hpp"

namespace troploc {

/// A fan structure on the local tropicalization of a germ inside the toric
/// germ of `ambient`, together with the generators it was computed from.
///
/// labels[i][g] is the set of exponents of generator g minimized by the
/// interior witness of cone i; it is empty when that witness lies on the
/// boundary of the ambient cone.
struct Tropicalization {
  Cone ambient;
  Fan fan;
  std::optional<std::size_t> dim;
  std::vector<Series> generators;
  std::vector<std::vector<std::vector<LatticeVector>>> labels;
  /// Generator-wise intersection, which only bounds the true answer from above.
  bool upper_bound = false;
};

/// Per-cone initial data for the given generators.
std::vector<std::vector<std::vector<LatticeVector>>> label_cones(
    const Cone& ambient, const Fan& fan, const std::vector<Series>& generators);

/// Local tropicalization of the divisor of an interior series: the cones
/// dual to compact edges of the Newton polyhedron, with their faces.
Tropicalization troploc_divisor(const Series& f);

/// Primitive rays orthogonal to the compact edges of a plane curve's
/// Newton polygon, sorted.
std::vector<LatticeVector> troploc_plane_curve(const Series& f);

/// No generator has a monomial initial form at w. Exact for one generator;
/// only necessary for ideals with several generators.
bool is_initial_weight(const std::vector<Series>& generators, const RationalVector& w);
bool is_initial_weight(const std::vector<Series>& generators, const LatticeVector& w);

/// Intersection of the generators' divisor tropicalizations; a superset of
/// the tropicalization of the ideal they generate.
Tropicalization troploc_ideal_upper(const std::vector<Series>& generators);

struct StructureIssue {
  enum class Kind { wrong_dimension, misses_interior, label_not_constant };
  Kind kind;
  std::size_t cone = 0;  // index into the fan
  std::string detail;
};

struct StructureReport {
  bool passed = true;
  std::size_t expected_dim = 0;
  std::size_t maximal_cones = 0;
  std::vector<StructureIssue> issues;
};

std::string_view to_string(StructureIssue::Kind kind);

/// Checks the maximal cones: dimension equals expected_dim, relative
/// interior meets the interior of the ambient cone, and initial data agree
/// at two random interior points (seeded).
StructureReport check_structure(const Tropicalization& t, std::size_t expected_dim,
                                std::uint64_t seed = 0x5eed);

struct Stratum {
  Cone face;                  // tau
  std::size_t quotient_rank;  // n - dim tau
  IntMatrix quotient_map;     // (n - dim tau) x n, integral, surjective onto Z^(n - dim tau)
  Cone image;                 // sigma_tau, the image of sigma in the quotient
};

/// The extended cone: sigma together with its images in N_R / span(tau) for
/// every face tau.
struct ExtendedCone {
  Cone base;
  std::vector<Stratum> strata;  // one per face, in the canonical face order
};

ExtendedCone extended_cone(const Cone& sigma);

/// The tropicalization of the toric germ itself: the face fan of sigma.
Tropicalization troploc_toric_germ(const Cone& sigma);

}  // namespace troploc
