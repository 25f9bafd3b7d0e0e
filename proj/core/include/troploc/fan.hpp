#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "troploc/cone.hpp"

namespace troploc {

/// A finite collection of strictly convex cones of one ambient rank, kept
/// closed under faces, free of duplicates and in canonical order.
///
/// Construction does not check that cones meet along common faces; use
/// validate_fan for that.
class Fan {
 public:
  Fan() = default;

  /// Adds every face of every given cone and deduplicates.
  static Fan from_cones(std::size_t rank, const std::vector<Cone>& cones);
  /// The fan of all faces of c.
  static Fan face_fan(const Cone& c);

  std::size_t rank() const { return rank_; }
  const std::vector<Cone>& cones() const { return cones_; }
  std::size_t size() const { return cones_.size(); }

  /// Indices of the cones that are not a proper face of another cone.
  const std::vector<std::size_t>& maximal_indices() const { return maximal_; }
  std::vector<Cone> maximal_cones() const;
  /// Largest cone dimension (0 for the fan {0}).
  std::size_t dim() const;

  std::optional<std::size_t> index_of(const Cone& c) const;
  /// Cones of dimension one.
  std::vector<LatticeVector> rays() const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.cones_ == b.cones_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Cone> cones_;
  std::vector<std::size_t> maximal_;
};

struct FanViolation {
  enum class Kind { rank_mismatch, not_strictly_convex, missing_face, bad_intersection };
  Kind kind;
  std::size_t first = 0;   // index into the checked list
  std::size_t second = 0;  // partner index for bad_intersection
  std::string detail;
};

struct FanReport {
  bool valid = true;
  std::vector<FanViolation> violations;
};

std::string_view to_string(FanViolation::Kind kind);

/// Checks the fan axioms on an arbitrary list of cones: strict convexity,
/// closure under faces and pairwise intersection in common faces.
FanReport validate_cones(std::size_t rank, const std::vector<Cone>& cones);
FanReport validate_fan(const Fan& f);

bool support_contains(const Fan& f, const RationalVector& v);
bool support_contains(const Fan& f, const LatticeVector& v);

/// The unique cone whose relative interior contains v.
std::optional<Cone> cone_containing(const Fan& f, const RationalVector& v);
std::optional<std::size_t> cone_index_containing(const Fan& f, const RationalVector& v);

/// Stellar subdivision along the ray through r.
Fan star_subdivide(const Fan& f, const LatticeVector& r);

/// All pairwise intersections; support is the intersection of supports.
Fan common_refinement(const Fan& a, const Fan& b);

/// |a| is contained in |b|, tested on the relative-interior witnesses of
/// every cone of a and of the common refinement.
bool support_subset(const Fan& a, const Fan& b);
bool same_support(const Fan& a, const Fan& b);

}  // namespace troploc
