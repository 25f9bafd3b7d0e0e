#pragma once

#include <cstddef>
#include <vector>

#include "troploc/cone.hpp"
#include "troploc/fan.hpp"
#include "troploc/series.hpp"

namespace troploc {

/// A bounded face of a Newton polyhedron together with the generating
/// points lying on it.
struct CompactFace {
  std::size_t dim = 0;
  std::vector<LatticeVector> vertices;
  std::vector<LatticeVector> support;

  friend bool operator==(const CompactFace&, const CompactFace&) = default;
};

/// conv(points) + recession cone, for a finite point set in M.
class NewtonPolyhedron {
 public:
  static NewtonPolyhedron from_points(const Cone& recession, std::vector<LatticeVector> points);

  const Cone& recession_cone() const { return recession_; }
  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  const std::vector<LatticeVector>& points() const { return points_; }
  const std::vector<CompactFace>& compact_faces() const { return compact_faces_; }
  std::vector<CompactFace> compact_faces_of_dim(std::size_t dim) const;

  /// Cone over P x {1} in M x Z, spanned by (m, 1) and (r, 0).
  const Cone& homogenization() const { return homogenized_; }

  bool contains(const RationalVector& point) const;

  /// Equal recession cones and vertex sets.
  friend bool operator==(const NewtonPolyhedron& a, const NewtonPolyhedron& b) {
    return a.recession_ == b.recession_ && a.vertices_ == b.vertices_;
  }

 private:
  Cone recession_;
  Cone homogenized_;
  std::vector<LatticeVector> points_;
  std::vector<LatticeVector> vertices_;
  std::vector<CompactFace> compact_faces_;
};

NewtonPolyhedron newton_polyhedron(const Series& f);

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q);

/// Normal fan of the Newton polyhedron, one cone per face, each cone
/// labelled with the support points of its face.
struct NewtonFan {
  Fan fan;
  std::vector<std::vector<LatticeVector>> labels;  // parallel to fan.cones()
  /// Parallel to fan.cones(): the face of the polyhedron is bounded.
  std::vector<bool> compact;
  std::vector<std::size_t> face_dims;
};

NewtonFan newton_fan(const Series& f);
NewtonFan newton_fan(const NewtonPolyhedron& p, const Cone& ambient);

}  // namespace troploc
