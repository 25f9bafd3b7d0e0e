#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "troploc/lattice.hpp"

namespace troploc {

/// Ambient rank above which cone construction is refused. Defaults to 8.
std::size_t cone_rank_limit();
void set_cone_rank_limit(std::size_t limit);

/// A rational polyhedral cone, stored in both descriptions.
///
/// Generator side: a basis of the lineality space plus the extreme rays
/// modulo it. Facet side: a basis of the linear equations cutting out the
/// span plus the irredundant facet normals modulo them. Every list is in a
/// canonical form (reduced echelon bases, primitive vectors, sorted), so two
/// cones are equal exactly when their members compare equal.
///
/// Strictly convex cones have an empty lineality space; their rays are the
/// primitive extreme ray generators.
class Cone {
 public:
  /// The zero cone of rank 0.
  Cone() = default;

  static Cone from_generators(std::size_t rank, const std::vector<LatticeVector>& generators,
                              Lattice lattice = Lattice::N);
  /// {x : u . x >= 0 for u in inequalities, e . x = 0 for e in equations}.
  static Cone from_inequalities(std::size_t rank, const std::vector<LatticeVector>& inequalities,
                                const std::vector<LatticeVector>& equations = {},
                                Lattice lattice = Lattice::N);
  static Cone orthant(std::size_t rank, Lattice lattice = Lattice::N);
  static Cone zero(std::size_t rank, Lattice lattice = Lattice::N);

  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return rank_ - equations_.size(); }
  Lattice lattice() const { return lattice_; }

  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& lineality() const { return lineality_; }
  const std::vector<LatticeVector>& facets() const { return facets_; }
  const std::vector<LatticeVector>& equations() const { return equations_; }

  /// Rays plus both signs of every lineality basis vector.
  std::vector<LatticeVector> generators() const;

  bool is_strictly_convex() const { return lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }

  bool contains(const LatticeVector& v) const;
  bool contains(const RationalVector& v) const;
  bool contains(const Cone& other) const;
  bool relative_interior_contains(const LatticeVector& v) const;
  bool relative_interior_contains(const RationalVector& v) const;

  /// Sum of the extreme rays; lies in the relative interior of a pointed cone.
  LatticeVector interior_witness() const;

  friend bool operator==(const Cone& a, const Cone& b);
  /// Orders by dimension, then by ray lists.
  friend bool operator<(const Cone& a, const Cone& b);

  std::string to_string() const;

  /// The dual cone. Both descriptions are canonical, so this only swaps them.
  Cone dual_view() const;

 private:
  static Cone build(std::size_t rank, const IntMatrix& lineality, const IntMatrix& rays,
                    Lattice lattice);

  std::size_t rank_ = 0;
  Lattice lattice_ = Lattice::N;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> lineality_;
  std::vector<LatticeVector> facets_;
  std::vector<LatticeVector> equations_;
};

std::ostream& operator<<(std::ostream& os, const Cone& c);

/// {m : w . m >= 0 for all w in c}, living in the dual lattice.
Cone dual_cone(const Cone& c);

/// Strictly convex cone whose rays extend to a lattice basis.
bool is_regular(const Cone& c);

/// Every face, from the lineality space (the zero cone when pointed) up to
/// c itself, in canonical order.
std::vector<Cone> faces(const Cone& c);

bool is_face_of(const Cone& face, const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

/// Smallest cone containing both.
Cone join(const Cone& a, const Cone& b);

}  // namespace troploc
