#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "troploc/cone.hpp"
#include "troploc/lattice.hpp"

namespace troploc {

/// A finite truncation of a series in K[[sigma-dual ∩ M]] with exact
/// rational coefficients.
///
/// The caller guarantees that the stored terms contain every vertex of the
/// true Newton polyhedron; everything computed here depends on that
/// assumption and nothing can verify it.
class Series {
 public:
  using Terms = std::map<LatticeVector, Rational>;

  Series() = default;
  /// Drops zero coefficients. The ambient cone must be strictly convex and
  /// full-dimensional, and every exponent must pair nonnegatively with it.
  Series(Cone ambient, Terms terms);

  /// Convenience constructor over the positive orthant of the given rank.
  static Series over_orthant(std::size_t rank,
                             const std::vector<std::pair<std::vector<long>, Rational>>& terms);

  const Cone& ambient() const { return ambient_; }
  std::size_t rank() const { return ambient_.rank(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::vector<LatticeVector> support() const;
  Rational coefficient(const LatticeVector& m) const;

  friend bool operator==(const Series& a, const Series& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }

  /// Human-readable form in variables x1..xn, e.g. "y^2 - 2*x^3" style.
  std::string to_string() const;

 private:
  Cone ambient_;
  Terms terms_;
};

template <class Value>
struct MinWeight {
  Value value;
  std::vector<LatticeVector> basis;  // exponents attaining the minimum
};

/// Minimum of w over the support and the exponents attaining it. w must lie
/// in the interior of the ambient cone.
MinWeight<Integer> min_weight(const Series& f, const LatticeVector& w);
MinWeight<Rational> min_weight(const Series& f, const RationalVector& w);

/// Same, without the interior requirement (boundary weights allowed).
MinWeight<Rational> min_weight_unchecked(const Series& f, const RationalVector& w);

Series initial_form(const Series& f, const LatticeVector& w);
Series initial_form(const Series& f, const RationalVector& w);

bool is_monomial(const Series& f);

Series multiply(const Series& f, const Series& g);
Series add(const Series& f, const Series& g);

/// No ray of the ambient cone pairs positively with every exponent.
bool is_interior_divisor(const Series& f);

}  // namespace troploc
