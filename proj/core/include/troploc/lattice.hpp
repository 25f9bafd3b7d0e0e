#pragma once

// Exact integer/rational arithmetic and vectors of the dual lattices N
// (weights) and M (exponents).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace troploc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Which side of the pairing N x M -> Z a vector lives on.
enum class Lattice : unsigned char { N, M };

constexpr Lattice dual(Lattice l) { return l == Lattice::N ? Lattice::M : Lattice::N; }

class RationalVector;

/// An integer vector of N or M. Immutable value type.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords, Lattice lattice = Lattice::N);
  LatticeVector(std::initializer_list<long> coords, Lattice lattice = Lattice::N);

  static LatticeVector zero(std::size_t rank, Lattice lattice = Lattice::N);
  static LatticeVector unit(std::size_t rank, std::size_t index, Lattice lattice = Lattice::N);

  std::size_t rank() const { return coords_.size(); }
  Lattice lattice() const { return lattice_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const { return coords_; }

  bool is_zero() const;
  /// gcd of the coordinates equals 1.
  bool is_primitive() const;

  /// Same coordinates, tagged as living in the other lattice.
  LatticeVector on(Lattice lattice) const { return LatticeVector(coords_, lattice); }

  LatticeVector operator+(const LatticeVector& other) const;
  LatticeVector operator-(const LatticeVector& other) const;
  LatticeVector operator-() const;
  friend LatticeVector operator*(const Integer& k, const LatticeVector& v);

  /// Coordinatewise comparison; the lattice tag is ignored.
  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

  RationalVector to_rational() const;
  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
  Lattice lattice_ = Lattice::N;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// A rational point of N_R or M_R, every coordinate in lowest terms.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<Rational> coords);
  RationalVector(std::initializer_list<Rational> coords);

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;
  bool is_integral() const;

  RationalVector operator+(const RationalVector& other) const;
  friend RationalVector operator*(const Rational& k, const RationalVector& v);
  friend bool operator==(const RationalVector& a, const RationalVector& b);
  friend bool operator<(const RationalVector& a, const RationalVector& b);

  /// The primitive lattice vector on the ray through this nonzero point.
  LatticeVector primitive_direction(Lattice lattice = Lattice::N) const;

  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const RationalVector& v);

/// Sum of w(i) * m(i). Throws Errc::rank_mismatch on unequal ranks.
Integer pairing(const LatticeVector& w, const LatticeVector& m);
Rational pairing(const RationalVector& w, const LatticeVector& m);
Rational pairing(const LatticeVector& u, const RationalVector& v);
Rational pairing(const RationalVector& w, const RationalVector& m);

/// v / gcd(v). Throws Errc::zero_vector on the zero vector.
LatticeVector primitive(const LatticeVector& v);

/// gcd of all coordinates with gcd(0, x) = |x|; 0 for the zero vector.
Integer content(std::span<const Integer> coords);

// -- small exact linear algebra ------------------------------------------

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

std::size_t matrix_rank(const IntMatrix& rows);
Rational determinant(RatMatrix m);
Integer determinant(const IntMatrix& m);

/// Unique basis of the row space: reduced row echelon form, each row scaled
/// to a primitive integer vector with positive pivot.
IntMatrix row_space_basis(const IntMatrix& rows, std::size_t cols);

/// Reduce v modulo a basis produced by row_space_basis so that it vanishes
/// on every pivot column, then make it primitive (zero stays zero).
std::vector<Integer> reduce_modulo(std::vector<Integer> v, const IntMatrix& basis);

/// Basis of the integer kernel {x : rows * x = 0} as a saturated lattice.
IntMatrix kernel_basis(const IntMatrix& rows, std::size_t cols);

/// Unimodular column transform V (cols x cols) with rows * V = [H | 0]
/// where H has full column rank. Returns V.
IntMatrix column_hermite_transform(const IntMatrix& rows, std::size_t cols);

/// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

std::vector<Integer> make_primitive(std::vector<Integer> v);

}  // namespace troploc
