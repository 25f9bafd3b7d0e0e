#include "troploc/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "troploc/error.hpp"

namespace troploc {

namespace {

void check_rank(std::size_t a, std::size_t b) {
  if (a != b) {
    fail(Errc::rank_mismatch,
         "rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

template <class T>
std::string join_coords(std::span<const T> coords) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace

// -- LatticeVector ---------------------------------------------------------

LatticeVector::LatticeVector(std::vector<Integer> coords, Lattice lattice)
    : coords_(std::move(coords)), lattice_(lattice) {}

LatticeVector::LatticeVector(std::initializer_list<long> coords, Lattice lattice)
    : lattice_(lattice) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::zero(std::size_t rank, Lattice lattice) {
  return LatticeVector(std::vector<Integer>(rank, 0), lattice);
}

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t index, Lattice lattice) {
  std::vector<Integer> c(rank, 0);
  c.at(index) = 1;
  return LatticeVector(std::move(c), lattice);
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

bool LatticeVector::is_primitive() const { return content(coords_) == 1; }

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  check_rank(rank(), other.rank());
  std::vector<Integer> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = coords_[i] + other.coords_[i];
  return LatticeVector(std::move(c), lattice_);
}

LatticeVector LatticeVector::operator-(const LatticeVector& other) const {
  check_rank(rank(), other.rank());
  std::vector<Integer> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = coords_[i] - other.coords_[i];
  return LatticeVector(std::move(c), lattice_);
}

LatticeVector LatticeVector::operator-() const {
  std::vector<Integer> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = -coords_[i];
  return LatticeVector(std::move(c), lattice_);
}

LatticeVector operator*(const Integer& k, const LatticeVector& v) {
  std::vector<Integer> c(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) c[i] = k * v.coords_[i];
  return LatticeVector(std::move(c), v.lattice_);
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  return a.coords_ == b.coords_;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

RationalVector LatticeVector::to_rational() const {
  std::vector<Rational> c;
  c.reserve(rank());
  for (const auto& x : coords_) c.emplace_back(x);
  return RationalVector(std::move(c));
}

std::string LatticeVector::to_string() const { return join_coords<Integer>(coords_); }

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.to_string(); }

// -- RationalVector --------------------------------------------------------

RationalVector::RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

RationalVector::RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {
  for (auto& c : coords_) c.canonicalize();
}

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool RationalVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

RationalVector RationalVector::operator+(const RationalVector& other) const {
  check_rank(rank(), other.rank());
  std::vector<Rational> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = coords_[i] + other.coords_[i];
  return RationalVector(std::move(c));
}

RationalVector operator*(const Rational& k, const RationalVector& v) {
  std::vector<Rational> c(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) c[i] = k * v.coords_[i];
  return RationalVector(std::move(c));
}

bool operator==(const RationalVector& a, const RationalVector& b) { return a.coords_ == b.coords_; }

bool operator<(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

LatticeVector RationalVector::primitive_direction(Lattice lattice) const {
  require(!is_zero(), Errc::zero_vector, "primitive direction of the zero vector");
  Integer l = 1;
  for (const auto& c : coords_) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = coords_[i].get_num() * (l / coords_[i].get_den());
  return primitive(LatticeVector(std::move(out), lattice));
}

std::string RationalVector::to_string() const { return join_coords<Rational>(coords_); }

std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << v.to_string(); }

// -- pairing / primitive ---------------------------------------------------

Integer pairing(const LatticeVector& w, const LatticeVector& m) {
  check_rank(w.rank(), m.rank());
  Integer s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += w[i] * m[i];
  return s;
}

Rational pairing(const RationalVector& w, const LatticeVector& m) {
  check_rank(w.rank(), m.rank());
  Rational s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += w[i] * m[i];
  return s;
}

Rational pairing(const LatticeVector& u, const RationalVector& v) { return pairing(v, u); }

Rational pairing(const RationalVector& w, const RationalVector& m) {
  check_rank(w.rank(), m.rank());
  Rational s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += w[i] * m[i];
  return s;
}

Integer content(std::span<const Integer> coords) {
  Integer g = 0;
  for (const auto& c : coords) g = gcd(g, c);
  return g;
}

LatticeVector primitive(const LatticeVector& v) {
  require(!v.is_zero(), Errc::zero_vector, "primitive vector of the zero vector is undefined");
  Integer g = content(v.coords());
  std::vector<Integer> c(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) c[i] = v[i] / g;
  return LatticeVector(std::move(c), v.lattice());
}

std::vector<Integer> make_primitive(std::vector<Integer> v) {
  Integer g = content(v);
  if (g > 1) {
    for (auto& c : v) c /= g;
  }
  return v;
}

// -- linear algebra ----------------------------------------------------------

namespace {

RatMatrix to_rational(const IntMatrix& rows) {
  RatMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m[i].reserve(rows[i].size());
    for (const auto& x : rows[i]) m[i].emplace_back(x);
  }
  return m;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

std::size_t matrix_rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  RatMatrix m = to_rational(rows);
  return rref(m, rows.front().size()).size();
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

IntMatrix row_space_basis(const IntMatrix& rows, std::size_t cols) {
  RatMatrix m = to_rational(rows);
  rref(m, cols);
  IntMatrix out;
  out.reserve(m.size());
  for (const auto& r : m) {
    Integer l = 1;
    for (const auto& x : r) l = lcm(l, Integer(x.get_den()));
    std::vector<Integer> v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[c] = r[c].get_num() * (l / r[c].get_den());
    out.push_back(make_primitive(std::move(v)));
  }
  return out;
}

std::vector<Integer> reduce_modulo(std::vector<Integer> v, const IntMatrix& basis) {
  for (const auto& row : basis) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size() || v[p] == 0) continue;
    const Integer piv = row[p];
    const Integer f = v[p];
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = piv * v[c] - f * row[c];
  }
  return make_primitive(std::move(v));
}

IntMatrix column_hermite_transform(const IntMatrix& rows, std::size_t cols) {
  IntMatrix a = rows;
  IntMatrix v(cols, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& r : a) r[dst] -= q * r[src];
    for (auto& r : v) r[dst] -= q * r[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& r : a) std::swap(r[x], r[y]);
    for (auto& r : v) std::swap(r[x], r[y]);
  };

  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size() && k < cols; ++i) {
    for (std::size_t j = k + 1; j < cols; ++j) {
      while (a[i][j] != 0) {
        if (a[i][k] == 0) {
          col_swap(k, j);
          continue;
        }
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][k].get_mpz_t(), a[i][j].get_mpz_t());
        col_axpy(k, j, q);
        col_swap(k, j);
      }
    }
    if (a[i][k] != 0) ++k;
  }
  return v;
}

IntMatrix kernel_basis(const IntMatrix& rows, std::size_t cols) {
  IntMatrix v = column_hermite_transform(rows, cols);
  // Columns of v whose image under rows vanishes span the kernel lattice.
  IntMatrix out;
  for (std::size_t c = 0; c < cols; ++c) {
    bool zero = true;
    for (const auto& r : rows) {
      Integer s = 0;
      for (std::size_t t = 0; t < cols; ++t) s += r[t] * v[t][c];
      if (s != 0) {
        zero = false;
        break;
      }
    }
    if (zero) {
      std::vector<Integer> col(cols);
      for (std::size_t t = 0; t < cols; ++t) col[t] = v[t][c];
      out.push_back(std::move(col));
    }
  }
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, 2 * n);
  require(pivots.size() == n && pivots.back() == n - 1, Errc::internal,
          "matrix is not invertible");
  IntMatrix inv(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = aug[i][n + j];
      require(x.get_den() == 1, Errc::internal, "matrix is not unimodular");
      inv[i][j] = x.get_num();
    }
  }
  return inv;
}

}  // namespace troploc
