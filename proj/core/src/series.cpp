#include "troploc/series.hpp"

#include <sstream>

#include "troploc/error.hpp"

namespace troploc {

Series::Series(Cone ambient, Terms terms) : ambient_(std::move(ambient)) {
  require(ambient_.is_strictly_convex() && ambient_.is_full_dimensional(),
          Errc::not_full_dimensional,
          "series ambient cone must be strictly convex and full-dimensional");
  for (auto& [m, c] : terms) {
    require(m.rank() == ambient_.rank(), Errc::rank_mismatch,
            "exponent " + m.to_string() + " has wrong rank");
    c.canonicalize();
    if (c == 0) continue;
    for (const auto& r : ambient_.rays()) {
      require(pairing(r, m) >= 0, Errc::invalid_input,
              "exponent " + m.to_string() + " lies outside the dual of the ambient cone");
    }
    terms_.emplace(m.on(Lattice::M), c);
  }
}

Series Series::over_orthant(std::size_t rank,
                            const std::vector<std::pair<std::vector<long>, Rational>>& terms) {
  Terms t;
  for (const auto& [e, c] : terms) {
    std::vector<Integer> coords(e.begin(), e.end());
    LatticeVector m(std::move(coords), Lattice::M);
    t[m] += c;
  }
  return Series(Cone::orthant(rank), std::move(t));
}

std::vector<LatticeVector> Series::support() const {
  std::vector<LatticeVector> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

Rational Series::coefficient(const LatticeVector& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool constant = m.is_zero();
    if (a != 1 || constant) {
      os << a.get_str();
      if (!constant) os << '*';
    }
    bool needs_sep = false;
    for (std::size_t i = 0; i < m.rank(); ++i) {
      if (m[i] == 0) continue;
      if (needs_sep) os << '*';
      os << 'x' << (i + 1);
      if (m[i] != 1) os << '^' << m[i].get_str();
      needs_sep = true;
    }
  }
  return os.str();
}

namespace {

template <class W>
void check_weight(const Series& f, const W& w) {
  require(!f.is_zero(), Errc::zero_series, "operation requires a nonzero series");
  require(w.rank() == f.rank(), Errc::rank_mismatch, "weight rank does not match series rank");
  require(f.ambient().relative_interior_contains(w), Errc::boundary_weight,
          "weight " + w.to_string() + " is not in the interior of the ambient cone");
}

}  // namespace

MinWeight<Rational> min_weight_unchecked(const Series& f, const RationalVector& w) {
  require(!f.is_zero(), Errc::zero_series, "operation requires a nonzero series");
  MinWeight<Rational> out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational v = pairing(w, m);
    if (first || v < out.value) {
      out.value = v;
      out.basis.clear();
      first = false;
    }
    if (v == out.value) out.basis.push_back(m);
  }
  return out;
}

MinWeight<Rational> min_weight(const Series& f, const RationalVector& w) {
  check_weight(f, w);
  return min_weight_unchecked(f, w);
}

MinWeight<Integer> min_weight(const Series& f, const LatticeVector& w) {
  check_weight(f, w);
  auto r = min_weight_unchecked(f, w.to_rational());
  return {r.value.get_num(), std::move(r.basis)};
}

Series initial_form(const Series& f, const RationalVector& w) {
  auto mw = min_weight(f, w);
  Series::Terms t;
  for (const auto& m : mw.basis) t.emplace(m, f.coefficient(m));
  return Series(f.ambient(), std::move(t));
}

Series initial_form(const Series& f, const LatticeVector& w) {
  return initial_form(f, w.to_rational());
}

bool is_monomial(const Series& f) {
  require(!f.is_zero(), Errc::zero_series, "is_monomial of the zero series");
  return f.size() == 1;
}

Series multiply(const Series& f, const Series& g) {
  require(f.ambient() == g.ambient(), Errc::cone_mismatch,
          "multiplying series over different ambient cones");
  Series::Terms t;
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) t[a + b] += ca * cb;
  }
  return Series(f.ambient(), std::move(t));
}

Series add(const Series& f, const Series& g) {
  require(f.ambient() == g.ambient(), Errc::cone_mismatch,
          "adding series over different ambient cones");
  Series::Terms t = f.terms();
  for (const auto& [m, c] : g.terms()) t[m] += c;
  return Series(f.ambient(), std::move(t));
}

bool is_interior_divisor(const Series& f) {
  require(!f.is_zero(), Errc::zero_series, "interiority of the zero series");
  for (const auto& ray : f.ambient().rays()) {
    bool hit = false;
    for (const auto& [m, c] : f.terms()) {
      if (pairing(ray, m) == 0) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace troploc
