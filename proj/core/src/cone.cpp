#include "troploc/cone.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <set>
#include <sstream>

#include "double_description.hpp"
#include "troploc/error.hpp"

namespace troploc {

namespace {

std::atomic<std::size_t> g_rank_limit{8};

void check_limit(std::size_t rank) {
  if (rank > g_rank_limit.load()) {
    fail(Errc::rank_limit, "ambient rank " + std::to_string(rank) + " exceeds the limit " +
                               std::to_string(g_rank_limit.load()));
  }
}

IntMatrix to_matrix(const std::vector<LatticeVector>& vs, std::size_t rank) {
  IntMatrix m;
  m.reserve(vs.size());
  for (const auto& v : vs) {
    require(v.rank() == rank, Errc::rank_mismatch,
            "vector " + v.to_string() + " does not have rank " + std::to_string(rank));
    m.emplace_back(v.coords().begin(), v.coords().end());
  }
  return m;
}

std::vector<LatticeVector> to_vectors(const IntMatrix& m, Lattice lattice) {
  std::vector<LatticeVector> out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row, lattice);
  return out;
}

}  // namespace

std::size_t cone_rank_limit() { return g_rank_limit.load(); }
void set_cone_rank_limit(std::size_t limit) { g_rank_limit.store(limit); }

Cone Cone::build(std::size_t rank, const IntMatrix& lineality, const IntMatrix& rays,
                 Lattice lattice) {
  detail::GeneratorForm facet_form = detail::double_description(rank, rays, lineality);
  Cone c;
  c.rank_ = rank;
  c.lattice_ = lattice;
  c.lineality_ = to_vectors(row_space_basis(lineality, rank), lattice);
  c.rays_ = to_vectors(rays, lattice);
  c.equations_ = to_vectors(facet_form.lineality, dual(lattice));
  c.facets_ = to_vectors(facet_form.rays, dual(lattice));
  return c;
}

Cone Cone::from_generators(std::size_t rank, const std::vector<LatticeVector>& generators,
                           Lattice lattice) {
  check_limit(rank);
  IntMatrix gens = to_matrix(generators, rank);
  detail::GeneratorForm facet_form = detail::double_description(rank, gens, {});
  detail::GeneratorForm primal =
      detail::double_description(rank, facet_form.rays, facet_form.lineality);
  Cone c;
  c.rank_ = rank;
  c.lattice_ = lattice;
  c.lineality_ = to_vectors(primal.lineality, lattice);
  c.rays_ = to_vectors(primal.rays, lattice);
  c.equations_ = to_vectors(facet_form.lineality, dual(lattice));
  c.facets_ = to_vectors(facet_form.rays, dual(lattice));
  return c;
}

Cone Cone::from_inequalities(std::size_t rank, const std::vector<LatticeVector>& inequalities,
                             const std::vector<LatticeVector>& equations, Lattice lattice) {
  check_limit(rank);
  detail::GeneratorForm primal = detail::double_description(
      rank, to_matrix(inequalities, rank), to_matrix(equations, rank));
  return build(rank, primal.lineality, primal.rays, lattice);
}

Cone Cone::orthant(std::size_t rank, Lattice lattice) {
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(LatticeVector::unit(rank, i, lattice));
  return from_generators(rank, gens, lattice);
}

Cone Cone::zero(std::size_t rank, Lattice lattice) { return from_generators(rank, {}, lattice); }

std::vector<LatticeVector> Cone::generators() const {
  std::vector<LatticeVector> g = rays_;
  for (const auto& l : lineality_) {
    g.push_back(l);
    g.push_back(-l);
  }
  return g;
}

bool Cone::contains(const LatticeVector& v) const {
  require(v.rank() == rank_, Errc::rank_mismatch, "point rank does not match cone rank");
  for (const auto& e : equations_) {
    if (pairing(e, v) != 0) return false;
  }
  for (const auto& u : facets_) {
    if (pairing(u, v) < 0) return false;
  }
  return true;
}

bool Cone::contains(const RationalVector& v) const {
  require(v.rank() == rank_, Errc::rank_mismatch, "point rank does not match cone rank");
  for (const auto& e : equations_) {
    if (pairing(e, v) != 0) return false;
  }
  for (const auto& u : facets_) {
    if (pairing(u, v) < 0) return false;
  }
  return true;
}

bool Cone::contains(const Cone& other) const {
  return std::all_of(other.rays_.begin(), other.rays_.end(),
                     [&](const LatticeVector& r) { return contains(r); }) &&
         std::all_of(other.lineality_.begin(), other.lineality_.end(),
                     [&](const LatticeVector& l) { return contains(l) && contains(-l); });
}

bool Cone::relative_interior_contains(const LatticeVector& v) const {
  require(v.rank() == rank_, Errc::rank_mismatch, "point rank does not match cone rank");
  for (const auto& e : equations_) {
    if (pairing(e, v) != 0) return false;
  }
  for (const auto& u : facets_) {
    if (pairing(u, v) <= 0) return false;
  }
  return true;
}

bool Cone::relative_interior_contains(const RationalVector& v) const {
  require(v.rank() == rank_, Errc::rank_mismatch, "point rank does not match cone rank");
  for (const auto& e : equations_) {
    if (pairing(e, v) != 0) return false;
  }
  for (const auto& u : facets_) {
    if (pairing(u, v) <= 0) return false;
  }
  return true;
}

LatticeVector Cone::interior_witness() const {
  LatticeVector w = LatticeVector::zero(rank_, lattice_);
  for (const auto& r : rays_) w = w + r;
  return w;
}

bool operator==(const Cone& a, const Cone& b) {
  return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_ &&
         a.equations_ == b.equations_ && a.facets_ == b.facets_;
}

bool operator<(const Cone& a, const Cone& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
  return a.lineality_ < b.lineality_;
}

std::string Cone::to_string() const {
  std::ostringstream os;
  os << "cone<";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) os << ',';
    os << rays_[i];
  }
  if (!lineality_.empty()) {
    os << " | lin";
    for (const auto& l : lineality_) os << ' ' << l;
  }
  os << '>';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cone& c) { return os << c.to_string(); }

Cone Cone::dual_view() const {
  Cone d;
  d.rank_ = rank_;
  d.lattice_ = dual(lattice_);
  d.rays_ = facets_;
  d.lineality_ = equations_;
  d.facets_ = rays_;
  d.equations_ = lineality_;
  return d;
}

Cone dual_cone(const Cone& c) { return c.dual_view(); }

bool is_regular(const Cone& c) {
  if (!c.is_strictly_convex()) return false;
  const auto& rays = c.rays();
  const std::size_t k = rays.size();
  const std::size_t n = c.rank();
  if (k != c.dim()) return false;
  if (k == 0) return true;
  // gcd of the maximal minors of the k x n ray matrix is 1 iff the rays
  // extend to a basis of the lattice.
  Integer g = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    IntMatrix minor(k, std::vector<Integer>(k));
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!pick[j]) continue;
      for (std::size_t i = 0; i < k; ++i) minor[i][col] = rays[i][j];
      ++col;
    }
    g = gcd(g, determinant(minor));
    if (g == 1) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g == 1;
}

std::vector<Cone> faces(const Cone& c) {
  const auto& rays = c.rays();
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{std::vector<bool>(rays.size(), true)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto current = queue[head];
    for (const auto& u : c.facets()) {
      std::vector<bool> sub(rays.size(), false);
      for (std::size_t i = 0; i < rays.size(); ++i) sub[i] = current[i] && pairing(u, rays[i]) == 0;
      if (sub != current && seen.insert(sub).second) queue.push_back(sub);
    }
  }
  std::vector<Cone> out;
  out.reserve(queue.size());
  for (const auto& mask : queue) {
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (mask[i]) gens.push_back(rays[i]);
    }
    for (const auto& l : c.lineality()) {
      gens.push_back(l);
      gens.push_back(-l);
    }
    out.push_back(Cone::from_generators(c.rank(), gens, c.lattice()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_face_of(const Cone& face, const Cone& c) {
  if (face.rank() != c.rank() || !c.contains(face)) return false;
  const auto gens = face.generators();
  std::vector<LatticeVector> tight;
  for (const auto& u : c.facets()) {
    bool vanishes = std::all_of(gens.begin(), gens.end(),
                                [&](const LatticeVector& g) { return pairing(u, g) == 0; });
    if (vanishes) tight.push_back(u);
  }
  std::vector<LatticeVector> sub;
  for (const auto& r : c.rays()) {
    bool on = std::all_of(tight.begin(), tight.end(),
                          [&](const LatticeVector& u) { return pairing(u, r) == 0; });
    if (on) sub.push_back(r);
  }
  for (const auto& l : c.lineality()) {
    sub.push_back(l);
    sub.push_back(-l);
  }
  return Cone::from_generators(c.rank(), sub, c.lattice()) == face;
}

Cone intersect(const Cone& a, const Cone& b) {
  require(a.rank() == b.rank(), Errc::rank_mismatch, "intersecting cones of different rank");
  std::vector<LatticeVector> ineq = a.facets();
  ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
  std::vector<LatticeVector> eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.rank(), ineq, eq, a.lattice());
}

Cone join(const Cone& a, const Cone& b) {
  require(a.rank() == b.rank(), Errc::rank_mismatch, "joining cones of different rank");
  auto gens = a.generators();
  auto more = b.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return Cone::from_generators(a.rank(), gens, a.lattice());
}

}  // namespace troploc
