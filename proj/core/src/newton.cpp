#include "troploc/newton.hpp"

#include <algorithm>

#include "troploc/error.hpp"

namespace troploc {

namespace {

LatticeVector lift(const LatticeVector& v, long last) {
  std::vector<Integer> c(v.coords().begin(), v.coords().end());
  c.emplace_back(last);
  return LatticeVector(std::move(c), Lattice::M);
}

LatticeVector drop_last(const LatticeVector& v) {
  std::vector<Integer> c(v.coords().begin(), v.coords().end() - 1);
  return LatticeVector(std::move(c), Lattice::M);
}

const Integer& last(const LatticeVector& v) { return v[v.rank() - 1]; }

struct PolyFace {
  std::size_t dim;
  bool compact;
  std::vector<LatticeVector> vertices;
  std::vector<LatticeVector> recession_rays;
  std::vector<LatticeVector> support;
};

std::vector<PolyFace> polyhedron_faces(const Cone& homogenized,
                                       const std::vector<LatticeVector>& points) {
  std::vector<PolyFace> out;
  for (const auto& face : faces(homogenized)) {
    PolyFace pf;
    for (const auto& r : face.rays()) {
      if (last(r) > 0) {
        pf.vertices.push_back(drop_last(r));
      } else {
        pf.recession_rays.push_back(drop_last(r));
      }
    }
    if (pf.vertices.empty()) continue;  // face at infinity
    pf.dim = face.dim() - 1;
    pf.compact = pf.recession_rays.empty();
    for (const auto& p : points) {
      if (face.contains(lift(p, 1))) pf.support.push_back(p);
    }
    out.push_back(std::move(pf));
  }
  return out;
}

}  // namespace

NewtonPolyhedron NewtonPolyhedron::from_points(const Cone& recession,
                                               std::vector<LatticeVector> points) {
  require(!points.empty(), Errc::zero_series, "Newton polyhedron of an empty support");
  require(recession.is_strictly_convex(), Errc::not_strictly_convex,
          "recession cone must be strictly convex");
  const std::size_t n = recession.rank();
  for (auto& p : points) {
    require(p.rank() == n, Errc::rank_mismatch, "point rank does not match recession cone");
    p = p.on(Lattice::M);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<LatticeVector> gens;
  gens.reserve(points.size() + recession.rays().size());
  for (const auto& p : points) gens.push_back(lift(p, 1));
  for (const auto& r : recession.rays()) gens.push_back(lift(r, 0));

  NewtonPolyhedron poly;
  poly.recession_ = recession;
  poly.points_ = std::move(points);
  poly.homogenized_ = Cone::from_generators(n + 1, gens, Lattice::M);
  for (const auto& r : poly.homogenized_.rays()) {
    if (last(r) > 0) {
      require(last(r) == 1, Errc::internal, "vertex of a lattice polyhedron is not integral");
      poly.vertices_.push_back(drop_last(r));
    }
  }
  for (auto& pf : polyhedron_faces(poly.homogenized_, poly.points_)) {
    if (!pf.compact) continue;
    poly.compact_faces_.push_back(
        CompactFace{pf.dim, std::move(pf.vertices), std::move(pf.support)});
  }
  std::sort(poly.compact_faces_.begin(), poly.compact_faces_.end(),
            [](const CompactFace& a, const CompactFace& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.vertices < b.vertices;
            });
  return poly;
}

std::vector<CompactFace> NewtonPolyhedron::compact_faces_of_dim(std::size_t dim) const {
  std::vector<CompactFace> out;
  for (const auto& f : compact_faces_) {
    if (f.dim == dim) out.push_back(f);
  }
  return out;
}

bool NewtonPolyhedron::contains(const RationalVector& point) const {
  std::vector<Rational> c(point.coords().begin(), point.coords().end());
  c.emplace_back(1);
  return homogenized_.contains(RationalVector(std::move(c)));
}

NewtonPolyhedron newton_polyhedron(const Series& f) {
  require(!f.is_zero(), Errc::zero_series, "Newton polyhedron of the zero series");
  return NewtonPolyhedron::from_points(dual_cone(f.ambient()), f.support());
}

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q) {
  require(p.recession_cone() == q.recession_cone(), Errc::cone_mismatch,
          "Minkowski sum of polyhedra with different recession cones");
  std::vector<LatticeVector> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  }
  return NewtonPolyhedron::from_points(p.recession_cone(), std::move(pts));
}

NewtonFan newton_fan(const NewtonPolyhedron& p, const Cone& ambient) {
  const std::size_t n = ambient.rank();
  const auto dual_rays = p.recession_cone().rays();
  std::vector<Cone> cones;
  std::vector<PolyFace> pfs = polyhedron_faces(p.homogenization(), p.points());
  for (const auto& pf : pfs) {
    const LatticeVector& base = pf.vertices.front();
    std::vector<LatticeVector> ineq;
    for (const auto& v : p.vertices()) {
      if (v != base) ineq.push_back(v - base);
    }
    ineq.insert(ineq.end(), dual_rays.begin(), dual_rays.end());
    std::vector<LatticeVector> eq;
    for (const auto& v : pf.vertices) {
      if (v != base) eq.push_back(v - base);
    }
    eq.insert(eq.end(), pf.recession_rays.begin(), pf.recession_rays.end());
    cones.push_back(Cone::from_inequalities(n, ineq, eq, Lattice::N));
  }

  NewtonFan nf;
  nf.fan = Fan::from_cones(n, cones);
  nf.labels.resize(nf.fan.size());
  nf.compact.resize(nf.fan.size(), false);
  nf.face_dims.resize(nf.fan.size(), 0);
  std::vector<bool> seen(nf.fan.size(), false);
  for (std::size_t i = 0; i < cones.size(); ++i) {
    auto idx = nf.fan.index_of(cones[i]);
    require(idx.has_value(), Errc::internal, "normal cone missing from Newton fan");
    nf.labels[*idx] = pfs[i].support;
    nf.compact[*idx] = pfs[i].compact;
    nf.face_dims[*idx] = pfs[i].dim;
    seen[*idx] = true;
  }
  require(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }), Errc::internal,
          "Newton fan contains a cone dual to no face");
  return nf;
}

NewtonFan newton_fan(const Series& f) {
  require(!f.is_zero(), Errc::zero_series, "Newton fan of the zero series");
  return newton_fan(newton_polyhedron(f), f.ambient());
}

}  // namespace troploc
