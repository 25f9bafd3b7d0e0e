#include "troploc/tropicalization.hpp"

#include <algorithm>
#include <random>

#include "troploc/error.hpp"
#include "troploc/newton.hpp"

namespace troploc {

namespace {

void require_interior(const Series& f) {
  require(!f.is_zero(), Errc::zero_series, "tropicalization of the zero series");
  require(is_interior_divisor(f), Errc::not_interior,
          "series " + f.to_string() + " vanishes on a boundary orbit of the ambient toric variety");
}

std::vector<std::vector<LatticeVector>> initial_data(const std::vector<Series>& generators,
                                                     const LatticeVector& w) {
  std::vector<std::vector<LatticeVector>> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(min_weight(g, w).basis);
  return out;
}

LatticeVector random_interior_point(const Cone& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(1, 997);
  LatticeVector p = LatticeVector::zero(c.rank());
  for (const auto& r : c.rays()) p = p + Integer(coef(rng)) * r;
  return p;
}

IntMatrix quotient_map(const Cone& sigma, const Cone& tau) {
  const std::size_t n = sigma.rank();
  if (tau.is_zero()) {
    IntMatrix id(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  IntMatrix eq;
  for (const auto& e : tau.equations()) eq.emplace_back(e.coords().begin(), e.coords().end());
  if (eq.empty()) return {};
  // eq * V = [H | 0]; the trailing columns of V span the saturated lattice in
  // span(tau), so the leading rows of V^-1 cut it out with a surjective map.
  IntMatrix v = column_hermite_transform(eq, n);
  IntMatrix vinv = unimodular_inverse(v);
  vinv.resize(eq.size());
  return vinv;
}

}  // namespace

std::vector<std::vector<std::vector<LatticeVector>>> label_cones(
    const Cone& ambient, const Fan& fan, const std::vector<Series>& generators) {
  std::vector<std::vector<std::vector<LatticeVector>>> labels(fan.size());
  for (std::size_t i = 0; i < fan.size(); ++i) {
    LatticeVector w = fan.cones()[i].interior_witness();
    if (ambient.relative_interior_contains(w)) {
      labels[i] = initial_data(generators, w);
    } else {
      labels[i].resize(generators.size());
    }
  }
  return labels;
}

Tropicalization troploc_divisor(const Series& f) {
  require_interior(f);
  NewtonFan nf = newton_fan(f);
  std::vector<Cone> edge_cones;
  for (std::size_t i = 0; i < nf.fan.size(); ++i) {
    if (nf.compact[i] && nf.face_dims[i] == 1) edge_cones.push_back(nf.fan.cones()[i]);
  }
  Tropicalization t;
  t.ambient = f.ambient();
  t.fan = Fan::from_cones(f.rank(), edge_cones);
  t.dim = f.rank() - 1;
  t.generators = {f};
  t.labels = label_cones(t.ambient, t.fan, t.generators);
  return t;
}

std::vector<LatticeVector> troploc_plane_curve(const Series& f) {
  require(f.rank() == 2, Errc::rank_mismatch, "plane curve tropicalization needs rank 2");
  Tropicalization t = troploc_divisor(f);
  std::vector<LatticeVector> rays = t.fan.rays();
  std::sort(rays.begin(), rays.end());
  return rays;
}

bool is_initial_weight(const std::vector<Series>& generators, const RationalVector& w) {
  for (const auto& g : generators) {
    if (min_weight(g, w).basis.size() < 2) return false;
  }
  return true;
}

bool is_initial_weight(const std::vector<Series>& generators, const LatticeVector& w) {
  return is_initial_weight(generators, w.to_rational());
}

Tropicalization troploc_ideal_upper(const std::vector<Series>& generators) {
  require(!generators.empty(), Errc::invalid_input, "ideal needs at least one generator");
  const Cone& ambient = generators.front().ambient();
  for (const auto& g : generators) {
    require(g.ambient() == ambient, Errc::cone_mismatch,
            "generators live over different ambient cones");
    require_interior(g);
  }
  Fan refined = newton_fan(generators.front()).fan;
  for (std::size_t i = 1; i < generators.size(); ++i) {
    refined = common_refinement(refined, newton_fan(generators[i]).fan);
  }
  std::vector<Cone> kept;
  for (const auto& c : refined.cones()) {
    LatticeVector w = c.interior_witness();
    if (c.is_zero() || !ambient.relative_interior_contains(w)) continue;
    if (is_initial_weight(generators, w)) kept.push_back(c);
  }
  Tropicalization t;
  t.ambient = ambient;
  t.fan = Fan::from_cones(ambient.rank(), kept);
  t.generators = generators;
  t.labels = label_cones(ambient, t.fan, generators);
  t.upper_bound = generators.size() > 1;
  return t;
}

std::string_view to_string(StructureIssue::Kind kind) {
  switch (kind) {
    case StructureIssue::Kind::wrong_dimension:
      return "wrong_dimension";
    case StructureIssue::Kind::misses_interior:
      return "misses_interior";
    case StructureIssue::Kind::label_not_constant:
      return "label_not_constant";
  }
  return "unknown";
}

StructureReport check_structure(const Tropicalization& t, std::size_t expected_dim,
                                std::uint64_t seed) {
  StructureReport report;
  report.expected_dim = expected_dim;
  report.maximal_cones = t.fan.maximal_indices().size();
  std::mt19937_64 rng(seed);
  auto flag = [&](StructureIssue::Kind kind, std::size_t idx, std::string detail) {
    report.passed = false;
    report.issues.push_back({kind, idx, std::move(detail)});
  };

  for (std::size_t idx : t.fan.maximal_indices()) {
    const Cone& c = t.fan.cones()[idx];
    if (c.dim() != expected_dim) {
      flag(StructureIssue::Kind::wrong_dimension, idx,
           c.to_string() + " has dimension " + std::to_string(c.dim()));
    }
    if (!t.ambient.relative_interior_contains(c.interior_witness())) {
      flag(StructureIssue::Kind::misses_interior, idx,
           c.to_string() + " lies in the boundary of the ambient cone");
    }
  }

  // Relative interiors of cones meeting the interior of the ambient cone lie
  // entirely inside it, so random positive combinations of rays are valid weights.
  for (std::size_t idx = 0; idx < t.fan.size(); ++idx) {
    const Cone& c = t.fan.cones()[idx];
    if (c.is_zero() || t.generators.empty()) continue;
    if (!t.ambient.relative_interior_contains(c.interior_witness())) continue;
    LatticeVector p = random_interior_point(c, rng);
    LatticeVector q = random_interior_point(c, rng);
    auto lp = initial_data(t.generators, p);
    auto lq = initial_data(t.generators, q);
    if (lp != lq) {
      flag(StructureIssue::Kind::label_not_constant, idx,
           c.to_string() + ": initial data differ at " + p.to_string() + " and " + q.to_string());
    }
  }
  return report;
}

ExtendedCone extended_cone(const Cone& sigma) {
  require(sigma.rank() > 0, Errc::invalid_input, "extended cone of a rank-0 cone");
  require(sigma.is_strictly_convex(), Errc::not_strictly_convex,
          "extended cone needs a strictly convex cone");
  require(sigma.is_full_dimensional(), Errc::not_full_dimensional,
          "extended cone needs a full-dimensional cone");
  ExtendedCone ec;
  ec.base = sigma;
  for (const auto& tau : faces(sigma)) {
    Stratum s;
    s.face = tau;
    s.quotient_rank = sigma.rank() - tau.dim();
    s.quotient_map = quotient_map(sigma, tau);
    if (s.quotient_rank == 0) {
      s.image = Cone();
    } else {
      std::vector<LatticeVector> images;
      for (const auto& r : sigma.rays()) {
        std::vector<Integer> img(s.quotient_rank, 0);
        for (std::size_t i = 0; i < s.quotient_rank; ++i) {
          for (std::size_t j = 0; j < sigma.rank(); ++j) img[i] += s.quotient_map[i][j] * r[j];
        }
        images.emplace_back(std::move(img), sigma.lattice());
      }
      s.image = Cone::from_generators(s.quotient_rank, images, sigma.lattice());
    }
    ec.strata.push_back(std::move(s));
  }
  return ec;
}

Tropicalization troploc_toric_germ(const Cone& sigma) {
  require(sigma.rank() > 0, Errc::invalid_input, "toric germ of a rank-0 cone");
  require(sigma.is_strictly_convex(), Errc::not_strictly_convex,
          "toric germ needs a strictly convex cone");
  require(sigma.is_full_dimensional(), Errc::not_full_dimensional,
          "toric germ needs a full-dimensional cone");
  Tropicalization t;
  t.ambient = sigma;
  t.fan = Fan::face_fan(sigma);
  t.dim = sigma.dim();
  t.labels.resize(t.fan.size());
  return t;
}

}  // namespace troploc
