#include "troploc/fan.hpp"

#include <algorithm>

#include "troploc/error.hpp"

namespace troploc {

namespace {

void sort_unique(std::vector<Cone>& cones) {
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
}

// Whether c is covered by the cones of b. The full-dimensional pieces
// c ∩ (cone of b) must exist, and every piece facet that reaches the
// relative interior of c must be shared by at least two pieces.
bool covered_by(const Cone& c, const Fan& b) {
  if (b.cones().empty()) return false;
  if (c.dim() == 0) return true;
  std::vector<Cone> pieces;
  for (const auto& m : b.maximal_cones()) {
    Cone p = intersect(c, m);
    if (p.dim() == c.dim()) pieces.push_back(std::move(p));
  }
  sort_unique(pieces);
  if (pieces.empty()) return false;
  for (const auto& p : pieces) {
    for (const auto& f : faces(p)) {
      if (f.dim() + 1 != c.dim()) continue;
      if (!c.relative_interior_contains(f.interior_witness())) continue;
      std::size_t sharing = 0;
      for (const auto& q : pieces) {
        if (q.contains(f)) ++sharing;
      }
      if (sharing < 2) return false;
    }
  }
  return true;
}

}  // namespace

Fan Fan::from_cones(std::size_t rank, const std::vector<Cone>& cones) {
  Fan f;
  f.rank_ = rank;
  for (const auto& c : cones) {
    require(c.rank() == rank, Errc::rank_mismatch, "fan cone " + c.to_string() + " has wrong rank");
    require(c.is_strictly_convex(), Errc::not_strictly_convex,
            "fan cone " + c.to_string() + " is not strictly convex");
    auto fs = faces(c);
    f.cones_.insert(f.cones_.end(), fs.begin(), fs.end());
  }
  sort_unique(f.cones_);
  for (std::size_t i = 0; i < f.cones_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < f.cones_.size() && maximal; ++j) {
      if (f.cones_[j].dim() > f.cones_[i].dim() && f.cones_[j].contains(f.cones_[i])) {
        maximal = false;
      }
    }
    if (maximal) f.maximal_.push_back(i);
  }
  return f;
}

Fan Fan::face_fan(const Cone& c) { return from_cones(c.rank(), {c}); }

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  out.reserve(maximal_.size());
  for (auto i : maximal_) out.push_back(cones_[i]);
  return out;
}

std::size_t Fan::dim() const {
  std::size_t d = 0;
  for (const auto& c : cones_) d = std::max(d, c.dim());
  return d;
}

std::optional<std::size_t> Fan::index_of(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
  if (it != cones_.end() && *it == c) return static_cast<std::size_t>(it - cones_.begin());
  return std::nullopt;
}

std::vector<LatticeVector> Fan::rays() const {
  std::vector<LatticeVector> out;
  for (const auto& c : cones_) {
    if (c.dim() == 1) out.push_back(c.rays().front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(FanViolation::Kind kind) {
  switch (kind) {
    case FanViolation::Kind::rank_mismatch: return "rank_mismatch";
    case FanViolation::Kind::not_strictly_convex: return "not_strictly_convex";
    case FanViolation::Kind::missing_face: return "missing_face";
    case FanViolation::Kind::bad_intersection: return "bad_intersection";
  }
  return "unknown";
}

FanReport validate_cones(std::size_t rank, const std::vector<Cone>& cones) {
  FanReport report;
  auto add = [&](FanViolation v) {
    report.valid = false;
    report.violations.push_back(std::move(v));
  };
  std::vector<bool> usable(cones.size(), true);
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (cones[i].rank() != rank) {
      add({FanViolation::Kind::rank_mismatch, i, i, cones[i].to_string()});
      usable[i] = false;
    } else if (!cones[i].is_strictly_convex()) {
      add({FanViolation::Kind::not_strictly_convex, i, i, cones[i].to_string()});
      usable[i] = false;
    }
  }
  std::vector<Cone> sorted = cones;
  sort_unique(sorted);
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!usable[i]) continue;
    for (const auto& f : faces(cones[i])) {
      if (!std::binary_search(sorted.begin(), sorted.end(), f)) {
        add({FanViolation::Kind::missing_face, i, i,
             f.to_string() + " is a face of " + cones[i].to_string()});
      }
    }
  }
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (!usable[i] || !usable[j]) continue;
      if (cones[i].contains(cones[j]) && is_face_of(cones[j], cones[i])) continue;
      if (cones[j].contains(cones[i]) && is_face_of(cones[i], cones[j])) continue;
      Cone meet = intersect(cones[i], cones[j]);
      if (!is_face_of(meet, cones[i]) || !is_face_of(meet, cones[j])) {
        add({FanViolation::Kind::bad_intersection, i, j,
             cones[i].to_string() + " and " + cones[j].to_string() + " meet in " +
                 meet.to_string()});
      }
    }
  }
  return report;
}

FanReport validate_fan(const Fan& f) { return validate_cones(f.rank(), f.cones()); }

bool support_contains(const Fan& f, const RationalVector& v) {
  for (auto i : f.maximal_indices()) {
    if (f.cones()[i].contains(v)) return true;
  }
  return false;
}

bool support_contains(const Fan& f, const LatticeVector& v) {
  for (auto i : f.maximal_indices()) {
    if (f.cones()[i].contains(v)) return true;
  }
  return false;
}

std::optional<std::size_t> cone_index_containing(const Fan& f, const RationalVector& v) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.cones()[i].relative_interior_contains(v)) return i;
  }
  return std::nullopt;
}

std::optional<Cone> cone_containing(const Fan& f, const RationalVector& v) {
  auto i = cone_index_containing(f, v);
  if (!i) return std::nullopt;
  return f.cones()[*i];
}

Fan star_subdivide(const Fan& f, const LatticeVector& r) {
  require(r.rank() == f.rank(), Errc::rank_mismatch, "subdivision ray has wrong rank");
  require(!r.is_zero(), Errc::zero_vector, "cannot subdivide along the zero vector");
  require(support_contains(f, r), Errc::outside_support,
          "ray " + r.to_string() + " lies outside the fan support");
  const Cone ray = Cone::from_generators(f.rank(), {primitive(r)});
  std::vector<Cone> out;
  for (const auto& c : f.cones()) {
    if (!c.contains(r)) {
      out.push_back(c);
      continue;
    }
    for (const auto& tau : faces(c)) {
      if (!tau.contains(r)) out.push_back(join(tau, ray));
    }
  }
  return Fan::from_cones(f.rank(), out);
}

Fan common_refinement(const Fan& a, const Fan& b) {
  require(a.rank() == b.rank(), Errc::rank_mismatch, "refining fans of different rank");
  std::vector<Cone> out;
  for (const auto& ca : a.maximal_cones()) {
    for (const auto& cb : b.maximal_cones()) out.push_back(intersect(ca, cb));
  }
  sort_unique(out);
  return Fan::from_cones(a.rank(), out);
}

bool support_subset(const Fan& a, const Fan& b) {
  require(a.rank() == b.rank(), Errc::rank_mismatch, "comparing fans of different rank");
  for (const auto& c : a.cones()) {
    if (!support_contains(b, c.interior_witness())) return false;
  }
  for (const auto& c : a.maximal_cones()) {
    if (!covered_by(c, b)) return false;
  }
  return true;
}

bool same_support(const Fan& a, const Fan& b) { return support_subset(a, b) && support_subset(b, a); }

}  // namespace troploc
