#include "double_description.hpp"

#include <algorithm>

#include "troploc/error.hpp"

namespace troploc::detail {

namespace {

using IntVec = std::vector<Integer>;

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Ray {
  IntVec v;
  std::vector<bool> tight;  // over processed constraints
};

// Rank of the processed constraints selected by mask.
std::size_t masked_rank(const IntMatrix& constraints, const std::vector<bool>& mask) {
  IntMatrix rows;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) rows.push_back(constraints[i]);
  }
  return matrix_rank(rows);
}

}  // namespace

GeneratorForm double_description(std::size_t rank, const IntMatrix& inequalities,
                                 const IntMatrix& equations) {
  IntMatrix constraints;
  constraints.reserve(inequalities.size() + 2 * equations.size());
  for (const auto& e : equations) {
    require(e.size() == rank, Errc::rank_mismatch, "equation has wrong rank");
    constraints.push_back(e);
    IntVec neg(rank);
    for (std::size_t i = 0; i < rank; ++i) neg[i] = -e[i];
    constraints.push_back(std::move(neg));
  }
  for (const auto& a : inequalities) {
    require(a.size() == rank, Errc::rank_mismatch, "inequality has wrong rank");
    constraints.push_back(a);
  }

  IntMatrix lineality;
  for (std::size_t i = 0; i < rank; ++i) {
    IntVec e(rank, 0);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  IntMatrix processed;

  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const IntVec& a = constraints[k];

    auto lin_it = std::find_if(lineality.begin(), lineality.end(),
                               [&](const IntVec& l) { return dot(a, l) != 0; });
    if (lin_it != lineality.end()) {
      IntVec l = *lin_it;
      lineality.erase(lin_it);
      Integer al = dot(a, l);
      if (al < 0) {
        for (auto& x : l) x = -x;
        al = -al;
      }
      auto project = [&](IntVec& v) {
        Integer av = dot(a, v);
        if (av == 0) return;
        for (std::size_t i = 0; i < rank; ++i) v[i] = al * v[i] - av * l[i];
        v = make_primitive(std::move(v));
      };
      for (auto& v : lineality) project(v);
      for (auto& r : rays) {
        project(r.v);
        r.tight.push_back(true);
      }
      Ray nr{make_primitive(l), std::vector<bool>(k, true)};
      nr.tight.push_back(false);
      rays.push_back(std::move(nr));
      processed.push_back(a);
      continue;
    }

    // a vanishes on the lineality space: classic Motzkin step.
    const std::size_t pointed_dim = matrix_rank(processed);
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
      if (val[i] >= 0) {
        Ray r = rays[i];
        r.tight.push_back(val[i] == 0);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        std::vector<bool> common(k);
        std::size_t count = 0;
        for (std::size_t t = 0; t < k; ++t) {
          common[t] = rays[p].tight[t] && rays[n].tight[t];
          count += common[t];
        }
        if (pointed_dim < 2 || count + 2 < pointed_dim) continue;
        if (masked_rank(processed, common) != pointed_dim - 2) continue;
        IntVec r(rank);
        Integer ap = val[p];
        Integer an = -val[n];
        for (std::size_t i = 0; i < rank; ++i) r[i] = ap * rays[n].v[i] + an * rays[p].v[i];
        common.push_back(true);
        next.push_back(Ray{make_primitive(std::move(r)), std::move(common)});
      }
    }
    rays = std::move(next);
    processed.push_back(a);
  }

  GeneratorForm out;
  out.lineality = row_space_basis(lineality, rank);
  for (auto& r : rays) {
    IntVec v = reduce_modulo(std::move(r.v), out.lineality);
    bool zero = std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
    if (!zero) out.rays.push_back(std::move(v));
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

}  // namespace troploc::detail
