#include "troploc/splice.hpp"

#include <algorithm>
#include <numeric>

#include "troploc/error.hpp"

namespace troploc {

namespace {

constexpr long kSemigroupLimit = 50'000'000;

void diagram_error(const std::string& msg) { fail(Errc::invalid_diagram, msg); }

}  // namespace

std::size_t SpliceDiagram::slot(const Vertex& v) const {
  if (v.kind == Vertex::Kind::leaf) {
    require(v.index < leaves_, Errc::invalid_diagram, "leaf " + std::to_string(v.index + 1) +
                                                          " does not exist");
    return v.index;
  }
  require(v.index < names_.size(), Errc::not_a_node, "node index out of range");
  return leaves_ + v.index;
}

SpliceDiagram SpliceDiagram::make(std::size_t leaves, std::vector<std::string> node_names,
                                  const std::vector<std::pair<Vertex, Vertex>>& edges,
                                  const std::vector<SpliceWeight>& weights) {
  SpliceDiagram d;
  d.leaves_ = leaves;
  d.names_ = std::move(node_names);
  if (d.names_.empty()) diagram_error("a splice diagram needs at least one node");
  {
    auto sorted = d.names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      diagram_error("duplicate node name");
    }
  }
  const std::size_t vcount = leaves + d.names_.size();
  d.adjacency_.assign(vcount, {});
  d.weights_.assign(d.names_.size(), {});

  if (edges.size() + 1 != vcount) {
    diagram_error("a tree on " + std::to_string(vcount) + " vertices has " +
                  std::to_string(vcount - 1) + " edges, got " + std::to_string(edges.size()));
  }
  std::vector<std::size_t> parent(vcount);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : edges) {
    std::size_t sa = d.slot(a), sb = d.slot(b);
    if (sa == sb) diagram_error("loop at " + d.vertex_name(a));
    std::size_t ra = find(sa), rb = find(sb);
    if (ra == rb) diagram_error("edge " + d.vertex_name(a) + "-" + d.vertex_name(b) + " closes a cycle");
    parent[ra] = rb;
    d.adjacency_[sa].push_back(b);
    d.adjacency_[sb].push_back(a);
  }
  for (auto& adj : d.adjacency_) std::sort(adj.begin(), adj.end());

  for (std::size_t i = 0; i < leaves; ++i) {
    if (d.adjacency_[i].size() != 1) {
      diagram_error("leaf " + std::to_string(i + 1) + " has valency " +
                    std::to_string(d.adjacency_[i].size()));
    }
  }
  for (std::size_t u = 0; u < d.names_.size(); ++u) {
    if (d.adjacency_[leaves + u].size() < 3) {
      diagram_error("node " + d.names_[u] + " has valency " +
                    std::to_string(d.adjacency_[leaves + u].size()) + " (nodes need at least 3)");
    }
  }

  for (const auto& w : weights) {
    require(w.node < d.names_.size(), Errc::invalid_diagram, "weight on an unknown node");
    const auto& adj = d.adjacency_[leaves + w.node];
    if (!std::binary_search(adj.begin(), adj.end(), w.toward)) {
      diagram_error("weight at " + d.names_[w.node] + " toward " + d.vertex_name(w.toward) +
                    " is not on an incident edge");
    }
    if (w.value < 1) diagram_error("weights must be positive");
    if (!d.weights_[w.node].emplace(w.toward, w.value).second) {
      diagram_error("duplicate weight at " + d.names_[w.node] + " toward " +
                    d.vertex_name(w.toward));
    }
  }
  for (std::size_t u = 0; u < d.names_.size(); ++u) {
    for (const auto& x : d.adjacency_[leaves + u]) {
      if (!d.weights_[u].count(x)) {
        diagram_error("missing weight at " + d.names_[u] + " toward " + d.vertex_name(x));
      }
    }
  }
  return d;
}

std::optional<std::size_t> SpliceDiagram::node_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::string SpliceDiagram::vertex_name(const Vertex& v) const {
  if (v.kind == Vertex::Kind::leaf) return "leaf " + std::to_string(v.index + 1);
  return v.index < names_.size() ? names_[v.index] : "node#" + std::to_string(v.index);
}

const std::vector<Vertex>& SpliceDiagram::neighbors(const Vertex& v) const {
  return adjacency_[slot(v)];
}

std::vector<std::pair<Vertex, Vertex>> SpliceDiagram::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t s = 0; s < adjacency_.size(); ++s) {
    Vertex a = s < leaves_ ? Vertex::leaf(s) : Vertex::node(s - leaves_);
    for (const auto& b : adjacency_[s]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Integer& SpliceDiagram::weight(std::size_t node, const Vertex& toward) const {
  require(node < names_.size(), Errc::not_a_node, "weight requested at a non-node");
  auto it = weights_[node].find(toward);
  require(it != weights_[node].end(), Errc::invalid_input,
          names_[node] + " is not adjacent to " + vertex_name(toward));
  return it->second;
}

std::vector<Vertex> SpliceDiagram::path(const Vertex& a, const Vertex& b) const {
  const std::size_t sa = slot(a), sb = slot(b);
  std::vector<std::optional<Vertex>> prev(adjacency_.size());
  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<Vertex> queue{a};
  seen[sa] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (const auto& y : adjacency_[slot(x)]) {
      std::size_t sy = slot(y);
      if (seen[sy]) continue;
      seen[sy] = true;
      prev[sy] = x;
      queue.push_back(y);
    }
  }
  std::vector<Vertex> out{b};
  for (std::size_t s = sb; s != sa;) {
    Vertex p = *prev[s];
    out.push_back(p);
    s = slot(p);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> SpliceDiagram::leaves_beyond(std::size_t node,
                                                      const Vertex& toward) const {
  weight(node, toward);  // adjacency check
  std::vector<bool> seen(adjacency_.size(), false);
  seen[leaves_ + node] = true;
  seen[slot(toward)] = true;
  std::vector<Vertex> stack{toward};
  std::vector<std::size_t> out;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    if (x.kind == Vertex::Kind::leaf) out.push_back(x.index);
    for (const auto& y : adjacency_[slot(x)]) {
      if (!seen[slot(y)]) {
        seen[slot(y)] = true;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer linking_number(const SpliceDiagram& d, std::size_t u, const Vertex& p) {
  require(u < d.node_count(), Errc::not_a_node, "linking number needs a node");
  const auto path = d.path(Vertex::node(u), p);
  Integer out = 1;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Vertex& v = path[k];
    if (!v.is_node()) continue;
    for (const auto& x : d.neighbors(v)) {
      bool on_path = (k > 0 && path[k - 1] == x) || (k + 1 < path.size() && path[k + 1] == x);
      if (!on_path) out *= d.weight(v.index, x);
    }
  }
  return out;
}

Integer node_degree(const SpliceDiagram& d, std::size_t u) {
  return linking_number(d, u, Vertex::node(u));
}

LatticeVector weight_vector(const SpliceDiagram& d, std::size_t u) {
  std::vector<Integer> c;
  c.reserve(d.leaf_count());
  for (std::size_t i = 0; i < d.leaf_count(); ++i) c.push_back(linking_number(d, u, Vertex::leaf(i)));
  return LatticeVector(std::move(c), Lattice::N);
}

bool SpliceReport::coprime_ok() const {
  return std::all_of(coprime.begin(), coprime.end(), [](const auto& c) { return c.passed; });
}
bool SpliceReport::edge_determinant_ok() const {
  return std::all_of(edge_determinant.begin(), edge_determinant.end(),
                     [](const auto& c) { return c.passed; });
}
bool SpliceReport::semigroup_ok() const {
  return std::all_of(semigroup.begin(), semigroup.end(), [](const auto& c) { return c.passed; });
}

std::optional<std::vector<Integer>> semigroup_representation(const Integer& target,
                                                             const std::vector<Integer>& gens) {
  require(target >= 0, Errc::invalid_input, "semigroup target must be nonnegative");
  require(target <= kSemigroupLimit, Errc::invalid_input,
          "semigroup target " + target.get_str() + " exceeds the search limit");
  for (const auto& g : gens) require(g > 0, Errc::invalid_input, "semigroup generators must be positive");
  const long t = target.get_si();
  const std::size_t s = gens.size();
  // reach[k][x]: x is a nonnegative combination of gens[k..s).
  std::vector<std::vector<char>> reach(s + 1, std::vector<char>(t + 1, 0));
  reach[s][0] = 1;
  for (std::size_t k = s; k-- > 0;) {
    const long g = gens[k] > t ? t + 1 : gens[k].get_si();
    for (long x = 0; x <= t; ++x) {
      reach[k][x] = reach[k + 1][x] || (x >= g && reach[k][x - g]);
    }
  }
  if (!reach[0][t]) return std::nullopt;
  std::vector<Integer> rep(s, 0);
  long rem = t;
  for (std::size_t k = 0; k < s; ++k) {
    const long g = gens[k] > t ? t + 1 : gens[k].get_si();
    long n = 0;
    while (!reach[k + 1][rem - n * g]) ++n;
    rep[k] = n;
    rem -= n * g;
  }
  return rep;
}

SpliceReport validate(const SpliceDiagram& d) {
  SpliceReport report;
  for (std::size_t u = 0; u < d.node_count(); ++u) {
    const Vertex vu = Vertex::node(u);
    CoprimeCheck cc{u, true, {}};
    const auto& nbrs = d.neighbors(vu);
    for (std::size_t a = 0; a < nbrs.size() && cc.passed; ++a) {
      const Integer& wa = d.weight(u, nbrs[a]);
      if (wa < 2) {
        cc.passed = false;
        cc.detail = "weight toward " + d.vertex_name(nbrs[a]) + " is " + wa.get_str();
        break;
      }
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        const Integer& wb = d.weight(u, nbrs[b]);
        Integer g = gcd(wa, wb);
        if (g != 1) {
          cc.passed = false;
          cc.detail = "gcd(" + wa.get_str() + "," + wb.get_str() + ") = " + g.get_str();
          break;
        }
      }
    }
    report.coprime.push_back(std::move(cc));

    const Integer du = node_degree(d, u);
    for (const auto& x : nbrs) {
      if (x.is_node() && u < x.index) {
        EdgeDeterminantCheck ec{u, x.index, du, node_degree(d, x.index), linking_number(d, u, x), false};
        ec.passed = ec.du * ec.dv > ec.luv * ec.luv;
        report.edge_determinant.push_back(std::move(ec));
      }
      SemigroupCheck sc{u, x, du, d.leaves_beyond(u, x), {}, std::nullopt, false};
      for (std::size_t i : sc.leaves) sc.generators.push_back(linking_number(d, u, Vertex::leaf(i)));
      sc.representation = semigroup_representation(du, sc.generators);
      sc.passed = sc.representation.has_value();
      report.semigroup.push_back(std::move(sc));
    }
  }
  return report;
}

LatticeVector admissible_monomial(const SpliceDiagram& d, std::size_t u, const Vertex& toward) {
  require(u < d.node_count(), Errc::not_a_node, "admissible monomial needs a node");
  const auto leaves = d.leaves_beyond(u, toward);
  std::vector<Integer> gens;
  for (std::size_t i : leaves) gens.push_back(linking_number(d, u, Vertex::leaf(i)));
  auto rep = semigroup_representation(node_degree(d, u), gens);
  require(rep.has_value(), Errc::no_representation,
          "d_" + d.node_names()[u] + " is not in the semigroup of the leaves beyond " +
              d.vertex_name(toward));
  std::vector<Integer> exp(d.leaf_count(), 0);
  for (std::size_t k = 0; k < leaves.size(); ++k) exp[leaves[k]] = (*rep)[k];
  return LatticeVector(std::move(exp), Lattice::M);
}

RatMatrix vandermonde_coefficients(std::size_t valency) {
  require(valency >= 3, Errc::invalid_input, "coefficient matrices need valency at least 3");
  RatMatrix m(valency - 2, std::vector<Rational>(valency));
  for (std::size_t j = 0; j < valency; ++j) {
    Rational p = 1;
    for (std::size_t i = 0; i + 2 < valency; ++i) {
      m[i][j] = p;
      p *= Rational(static_cast<long>(j + 1));
    }
  }
  return m;
}

std::vector<std::vector<std::size_t>> vanishing_maximal_minors(const RatMatrix& m) {
  std::vector<std::vector<std::size_t>> out;
  if (m.empty()) return out;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::vector<bool> pick(cols, false);
  std::fill(pick.begin(), pick.begin() + rows, true);
  do {
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < cols; ++j) {
      if (pick[j]) chosen.push_back(j);
    }
    RatMatrix sub(rows, std::vector<Rational>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < rows; ++k) sub[i][k] = m[i][chosen[k]];
    }
    if (determinant(sub) == 0) out.push_back(std::move(chosen));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

namespace {

void require_valid(const SpliceDiagram& d) {
  SpliceReport r = validate(d);
  if (!r.coprime_ok()) fail(Errc::invalid_diagram, "splice diagram fails the coprimality condition");
  if (!r.edge_determinant_ok()) {
    fail(Errc::invalid_diagram, "splice diagram fails the edge determinant condition");
  }
  if (!r.semigroup_ok()) {
    for (const auto& s : r.semigroup) {
      if (!s.passed) {
        fail(Errc::no_representation,
             "semigroup condition fails at " + d.node_names()[s.node] + " toward " +
                 d.vertex_name(s.toward));
      }
    }
  }
}

std::string columns_to_string(const std::vector<std::size_t>& cols) {
  std::string s = "{";
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(cols[k] + 1);
  }
  return s + "}";
}

}  // namespace

SpliceSystem splice_system(const SpliceDiagram& d, const SpliceOptions& options) {
  require_valid(d);
  const std::size_t n = d.leaf_count();
  for (const auto& [u, m] : options.coefficients) {
    require(u < d.node_count(), Errc::not_a_node, "coefficients given for an unknown node");
  }
  SpliceSystem sys;
  sys.variables = n;
  sys.node_matrices.resize(d.node_count());
  const Cone orthant = Cone::orthant(n);
  for (std::size_t u = 0; u < d.node_count(); ++u) {
    const auto& nbrs = d.neighbors(Vertex::node(u));
    const std::size_t r = nbrs.size();
    auto given = options.coefficients.find(u);
    RatMatrix a = given == options.coefficients.end() ? vandermonde_coefficients(r) : given->second;
    require(a.size() == r - 2 && std::all_of(a.begin(), a.end(),
                                             [&](const auto& row) { return row.size() == r; }),
            Errc::invalid_input,
            "coefficient matrix at " + d.node_names()[u] + " must be " + std::to_string(r - 2) +
                "x" + std::to_string(r));
    auto bad = vanishing_maximal_minors(a);
    require(bad.empty(), Errc::degenerate_coefficients,
            "coefficient matrix at " + d.node_names()[u] + " has a vanishing maximal minor on columns " +
                (bad.empty() ? std::string() : columns_to_string(bad.front())));

    const LatticeVector wu = weight_vector(d, u);
    const Integer du = node_degree(d, u);
    std::vector<LatticeVector> chi;
    for (const auto& x : nbrs) {
      auto over = options.monomials.find({u, x});
      if (over == options.monomials.end()) {
        chi.push_back(admissible_monomial(d, u, x));
        continue;
      }
      LatticeVector m = over->second.on(Lattice::M);
      require(m.rank() == n, Errc::rank_mismatch, "admissible monomial override has wrong rank");
      auto beyond = d.leaves_beyond(u, x);
      for (std::size_t i = 0; i < n; ++i) {
        require(m[i] >= 0, Errc::invalid_input, "admissible monomial exponents must be nonnegative");
        if (m[i] != 0) {
          require(std::binary_search(beyond.begin(), beyond.end(), i), Errc::invalid_input,
                  "admissible monomial override uses a leaf not beyond the edge");
        }
      }
      require(pairing(wu, m) == du, Errc::invalid_input,
              "admissible monomial override does not have weight d_u");
      chi.push_back(m);
    }

    for (std::size_t i = 0; i + 2 < r; ++i) {
      Series::Terms terms;
      for (std::size_t j = 0; j < r; ++j) terms[chi[j]] += a[i][j];
      auto extra = options.extra_terms.find(sys.equations.size());
      if (extra != options.extra_terms.end()) {
        for (const auto& [m, c] : extra->second) {
          require(m.rank() == n, Errc::rank_mismatch, "extra term has wrong rank");
          require(pairing(wu, m) > du, Errc::invalid_input,
                  "extra term " + m.to_string() + " does not have weight above d_u");
          terms[m.on(Lattice::M)] += c;
        }
      }
      sys.equations.emplace_back(orthant, std::move(terms));
      sys.equation_node.push_back(u);
    }
    sys.node_matrices[u] = std::move(a);
  }
  for (const auto& [idx, terms] : options.extra_terms) {
    require(idx < sys.equations.size(), Errc::invalid_input, "extra terms for a missing equation");
  }
  return sys;
}

std::vector<std::pair<Vertex, RationalVector>> embedded_diagram(const SpliceDiagram& d) {
  require_valid(d);
  const std::size_t n = d.leaf_count();
  std::vector<std::pair<Vertex, RationalVector>> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(Vertex::leaf(i), LatticeVector::unit(n, i).to_rational());
  }
  for (std::size_t u = 0; u < d.node_count(); ++u) {
    LatticeVector w = weight_vector(d, u);
    Integer sum = 0;
    for (const auto& c : w.coords()) sum += c;
    out.emplace_back(Vertex::node(u), Rational(1, 1) / Rational(sum) * w.to_rational());
  }
  return out;
}

namespace {

LatticeVector vertex_ray(const SpliceDiagram& d, const Vertex& v) {
  if (!v.is_node()) return LatticeVector::unit(d.leaf_count(), v.index);
  return primitive(weight_vector(d, v.index));
}

}  // namespace

Tropicalization splice_tropicalization(const SpliceDiagram& d) {
  SpliceSystem sys = splice_system(d);
  const std::size_t n = d.leaf_count();
  std::vector<Cone> cones;
  for (const auto& [a, b] : d.edges()) {
    cones.push_back(Cone::from_generators(n, {vertex_ray(d, a), vertex_ray(d, b)}));
  }
  Tropicalization t;
  t.ambient = Cone::orthant(n);
  t.fan = Fan::from_cones(n, cones);
  t.dim = 2;
  t.generators = std::move(sys.equations);
  t.labels = label_cones(t.ambient, t.fan, t.generators);
  return t;
}

CrosscheckReport crosscheck_tropicalization(const SpliceDiagram& d) {
  CrosscheckReport report;
  Tropicalization t;
  try {
    t = splice_tropicalization(d);
  } catch (const Error& e) {
    report.precondition_failure = e.what();
    return report;
  }
  report.passed = true;
  for (const auto& c : t.fan.maximal_cones()) {
    CrosscheckEntry entry{c, c.interior_witness(), {}, true};
    for (const auto& g : t.generators) {
      entry.initial_forms.push_back(initial_form(g, entry.witness));
      if (entry.initial_forms.back().size() < 2) entry.passed = false;
    }
    report.passed = report.passed && entry.passed;
    report.entries.push_back(std::move(entry));
  }
  if (d.node_count() == 1) {
    bool eq = same_support(t.fan, troploc_divisor(t.generators.front()).fan);
    report.divisor_support_equal = eq;
    report.passed = report.passed && eq;
  }
  return report;
}

}  // namespace troploc
