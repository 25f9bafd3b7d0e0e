#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "generators.hpp"
#include "oracles.hpp"
#include "troploc/error.hpp"
#include "troploc/splice.hpp"

using namespace troploc;

namespace {

using L = Vertex;

SpliceDiagram two_node() {
  return SpliceDiagram::make(4, {"u", "v"},
                             {{L::leaf(0), L::node(0)}, {L::leaf(1), L::node(0)}, {L::node(0), L::node(1)},
                              {L::node(1), L::leaf(2)}, {L::node(1), L::leaf(3)}},
                             {{0, L::leaf(0), 2}, {0, L::leaf(1), 3}, {0, L::node(1), 7},
                              {1, L::leaf(2), 5}, {1, L::leaf(3), 2}, {1, L::node(0), 11}});
}

SpliceDiagram one_node(const std::vector<long>& w) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<SpliceWeight> weights;
  for (std::size_t i = 0; i < w.size(); ++i) {
    edges.emplace_back(L::leaf(i), L::node(0));
    weights.push_back({0, L::leaf(i), w[i]});
  }
  return SpliceDiagram::make(w.size(), {"u"}, edges, weights);
}

// Two nodes joined by an edge, two leaves each.
SpliceDiagram two_nodes(long a, long b, long c, long d, long e, long f) {
  return SpliceDiagram::make(4, {"u", "v"},
                             {{L::leaf(0), L::node(0)}, {L::leaf(1), L::node(0)}, {L::node(0), L::node(1)},
                              {L::node(1), L::leaf(2)}, {L::node(1), L::leaf(3)}},
                             {{0, L::leaf(0), a}, {0, L::leaf(1), b}, {0, L::node(1), c},
                              {1, L::leaf(2), d}, {1, L::leaf(3), e}, {1, L::node(0), f}});
}

Series poly4(const std::vector<std::pair<std::vector<long>, Rational>>& terms) {
  return Series::over_orthant(4, terms);
}

// Independent plain-integer description of a diagram for oracle computations:
// vertices 0..leaves-1 are leaves, then nodes; weight[{u, x}] on node u toward x.
struct Tree {
  std::size_t leaves = 0, nodes = 0;
  std::vector<std::vector<std::size_t>> adj;
  std::map<std::pair<std::size_t, std::size_t>, long> weight;

  std::vector<std::size_t> path(std::size_t a, std::size_t b) const {
    std::vector<long> prev(adj.size(), -1);
    std::vector<std::size_t> queue{a};
    prev[a] = static_cast<long>(a);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (std::size_t y : adj[queue[k]]) {
        if (prev[y] < 0) {
          prev[y] = static_cast<long>(queue[k]);
          queue.push_back(y);
        }
      }
    }
    std::vector<std::size_t> out{b};
    while (out.back() != a) out.push_back(static_cast<std::size_t>(prev[out.back()]));
    std::reverse(out.begin(), out.end());
    return out;
  }

  // Product of weights at nodes of the path on edges leaving the path.
  long linking(std::size_t u, std::size_t p) const {
    const auto pth = path(u, p);
    long prod = 1;
    for (std::size_t k = 0; k < pth.size(); ++k) {
      const std::size_t x = pth[k];
      if (x < leaves) continue;
      for (std::size_t y : adj[x]) {
        const bool on = (k > 0 && pth[k - 1] == y) || (k + 1 < pth.size() && pth[k + 1] == y);
        if (!on) prod *= weight.at({x, y});
      }
    }
    return prod;
  }

  SpliceDiagram build() const {
    auto vx = [&](std::size_t s) { return s < leaves ? L::leaf(s) : L::node(s - leaves); };
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t s = 0; s < adj.size(); ++s) {
      for (std::size_t y : adj[s]) {
        if (s < y) edges.emplace_back(vx(s), vx(y));
      }
    }
    std::vector<SpliceWeight> ws;
    for (const auto& [k, w] : weight) ws.push_back({k.first - leaves, vx(k.second), w});
    std::vector<std::string> names;
    for (std::size_t u = 0; u < nodes; ++u) names.push_back("n" + std::to_string(u));
    return SpliceDiagram::make(leaves, names, edges, ws);
  }
};

// A chain of 1..3 nodes; end nodes carry at least two leaves, inner nodes at least one.
Tree random_tree(gen::Engine& rng) {
  Tree t;
  t.nodes = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
  std::vector<std::size_t> leaf_count(t.nodes);
  for (std::size_t u = 0; u < t.nodes; ++u) {
    long need = 3 - (u > 0 ? 1 : 0) - (u + 1 < t.nodes ? 1 : 0);
    leaf_count[u] = static_cast<std::size_t>(need + gen::uniform(rng, 0, 1));
    t.leaves += leaf_count[u];
  }
  t.adj.resize(t.leaves + t.nodes);
  auto link = [&](std::size_t a, std::size_t b) {
    t.adj[a].push_back(b);
    t.adj[b].push_back(a);
  };
  std::size_t next = 0;
  for (std::size_t u = 0; u < t.nodes; ++u) {
    for (std::size_t k = 0; k < leaf_count[u]; ++k) link(next++, t.leaves + u);
    if (u + 1 < t.nodes) link(t.leaves + u, t.leaves + u + 1);
  }
  for (std::size_t u = 0; u < t.nodes; ++u) {
    for (std::size_t y : t.adj[t.leaves + u]) t.weight[{t.leaves + u, y}] = gen::uniform(rng, 2, 13);
  }
  return t;
}

}  // namespace

TEST(Linking, TwoNode) {
  const SpliceDiagram d = two_node();
  EXPECT_EQ(node_degree(d, 0), 42);
  EXPECT_EQ(node_degree(d, 1), 110);
  EXPECT_EQ(linking_number(d, 0, L::node(1)), 60);
  EXPECT_EQ(linking_number(d, 1, L::node(0)), 60);
  EXPECT_EQ(linking_number(d, 0, L::leaf(2)), 12);
  EXPECT_EQ(linking_number(d, 0, L::node(0)), 42);
  EXPECT_EQ(weight_vector(d, 0), (LatticeVector{21, 14, 12, 30}));
  EXPECT_EQ(weight_vector(d, 1), (LatticeVector{30, 20, 22, 55}));
  EXPECT_THROW(linking_number(d, 2, L::leaf(0)), Error);
}

TEST(Linking, PhamBrieskorn) {
  const SpliceDiagram d = one_node({2, 3, 7});
  EXPECT_EQ(node_degree(d, 0), 42);
  EXPECT_EQ(weight_vector(d, 0), (LatticeVector{21, 14, 6}));
}

TEST(Diagram, StructuralErrors) {
  auto code_of = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal;
  };
  // valency-2 node
  EXPECT_EQ(code_of([] { one_node({2, 3}); }), Errc::invalid_diagram);
  // missing weight
  EXPECT_EQ(code_of([] {
              SpliceDiagram::make(3, {"u"},
                                  {{L::leaf(0), L::node(0)}, {L::leaf(1), L::node(0)}, {L::leaf(2), L::node(0)}},
                                  {{0, L::leaf(0), 2}, {0, L::leaf(1), 3}});
            }),
            Errc::invalid_diagram);
  // cycle
  EXPECT_EQ(code_of([] {
              SpliceDiagram::make(2, {"u", "v"},
                                  {{L::leaf(0), L::node(0)}, {L::node(0), L::node(1)}, {L::node(0), L::node(1)},
                                   {L::leaf(1), L::node(1)}},
                                  {});
            }),
            Errc::invalid_diagram);
  EXPECT_EQ(code_of([] { one_node({2, 0, 5}); }), Errc::invalid_diagram);
}

TEST(Validate, TwoNodePasses) {
  const SpliceReport r = validate(two_node());
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.edge_determinant.size(), 1u);
  EXPECT_EQ(r.edge_determinant[0].du * r.edge_determinant[0].dv, 4620);
  EXPECT_EQ(r.edge_determinant[0].luv, 60);
  ASSERT_EQ(r.semigroup.size(), 6u);
  for (const auto& s : r.semigroup) EXPECT_TRUE(s.representation.has_value());
}

TEST(Validate, CoprimeFailure) {
  const SpliceReport r = validate(one_node({2, 4, 5}));
  EXPECT_FALSE(r.coprime_ok());
  EXPECT_FALSE(r.passed());
  try {
    splice_system(one_node({2, 4, 5}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_diagram);
  }
}

TEST(Validate, EdgeDeterminantFailure) {
  // d_u = 30, d_v = 30, l = 36.
  const SpliceReport r = validate(two_nodes(2, 3, 5, 2, 3, 5));
  EXPECT_TRUE(r.coprime_ok());
  EXPECT_FALSE(r.edge_determinant_ok());
}

TEST(Validate, SemigroupFailure) {
  // d_u = 66, d_v = 220, l = 120, and 66 is not in <30, 24>.
  const SpliceDiagram d = two_nodes(2, 3, 11, 4, 5, 11);
  const SpliceReport r = validate(d);
  EXPECT_TRUE(r.coprime_ok());
  EXPECT_TRUE(r.edge_determinant_ok());
  EXPECT_FALSE(r.semigroup_ok());
  EXPECT_FALSE(oracle::in_semigroup(66, {30, 24}));
  try {
    splice_system(d);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_representation);
  }
  EXPECT_FALSE(crosscheck_tropicalization(d).precondition_failure.empty());
}

TEST(Semigroup, Representation) {
  EXPECT_EQ(semigroup_representation(110, {30, 20}), (std::vector<Integer>{1, 4}));
  EXPECT_EQ(semigroup_representation(0, {3, 5}), (std::vector<Integer>{0, 0}));
  EXPECT_FALSE(semigroup_representation(7, {3, 5}).has_value());
  EXPECT_EQ(semigroup_representation(8, {3, 5}), (std::vector<Integer>{1, 1}));
}

TEST(Semigroup, MatchesBruteForce) {
  for (long a = 1; a <= 9; ++a) {
    for (long b = a; b <= 9; ++b) {
      for (long target = 0; target <= 40; ++target) {
        auto rep = semigroup_representation(target, {a, b});
        ASSERT_EQ(rep.has_value(), oracle::in_semigroup(target, {a, b})) << a << ' ' << b << ' ' << target;
        if (rep) EXPECT_EQ((*rep)[0] * a + (*rep)[1] * b, target);
      }
    }
  }
}

TEST(Admissible, TwoNode) {
  const SpliceDiagram d = two_node();
  EXPECT_EQ(admissible_monomial(d, 0, L::leaf(0)), (LatticeVector{2, 0, 0, 0}));
  EXPECT_EQ(admissible_monomial(d, 0, L::leaf(1)), (LatticeVector{0, 3, 0, 0}));
  EXPECT_EQ(admissible_monomial(d, 0, L::node(1)), (LatticeVector{0, 0, 1, 1}));
  EXPECT_EQ(admissible_monomial(d, 1, L::node(0)), (LatticeVector{1, 4, 0, 0}));
  EXPECT_EQ(admissible_monomial(d, 1, L::leaf(3)), (LatticeVector{0, 0, 0, 2}));
}

TEST(System, TwoNodeDefaultCoefficients) {
  const SpliceSystem s = splice_system(two_node());
  EXPECT_EQ(s.variables, 4u);
  ASSERT_EQ(s.equations.size(), 2u);
  EXPECT_EQ(s.equations[0], poly4({{{2, 0, 0, 0}, 1}, {{0, 3, 0, 0}, 1}, {{0, 0, 1, 1}, 1}}));
  EXPECT_EQ(s.equations[1], poly4({{{0, 0, 5, 0}, 1}, {{0, 0, 0, 2}, 1}, {{1, 4, 0, 0}, 1}}));
  EXPECT_EQ(s.equation_node, (std::vector<std::size_t>{0, 1}));
}

TEST(System, TwoNodeGivenCoefficients) {
  SpliceOptions opt;
  opt.coefficients[0] = {{1, -1, 1}};
  opt.coefficients[1] = {{1, -1, 1}};
  const SpliceSystem s = splice_system(two_node(), opt);
  EXPECT_EQ(s.equations[0], poly4({{{2, 0, 0, 0}, 1}, {{0, 3, 0, 0}, -1}, {{0, 0, 1, 1}, 1}}));
  EXPECT_EQ(s.equations[1], poly4({{{0, 0, 5, 0}, 1}, {{0, 0, 0, 2}, -1}, {{1, 4, 0, 0}, 1}}));
  opt.coefficients[0] = {{1, 0, 1}};
  try {
    splice_system(two_node(), opt);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degenerate_coefficients);
  }
}

TEST(System, OneNodeIsPhamBrieskorn) {
  const SpliceSystem s = splice_system(one_node({2, 3, 5}));
  ASSERT_EQ(s.equations.size(), 1u);
  EXPECT_EQ(s.equations[0], Series::over_orthant(3, {{{2, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 5}, 1}}));
}

TEST(System, ValencyFourGivesTwoEquations) {
  const SpliceSystem s = splice_system(one_node({2, 3, 5, 7}));
  ASSERT_EQ(s.equations.size(), 2u);
  EXPECT_EQ(s.equations[1],
            Series::over_orthant(4, {{{2, 0, 0, 0}, 1}, {{0, 3, 0, 0}, 2}, {{0, 0, 5, 0}, 3}, {{0, 0, 0, 7}, 4}}));
}

TEST(System, ExtraTermsMustBeAboveDegree) {
  SpliceOptions low;
  low.extra_terms[0] = {{LatticeVector{1, 0, 0, 0}, Rational(5)}};
  EXPECT_THROW(splice_system(two_node(), low), Error);
  SpliceOptions ok;
  ok.extra_terms[0] = {{LatticeVector{1, 1, 1, 1}, Rational(5)}};
  EXPECT_EQ(splice_system(two_node(), ok).equations[0].size(), 4u);
}

TEST(Vandermonde, Shape) {
  EXPECT_EQ(vandermonde_coefficients(3), (RatMatrix{{1, 1, 1}}));
  EXPECT_EQ(vandermonde_coefficients(4), (RatMatrix{{1, 1, 1, 1}, {1, 2, 3, 4}}));
  EXPECT_THROW(vandermonde_coefficients(2), Error);
}

TEST(Vandermonde, VanishingMinors) {
  EXPECT_TRUE(vanishing_maximal_minors(vandermonde_coefficients(4)).empty());
  EXPECT_EQ(vanishing_maximal_minors(RatMatrix{{1, 0, 1}}), (std::vector<std::vector<std::size_t>>{{1}}));
  const auto bad = vanishing_maximal_minors(RatMatrix{{1, 1, 1, 1}, {1, 1, 3, 4}});
  EXPECT_EQ(bad, (std::vector<std::vector<std::size_t>>{{0, 1}}));
}

TEST(Embedded, TwoNode) {
  const auto e = embedded_diagram(two_node());
  ASSERT_EQ(e.size(), 6u);
  EXPECT_EQ(e[0].second, (RationalVector{1, 0, 0, 0}));
  EXPECT_EQ(e[4].first, L::node(0));
  EXPECT_EQ(e[4].second, (RationalVector{Rational(21, 77), Rational(14, 77), Rational(12, 77), Rational(30, 77)}));
  EXPECT_EQ(e[5].second, (RationalVector{Rational(30, 127), Rational(20, 127), Rational(22, 127), Rational(55, 127)}));
}

TEST(SpliceTrop, TwoNode) {
  const Tropicalization t = splice_tropicalization(two_node());
  EXPECT_EQ(t.fan.maximal_cones().size(), 5u);
  EXPECT_EQ(t.fan.rays().size(), 6u);
  EXPECT_EQ(t.dim, 2u);
  EXPECT_TRUE(validate_fan(t.fan).valid);
  EXPECT_TRUE(check_structure(t, 2).passed);
}

TEST(Crosscheck, TwoNode) {
  const CrosscheckReport r = crosscheck_tropicalization(two_node());
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.entries.size(), 5u);
  EXPECT_FALSE(r.divisor_support_equal.has_value());
  for (const auto& e : r.entries) {
    for (const auto& f : e.initial_forms) EXPECT_GE(f.size(), 2u);
  }
}

TEST(Crosscheck, OneNodeMatchesDivisor) {
  const CrosscheckReport r = crosscheck_tropicalization(one_node({2, 3, 7}));
  EXPECT_TRUE(r.passed);
  ASSERT_TRUE(r.divisor_support_equal.has_value());
  EXPECT_TRUE(*r.divisor_support_equal);
}

TEST(SpliceProperty, LinkingMatchesOracleAndIsSymmetric) {
  gen::Engine rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = random_tree(rng);
    const SpliceDiagram d = t.build();
    for (std::size_t u = 0; u < t.nodes; ++u) {
      for (std::size_t i = 0; i < t.leaves; ++i) {
        const Integer l = linking_number(d, u, L::leaf(i));
        EXPECT_EQ(l, t.linking(t.leaves + u, i));
        EXPECT_GT(l, 0);
      }
      for (std::size_t v = 0; v < t.nodes; ++v) {
        EXPECT_EQ(linking_number(d, u, L::node(v)), linking_number(d, v, L::node(u)));
        EXPECT_EQ(linking_number(d, u, L::node(v)), t.linking(t.leaves + u, t.leaves + v));
      }
    }
  }
}

TEST(SpliceProperty, SystemShapeAndAdmissibleDegrees) {
  gen::Engine rng(62);
  int generated = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Tree t = random_tree(rng);
    const SpliceDiagram d = t.build();
    if (!validate(d).passed()) continue;
    ++generated;
    const SpliceSystem s = splice_system(d);
    EXPECT_EQ(s.equations.size(), t.leaves - 2);
    for (std::size_t u = 0; u < t.nodes; ++u) {
      const LatticeVector w = weight_vector(d, u);
      for (const auto& x : d.neighbors(L::node(u))) {
        EXPECT_EQ(pairing(w, admissible_monomial(d, u, x)), node_degree(d, u));
      }
    }
    for (std::size_t k = 0; k < s.equations.size(); ++k) {
      const LatticeVector w = weight_vector(d, s.equation_node[k]);
      for (const auto& [m, c] : s.equations[k].terms()) EXPECT_EQ(pairing(w, m), node_degree(d, s.equation_node[k]));
    }
  }
  EXPECT_GT(generated, 20);
}

TEST(SpliceProperty, VandermondeMinorsNonzeroUpToEight) {
  for (std::size_t r = 3; r <= 8; ++r) {
    const RatMatrix m = vandermonde_coefficients(r);
    EXPECT_TRUE(vanishing_maximal_minors(m).empty()) << r;
    // Oracle: every maximal minor by cofactor expansion.
    const std::size_t k = r - 2;
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    for (;;) {
      std::vector<std::vector<mpq_class>> sub(k, std::vector<mpq_class>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][cols[j]];
      }
      EXPECT_NE(oracle::determinant(sub), 0);
      std::size_t i = k;
      while (i > 0 && cols[i - 1] == r - k + i - 1) --i;
      if (i == 0) break;
      ++cols[i - 1];
      for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
  }
}
