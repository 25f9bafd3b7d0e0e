#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "troploc/lattice.hpp"
#include "troploc/series.hpp"
#include "troploc/tropicalization.hpp"

namespace troploc {

/// A vertex of a splice diagram: leaf i (0-based, leaf i+1 in the usual
/// numbering) or node i (index into the node list).
struct Vertex {
  enum class Kind { leaf, node };
  Kind kind = Kind::leaf;
  std::size_t index = 0;

  static Vertex leaf(std::size_t i) { return {Kind::leaf, i}; }
  static Vertex node(std::size_t i) { return {Kind::node, i}; }
  bool is_node() const { return kind == Kind::node; }

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct SpliceWeight {
  std::size_t node;
  Vertex toward;  // the other end of the weighted edge
  Integer value;
};

/// A weighted tree whose vertices have valency 1 (leaves) or at least 3
/// (nodes), with a positive integer on every (node, incident edge) pair.
///
/// Neighbours of a vertex are ordered leaves first (in leaf order), then
/// nodes in declaration order; this order indexes the edges at a node
/// everywhere below, including coefficient matrix columns.
class SpliceDiagram {
 public:
  /// Checks the structural invariants; throws Errc::invalid_diagram.
  static SpliceDiagram make(std::size_t leaves, std::vector<std::string> node_names,
                            const std::vector<std::pair<Vertex, Vertex>>& edges,
                            const std::vector<SpliceWeight>& weights);

  std::size_t leaf_count() const { return leaves_; }
  std::size_t node_count() const { return names_.size(); }
  const std::vector<std::string>& node_names() const { return names_; }
  std::optional<std::size_t> node_index(const std::string& name) const;
  std::string vertex_name(const Vertex& v) const;

  const std::vector<Vertex>& neighbors(const Vertex& v) const;
  /// Edges as (smaller, larger) vertex pairs, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  const Integer& weight(std::size_t node, const Vertex& toward) const;

  /// Vertices on the path from a to b, both ends included.
  std::vector<Vertex> path(const Vertex& a, const Vertex& b) const;
  /// Leaves in the component of the tree minus the edge (node, toward) that
  /// contains `toward`, sorted.
  std::vector<std::size_t> leaves_beyond(std::size_t node, const Vertex& toward) const;

 private:
  std::size_t slot(const Vertex& v) const;

  std::size_t leaves_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Vertex>> adjacency_;  // leaves first, then nodes
  std::vector<std::map<Vertex, Integer>> weights_;
};

/// Product of the weights adjacent to, but not on, the path from node u to p.
/// For p = u this is the product of all weights at u.
Integer linking_number(const SpliceDiagram& d, std::size_t u, const Vertex& p);
Integer node_degree(const SpliceDiagram& d, std::size_t u);

/// Linking numbers of u with the leaves, in leaf order.
LatticeVector weight_vector(const SpliceDiagram& d, std::size_t u);

struct CoprimeCheck {
  std::size_t node;
  bool passed;
  std::string detail;  // empty when passed
};

struct EdgeDeterminantCheck {
  std::size_t u, v;
  Integer du, dv, luv;  // passes when du * dv > luv^2
  bool passed;
};

struct SemigroupCheck {
  std::size_t node;
  Vertex toward;
  Integer du;
  std::vector<std::size_t> leaves;
  std::vector<Integer> generators;  // linking numbers of the node with those leaves
  std::optional<std::vector<Integer>> representation;
  bool passed;
};

struct SpliceReport {
  std::vector<CoprimeCheck> coprime;
  std::vector<EdgeDeterminantCheck> edge_determinant;
  std::vector<SemigroupCheck> semigroup;

  bool coprime_ok() const;
  bool edge_determinant_ok() const;
  bool semigroup_ok() const;
  bool passed() const { return coprime_ok() && edge_determinant_ok() && semigroup_ok(); }
};

SpliceReport validate(const SpliceDiagram& d);

/// Lexicographically smallest nonnegative (n_1..n_s) over the leaves beyond
/// the edge with sum n_k * l(u, i_k) = d_u, or nullopt.
std::optional<std::vector<Integer>> semigroup_representation(const Integer& target,
                                                             const std::vector<Integer>& gens);

/// Exponent vector of the admissible monomial for (u, edge toward `toward`).
LatticeVector admissible_monomial(const SpliceDiagram& d, std::size_t u, const Vertex& toward);

struct SpliceOptions {
  /// Coefficient matrix per node index, shape (r_u - 2) x r_u.
  std::map<std::size_t, RatMatrix> coefficients;
  /// Replacement admissible monomials keyed by (node, toward).
  std::map<std::pair<std::size_t, Vertex>, LatticeVector> monomials;
  /// Extra terms per equation (index into the output list); each must have
  /// weight above d_u for its node.
  std::map<std::size_t, std::vector<std::pair<LatticeVector, Rational>>> extra_terms;
};

struct SpliceSystem {
  std::size_t variables = 0;
  std::vector<Series> equations;
  std::vector<std::size_t> equation_node;  // node producing each equation
  std::vector<RatMatrix> node_matrices;    // indexed by node
};

/// Default coefficients: a_{u,i,j} = j^(i-1), i = 1..r-2, j = 1..r.
RatMatrix vandermonde_coefficients(std::size_t valency);

/// Column sets (0-based) of the maximal minors that vanish.
std::vector<std::vector<std::size_t>> vanishing_maximal_minors(const RatMatrix& m);

SpliceSystem splice_system(const SpliceDiagram& d, const SpliceOptions& options = {});

/// Leaves go to the unit vectors, nodes to w_u divided by its coordinate sum.
std::vector<std::pair<Vertex, RationalVector>> embedded_diagram(const SpliceDiagram& d);

/// Cone over the tree: one 2-cone per edge, spanned by the unit vectors of
/// leaves and the primitive weight vectors of nodes.
Tropicalization splice_tropicalization(const SpliceDiagram& d);

struct CrosscheckEntry {
  Cone cone;
  LatticeVector witness;
  std::vector<Series> initial_forms;
  bool passed;
};

struct CrosscheckReport {
  bool passed = false;
  std::string precondition_failure;  // set when the system cannot be generated
  std::vector<CrosscheckEntry> entries;
  /// One-node diagrams only: the divisor of the single equation has the same support.
  std::optional<bool> divisor_support_equal;
};

CrosscheckReport crosscheck_tropicalization(const SpliceDiagram& d);

}  // namespace troploc
