#pragma once

// Hypergraphs and their combinatorial invariants: components, proper
// connectivity, pivot classes, incidence matrices, odd cycles, free nodes.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genmult/exact_linalg.hpp"
#include "genmult/polyhedra.hpp"

namespace genmult {

using NodeSet = std::vector<std::size_t>;

/// Node-labelled hypergraph. Edges are sorted, nonempty, pairwise distinct
/// node-index sets; the node order is declaration order followed by order
/// of first appearance in the edge list.
class Hypergraph {
 public:
  /// Throws InputError for empty edges, repeated nodes inside an edge,
  /// duplicate edges, duplicate declared labels or an empty node universe.
  Hypergraph(std::vector<std::string> declared_nodes,
             const std::vector<std::vector<std::string>>& edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<NodeSet>& edges() const noexcept { return edges_; }
  const std::string& label(std::size_t node) const { return labels_.at(node); }

  /// Throws InputError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  /// Common edge size, or nullopt when edges differ in size or there are none.
  std::optional<std::size_t> uniformity() const;

  std::size_t degree(std::size_t node) const;

  /// Sub-hypergraph on the given nodes keeping the listed edges (which must
  /// lie inside the node set). Labels are preserved.
  Hypergraph subhypergraph(const NodeSet& nodes, const std::vector<std::size_t>& edge_indices) const;

  /// Induced by a node set: all edges contained in it.
  Hypergraph induced(const NodeSet& nodes) const;

  std::vector<std::string> labels_of(const NodeSet& nodes) const;

 private:
  std::vector<std::string> labels_;
  std::vector<NodeSet> edges_;
};

/// JSON document {"nodes": [...]?, "edges": [[...], ...]}.
Hypergraph parse_hypergraph_json(std::string_view document);

/// One edge per line, whitespace-separated labels; '#' lines ignored.
Hypergraph parse_hypergraph_text(std::string_view document);

/// JSON when the first non-blank character is '{', plain text otherwise.
Hypergraph parse_hypergraph(std::string_view document);

/// Union-find over edges; isolated nodes are singleton components. Each
/// component lists its nodes in increasing order; components are ordered by
/// their smallest node.
std::vector<NodeSet> connected_components(const Hypergraph& g);

/// Connectivity of the graph on the component's edges where two edges are
/// adjacent when they share m - 1 nodes. A component without edges is not
/// properly connected. Throws InputError when the component is not uniform.
bool is_properly_connected(const Hypergraph& g, const NodeSet& component);

/// Transitive closure of: x ~ y whenever edges e, f have e \ f = {x} and
/// f \ e = {y}. Same ordering conventions as connected_components.
std::vector<NodeSet> pivot_classes(const Hypergraph& g);

/// e x n 0/1 matrix, one row per edge.
IntMatrix incidence_matrix(const Hypergraph& g);

struct BipartiteSummary {
  std::size_t c0 = 0;                     // number of 2-colourable components
  std::vector<bool> has_odd_cycle;        // per component, in component order
};

/// Two-colouring per component. Throws InputError unless 2-uniform.
BipartiteSummary bipartite_components(const Hypergraph& g);

/// Maximum number of node-disjoint odd cycles, or nullopt when the node
/// count exceeds `node_cap`. Throws InputError unless 2-uniform.
std::optional<std::size_t> odd_tulgeity(const Hypergraph& g, std::size_t node_cap = 14);

/// Nodes of degree 1.
NodeSet free_nodes(const Hypergraph& g);

/// Deletes the node and every edge containing it; other nodes are kept even
/// if they become isolated. Throws InputError for an unknown label.
Hypergraph remove_node(const Hypergraph& g, std::string_view label);

struct BicyclicShape {
  int type = 1;          // 1: cycles joined by a path (possibly of length 0); 2: theta
  std::size_t l1 = 0;    // cycle lengths; odd ones first
  std::size_t l2 = 0;
  std::size_t l3 = 0;    // joining path (type 1) or shared path (type 2)
  std::optional<std::size_t> walk_half_length;  // none when both cycles even
};

/// Shape of a connected simple graph with e = n + 1. Throws InputError
/// otherwise.
BicyclicShape classify_bicyclic(const Hypergraph& g);

struct EdgeIdeal {
  MonomialIdeal ideal;
  bool reduced = false;  // some edge monomials were not minimal
};

/// 0/1 exponent vector per edge. Throws InputError for an edgeless graph.
EdgeIdeal edge_ideal(const Hypergraph& g);

struct CombinatorialProfile {
  std::size_t n = 0;
  std::size_t e = 0;
  std::optional<std::size_t> m;
  std::vector<NodeSet> components;
  std::size_t c = 0;
  std::optional<std::size_t> c0;               // 2-uniform only
  std::vector<NodeSet> pivot_classes;
  std::size_t p = 0;
  std::vector<bool> properly_connected;        // per component (uniform only)
  NodeSet free_nodes;
  NodeSet isolated_nodes;
  std::optional<std::size_t> tulgeity_odd;
  bool tulgeity_requested = false;
  /// Uniform, no isolated nodes, every component properly connected: the
  /// setting in which the pivot-class formulas apply.
  bool pivot_hypotheses = false;
  std::string pivot_hypotheses_reason;
};

CombinatorialProfile profile(const Hypergraph& g, bool compute_tulgeity = false,
                             std::size_t tulgeity_cap = 14);

// Named families. Nodes are labelled prefix + 1, prefix + 2, ...

Hypergraph cycle_graph(std::size_t n, const std::string& prefix = "x");
Hypergraph path_graph(std::size_t edges, const std::string& prefix = "x");
Hypergraph complete_uniform(std::size_t m, std::size_t n, const std::string& prefix = "x");
Hypergraph complete_multipartite(const std::vector<std::size_t>& parts, const std::string& prefix = "x");

/// Nodes and edges of both; throws InputError if labels collide.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

/// Edges of both, identifying equal labels.
Hypergraph glue(const Hypergraph& a, const Hypergraph& b);

}  // namespace genmult
