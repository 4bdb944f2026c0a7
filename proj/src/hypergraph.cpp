#include "genmult/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "genmult/error.hpp"

namespace genmult {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  // Classes with members sorted; classes ordered by smallest member.
  std::vector<NodeSet> classes() {
    std::map<std::size_t, NodeSet> by_root;
    for (std::size_t x = 0; x < parent_.size(); ++x) by_root[find(x)].push_back(x);
    std::vector<NodeSet> out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_graph(const Hypergraph& g, const char* what) {
  for (const auto& e : g.edges())
    if (e.size() != 2) throw InputError(std::string(what) + " needs a simple graph (2-uniform)");
}

std::vector<std::vector<std::size_t>> adjacency(const Hypergraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.node_count());
  for (const auto& e : g.edges()) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  return adj;
}

}  // namespace

// ---------------------------------------------------------------------------

Hypergraph::Hypergraph(std::vector<std::string> declared_nodes,
                       const std::vector<std::vector<std::string>>& edges) {
  std::map<std::string, std::size_t> index;
  for (auto& label : declared_nodes) {
    if (!index.emplace(label, labels_.size()).second)
      throw InputError("node '" + label + "' declared twice");
    labels_.push_back(std::move(label));
  }
  std::set<NodeSet> seen;
  for (const auto& edge : edges) {
    if (edge.empty()) throw InputError("empty edge");
    NodeSet ids;
    for (const auto& label : edge) {
      auto [it, fresh] = index.emplace(label, labels_.size());
      if (fresh) labels_.push_back(label);
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
      throw InputError("edge repeats a node");
    if (!seen.insert(ids).second) {
      std::string text;
      for (const auto& label : edge) text += (text.empty() ? "" : " ") + label;
      throw InputError("duplicate edge {" + text + "}");
    }
    edges_.push_back(std::move(ids));
  }
  if (labels_.empty()) throw InputError("hypergraph has no nodes");
}

std::size_t Hypergraph::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown node '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  const std::size_t m = edges_.front().size();
  for (const auto& e : edges_)
    if (e.size() != m) return std::nullopt;
  return m;
}

std::size_t Hypergraph::degree(std::size_t node) const {
  std::size_t d = 0;
  for (const auto& e : edges_)
    if (std::binary_search(e.begin(), e.end(), node)) ++d;
  return d;
}

std::vector<std::string> Hypergraph::labels_of(const NodeSet& nodes) const {
  std::vector<std::string> out;
  for (auto v : nodes) out.push_back(labels_.at(v));
  return out;
}

Hypergraph Hypergraph::subhypergraph(const NodeSet& nodes,
                                     const std::vector<std::size_t>& edge_indices) const {
  std::vector<std::vector<std::string>> es;
  for (auto k : edge_indices) {
    for (auto v : edges_.at(k))
      if (std::find(nodes.begin(), nodes.end(), v) == nodes.end())
        throw InputError("edge leaves the chosen node set");
    es.push_back(labels_of(edges_[k]));
  }
  return Hypergraph(labels_of(nodes), es);
}

Hypergraph Hypergraph::induced(const NodeSet& nodes) const {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < edges_.size(); ++k)
    if (std::all_of(edges_[k].begin(), edges_[k].end(), [&](std::size_t v) {
          return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
        }))
      keep.push_back(k);
  return subhypergraph(nodes, keep);
}

// ---------------------------------------------------------------------------
// Parsing

Hypergraph parse_hypergraph_json(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("hypergraph document must be a JSON object");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw InputError("hypergraph document needs an \"edges\" array");

  auto label_of = [](const nlohmann::json& x) {
    if (x.is_string()) return x.get<std::string>();
    if (x.is_number_integer()) return std::to_string(x.get<long long>());
    throw InputError("node labels must be strings");
  };
  std::vector<std::string> nodes;
  if (doc.contains("nodes")) {
    if (!doc["nodes"].is_array()) throw InputError("\"nodes\" must be an array");
    for (const auto& x : doc["nodes"]) nodes.push_back(label_of(x));
  }
  std::vector<std::vector<std::string>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array()) throw InputError("each edge must be an array of node labels");
    std::vector<std::string> edge;
    for (const auto& x : e) edge.push_back(label_of(x));
    edges.push_back(std::move(edge));
  }
  return Hypergraph(std::move(nodes), edges);
}

Hypergraph parse_hypergraph_text(std::string_view document) {
  std::vector<std::vector<std::string>> edges;
  std::istringstream in{std::string(document)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> edge;
    for (std::string w; words >> w;) edge.push_back(w);
    edges.push_back(std::move(edge));
  }
  if (edges.empty()) throw InputError("no edges in plain-text hypergraph");
  return Hypergraph({}, edges);
}

Hypergraph parse_hypergraph(std::string_view document) {
  const auto first = document.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && document[first] == '{')
    return parse_hypergraph_json(document);
  return parse_hypergraph_text(document);
}

// ---------------------------------------------------------------------------
// Structure

std::vector<NodeSet> connected_components(const Hypergraph& g) {
  UnionFind uf(g.node_count());
  for (const auto& e : g.edges())
    for (std::size_t i = 1; i < e.size(); ++i) uf.unite(e[0], e[i]);
  return uf.classes();
}

bool is_properly_connected(const Hypergraph& g, const NodeSet& component) {
  std::vector<std::size_t> es;
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    if (std::binary_search(component.begin(), component.end(), g.edges()[k].front())) es.push_back(k);
  if (es.empty()) return false;
  const std::size_t m = g.edges()[es.front()].size();
  for (auto k : es)
    if (g.edges()[k].size() != m) throw InputError("proper connectivity needs a uniform component");

  UnionFind uf(es.size());
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      const auto& e = g.edges()[es[a]];
      const auto& f = g.edges()[es[b]];
      NodeSet common;
      std::set_intersection(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(common));
      if (common.size() + 1 == m) uf.unite(a, b);
    }
  for (std::size_t a = 1; a < es.size(); ++a)
    if (uf.find(a) != uf.find(0)) return false;
  return true;
}

std::vector<NodeSet> pivot_classes(const Hypergraph& g) {
  UnionFind uf(g.node_count());
  const auto& es = g.edges();
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      NodeSet only_a, only_b;
      std::set_difference(es[a].begin(), es[a].end(), es[b].begin(), es[b].end(),
                          std::back_inserter(only_a));
      std::set_difference(es[b].begin(), es[b].end(), es[a].begin(), es[a].end(),
                          std::back_inserter(only_b));
      if (only_a.size() == 1 && only_b.size() == 1) uf.unite(only_a[0], only_b[0]);
    }
  return uf.classes();
}

IntMatrix incidence_matrix(const Hypergraph& g) {
  IntMatrix m(g.edge_count(), g.node_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    for (auto v : g.edges()[k]) m(k, v) = 1;
  return m;
}

BipartiteSummary bipartite_components(const Hypergraph& g) {
  require_graph(g, "bipartite_components");
  const auto adj = adjacency(g);
  BipartiteSummary out;
  std::vector<int> colour(g.node_count(), -1);
  for (const auto& comp : connected_components(g)) {
    bool odd = false;
    std::vector<std::size_t> stack{comp.front()};
    colour[comp.front()] = 0;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          odd = true;
        }
      }
    }
    out.has_odd_cycle.push_back(odd);
    if (!odd) ++out.c0;
  }
  return out;
}

// Any odd cycle with a chord splits into a shorter odd cycle on a subset of
// its nodes, so packing chordless odd cycles gives the same maximum. Those
// are the node sets inducing a connected 2-regular graph of odd size.
std::optional<std::size_t> odd_tulgeity(const Hypergraph& g, std::size_t node_cap) {
  require_graph(g, "odd_tulgeity");
  const std::size_t n = g.node_count();
  if (n > node_cap || n > 30) return std::nullopt;

  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& e : g.edges()) {
    nbr[e[0]] |= 1u << e[1];
    nbr[e[1]] |= 1u << e[0];
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

  auto is_odd_hole = [&](std::uint32_t s) {
    const int size = std::popcount(s);
    if (size < 3 || size % 2 == 0) return false;
    for (std::uint32_t r = s; r; r &= r - 1)
      if (std::popcount(nbr[std::countr_zero(r)] & s) != 2) return false;
    // 2-regular: connected iff a walk from one node reaches all of them.
    std::uint32_t seen = s & (~s + 1), grow = seen;
    while (grow) {
      std::uint32_t next = 0;
      for (std::uint32_t r = grow; r; r &= r - 1) next |= nbr[std::countr_zero(r)] & s;
      grow = next & ~seen;
      seen |= next;
    }
    return seen == s;
  };

  // Cycles grouped by their lowest node.
  std::vector<std::vector<std::uint32_t>> by_low(n);
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    if (is_odd_hole(s)) by_low[std::countr_zero(s)].push_back(s);
    if (s == full) break;
  }

  std::map<std::uint32_t, std::size_t> memo;
  auto best = [&](auto&& self, std::uint32_t s) -> std::size_t {
    if (s == 0) return 0;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    std::size_t value = self(self, s & ~(1u << low));
    for (auto c : by_low[low])
      if ((c & s) == c) value = std::max(value, 1 + self(self, s & ~c));
    memo.emplace(s, value);
    return value;
  };
  return best(best, full);
}

NodeSet free_nodes(const Hypergraph& g) {
  NodeSet out;
  for (std::size_t v = 0; v < g.node_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

Hypergraph remove_node(const Hypergraph& g, std::string_view label) {
  const std::size_t x = g.index_of(label);
  if (g.node_count() == 1) throw InputError("cannot remove the only node");
  NodeSet nodes;
  for (std::size_t v = 0; v < g.node_count(); ++v)
    if (v != x) nodes.push_back(v);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    if (!std::binary_search(g.edges()[k].begin(), g.edges()[k].end(), x)) keep.push_back(k);
  return g.subhypergraph(nodes, keep);
}

// ---------------------------------------------------------------------------
// Bicyclic graphs

BicyclicShape classify_bicyclic(const Hypergraph& g) {
  require_graph(g, "classify_bicyclic");
  const std::size_t n = g.node_count();
  if (g.edge_count() != n + 1 || connected_components(g).size() != 1)
    throw InputError("classify_bicyclic needs a connected graph with e = n + 1");

  // Strip pendant trees down to the 2-core.
  auto adj = adjacency(g);
  std::vector<std::size_t> deg(n);
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const auto v = leaves.back();
    leaves.pop_back();
    alive[v] = false;
    for (auto w : adj[v])
      if (alive[w] && --deg[w] == 1) leaves.push_back(w);
  }
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v] && deg[v] > 2) branch.push_back(v);

  // Length of the path leaving `from` through `first` up to the next branch node.
  auto walk = [&](std::size_t from, std::size_t first) {
    std::size_t prev = from, cur = first, len = 1;
    while (deg[cur] == 2) {
      std::size_t next = cur;
      for (auto w : adj[cur])
        if (alive[w] && w != prev) {
          next = w;
          break;
        }
      prev = cur;
      cur = next;
      ++len;
    }
    return std::make_pair(cur, len);
  };
  auto live_nbrs = [&](std::size_t v) {
    std::vector<std::size_t> out;
    for (auto w : adj[v])
      if (alive[w]) out.push_back(w);
    return out;
  };

  BicyclicShape s;
  if (branch.size() == 1) {
    // Two cycles through one node: each cycle is seen twice.
    std::vector<std::size_t> lengths;
    for (auto w : live_nbrs(branch[0])) lengths.push_back(walk(branch[0], w).second);
    std::sort(lengths.begin(), lengths.end());
    s.type = 1;
    s.l1 = lengths[0];
    s.l2 = lengths[2];
    s.l3 = 0;
  } else if (branch.size() == 2) {
    const auto a = branch[0];
    std::vector<std::size_t> loops, paths;
    for (auto w : live_nbrs(a)) {
      auto [end, len] = walk(a, w);
      (end == a ? loops : paths).push_back(len);
    }
    if (paths.size() == 1) {
      // Dumbbell: loops at a are one cycle (seen twice), the path is the bridge.
      const auto b = branch[1];
      std::size_t other = 0;
      for (auto w : live_nbrs(b)) {
        auto [end, len] = walk(b, w);
        if (end == b) other = len;
      }
      s.type = 1;
      s.l1 = loops.front();
      s.l2 = other;
      s.l3 = paths.front();
    } else {
      // Theta: three internally disjoint paths between the branch nodes.
      std::sort(paths.begin(), paths.end());
      s.type = 2;
      std::optional<std::size_t> shared;
      for (std::size_t c = 0; c < 3 && !shared; ++c) {
        const auto x = paths[(c + 1) % 3], y = paths[(c + 2) % 3];
        if ((x + paths[c]) % 2 == 1 && (y + paths[c]) % 2 == 1) {
          shared = c;
          s.l1 = std::min(x, y) + paths[c];
          s.l2 = std::max(x, y) + paths[c];
          s.l3 = paths[c];
        }
      }
      if (!shared) {
        s.l1 = paths[0] + paths[2];
        s.l2 = paths[1] + paths[2];
        s.l3 = paths[2];
      }
    }
  } else {
    throw InputError("graph is not bicyclic");
  }

  if (s.l1 % 2 == 0 && s.l2 % 2 == 1) std::swap(s.l1, s.l2);
  if (s.l1 % 2 == 1 && s.l2 % 2 == 1) {
    s.walk_half_length = s.type == 1 ? (s.l1 + s.l2 + 2 * s.l3) / 2 : (s.l1 + s.l2 - 2 * s.l3) / 2;
  } else if (s.l1 % 2 == 1) {
    s.walk_half_length = s.l2 / 2;
  }
  return s;
}

// ---------------------------------------------------------------------------

EdgeIdeal edge_ideal(const Hypergraph& g) {
  if (g.edge_count() == 0) throw InputError("edge ideal of a hypergraph without edges is zero");
  std::vector<IntVector> gens;
  for (const auto& e : g.edges()) {
    IntVector v(g.node_count(), Integer(0));
    for (auto x : e) v[x] = 1;
    gens.push_back(std::move(v));
  }
  MonomialIdeal ideal(g.node_count(), std::move(gens));
  const bool reduced = ideal.dropped() > 0;
  return {std::move(ideal), reduced};
}

CombinatorialProfile profile(const Hypergraph& g, bool compute_tulgeity, std::size_t tulgeity_cap) {
  CombinatorialProfile pr;
  pr.n = g.node_count();
  pr.e = g.edge_count();
  pr.m = g.uniformity();
  pr.components = connected_components(g);
  pr.c = pr.components.size();
  pr.pivot_classes = pivot_classes(g);
  pr.p = pr.pivot_classes.size();
  pr.free_nodes = free_nodes(g);
  for (std::size_t v = 0; v < pr.n; ++v)
    if (g.degree(v) == 0) pr.isolated_nodes.push_back(v);

  if (pr.m) {
    for (const auto& comp : pr.components) pr.properly_connected.push_back(is_properly_connected(g, comp));
  }
  if (pr.m == 2u) {
    pr.c0 = bipartite_components(g).c0;
    if (compute_tulgeity) {
      pr.tulgeity_requested = true;
      pr.tulgeity_odd = odd_tulgeity(g, tulgeity_cap);
    }
  }

  if (!pr.m) {
    pr.pivot_hypotheses_reason = g.edge_count() == 0 ? "hypergraph has no edges" : "hypergraph is not uniform";
  } else if (!pr.isolated_nodes.empty()) {
    pr.pivot_hypotheses_reason = "hypergraph has isolated nodes";
  } else if (std::find(pr.properly_connected.begin(), pr.properly_connected.end(), false) !=
             pr.properly_connected.end()) {
    pr.pivot_hypotheses_reason = "some component is not properly connected";
  } else {
    pr.pivot_hypotheses = true;
  }
  return pr;
}

// ---------------------------------------------------------------------------
// Families

namespace {

std::vector<std::vector<std::string>> labelled_edges(const Hypergraph& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& e : g.edges()) out.push_back(g.labels_of(e));
  return out;
}

std::vector<std::string> numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Hypergraph cycle_graph(std::size_t n, const std::string& prefix) {
  if (n < 3) throw InputError("a cycle needs at least 3 nodes");
  const auto x = numbered(n, prefix);
  std::vector<std::vector<std::string>> es;
  for (std::size_t i = 0; i < n; ++i) es.push_back({x[i], x[(i + 1) % n]});
  return Hypergraph(x, es);
}

Hypergraph path_graph(std::size_t edges, const std::string& prefix) {
  if (edges == 0) throw InputError("a path needs at least one edge");
  const auto x = numbered(edges + 1, prefix);
  std::vector<std::vector<std::string>> es;
  for (std::size_t i = 0; i < edges; ++i) es.push_back({x[i], x[i + 1]});
  return Hypergraph(x, es);
}

Hypergraph complete_uniform(std::size_t m, std::size_t n, const std::string& prefix) {
  if (m < 1 || m > n) throw InputError("complete uniform hypergraph needs 1 <= m <= n");
  const auto x = numbered(n, prefix);
  std::vector<std::vector<std::string>> es;
  std::vector<std::size_t> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<std::string> e;
    for (auto i : pick) e.push_back(x[i]);
    es.push_back(std::move(e));
    std::size_t k = m;
    while (k-- > 0 && pick[k] == n - m + k) {
    }
    if (k == static_cast<std::size_t>(-1)) break;
    ++pick[k];
    for (std::size_t j = k + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Hypergraph(x, es);
}

Hypergraph complete_multipartite(const std::vector<std::size_t>& parts, const std::string& prefix) {
  std::size_t n = 0;
  std::vector<std::size_t> part_of;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] == 0) throw InputError("multipartition has an empty part");
    n += parts[k];
    part_of.insert(part_of.end(), parts[k], k);
  }
  const auto x = numbered(n, prefix);
  std::vector<std::vector<std::string>> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) es.push_back({x[i], x[j]});
  return Hypergraph(x, es);
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  std::vector<std::string> nodes = a.labels();
  for (const auto& l : b.labels()) {
    if (std::find(nodes.begin(), nodes.end(), l) != nodes.end())
      throw InputError("disjoint_union: label '" + l + "' appears in both");
    nodes.push_back(l);
  }
  auto es = labelled_edges(a);
  for (auto& e : labelled_edges(b)) es.push_back(std::move(e));
  return Hypergraph(std::move(nodes), es);
}

Hypergraph glue(const Hypergraph& a, const Hypergraph& b) {
  std::vector<std::string> nodes = a.labels();
  for (const auto& l : b.labels())
    if (std::find(nodes.begin(), nodes.end(), l) == nodes.end()) nodes.push_back(l);
  auto es = labelled_edges(a);
  for (auto& e : labelled_edges(b)) es.push_back(std::move(e));
  return Hypergraph(std::move(nodes), es);
}

}  // namespace genmult
