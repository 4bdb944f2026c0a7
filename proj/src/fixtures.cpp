#include "genmult/fixtures.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>

#include "genmult/multiplicity.hpp"
#include "genmult/oracle.hpp"
#include "genmult/polyhedra.hpp"

namespace genmult {

Hypergraph tetrahedron_with_three_triangles() {
  return Hypergraph({"x", "y", "z", "w", "x1", "x2", "x3"},
                    {{"x", "x1", "x2"},
                     {"x", "x1", "x3"},
                     {"x", "x2", "x3"},
                     {"x1", "x2", "x3"},
                     {"x", "y", "w"},
                     {"x", "z", "w"},
                     {"y", "z", "w"}});
}

Hypergraph bowtie() {
  return Hypergraph({}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}, {"d", "e"}, {"c", "e"}});
}

Hypergraph triangle_with_tail() {
  return Hypergraph({}, {{"x1", "x2"}, {"x2", "x3"}, {"x1", "x3"}, {"x3", "x4"}, {"x4", "x5"}});
}

std::string format_classes(const Hypergraph& g, const std::vector<NodeSet>& classes) {
  std::string out;
  for (const auto& cls : classes) {
    if (!out.empty()) out += ",";
    out += "{";
    for (std::size_t k = 0; k < cls.size(); ++k) out += (k ? "," : "") + g.label(cls[k]);
    out += "}";
  }
  return out;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Integer& z) { return to_string(z); }
std::string str(std::size_t k) { return std::to_string(k); }

MonomialIdeal ideal_of(const Hypergraph& g) { return edge_ideal(g).ideal; }

Polyhedron newton_of(const Hypergraph& g) { return newton_polyhedron(ideal_of(g)); }

std::string format_inequalities(const Polyhedron& p) {
  std::set<std::string> rows;
  for (const auto& h : p.inequalities) {
    std::string s = "(";
    for (std::size_t i = 0; i < h.normal.size(); ++i) s += (i ? "," : "") + to_string(h.normal[i]);
    rows.insert(s + ")>=" + to_string(h.rhs));
  }
  std::string out;
  for (const auto& r : rows) out += (out.empty() ? "" : " ") + r;
  return out;
}

class Table {
 public:
  void add(std::string topic, std::string name, std::string expected,
           const std::function<std::string()>& compute) {
    FixtureResult r{std::move(topic), std::move(name), std::move(expected), {}, false};
    try {
      r.computed = compute();
      r.pass = r.computed == r.expected;
    } catch (const std::exception& e) {
      r.computed = std::string("error: ") + e.what();
    }
    rows_.push_back(std::move(r));
  }
  std::vector<FixtureResult> take() { return std::move(rows_); }

 private:
  std::vector<FixtureResult> rows_;
};

void linear_algebra(Table& t) {
  t.add("linear algebra", "rank of the circulant of (1,1,0,1,0)", "5",
        [] { return str(rank(circulant(to_int_vector({1, 1, 0, 1, 0})))); });
  t.add("linear algebra", "circulant rank of (1,1,0,1,0) via gcd with t^5 - 1", "5",
        [] { return str(circulant_rank_by_gcd(to_int_vector({1, 1, 0, 1, 0}))); });
  t.add("linear algebra", "|det| of the triangle incidence matrix", "2", [] {
    Integer d = determinant(incidence_matrix(cycle_graph(3)));
    return str(Integer(abs(d)));
  });
  t.add("linear algebra", "row sums of the triangle incidence matrix", "2,2,2", [] {
    const IntMatrix m = incidence_matrix(cycle_graph(3));
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer s = 0;
      for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k);
      out += (i ? "," : "") + str(s);
    }
    return out;
  });
}

void polyhedra(Table& t) {
  t.add("polyhedra", "facets of the triangle Newton polyhedron",
        "(0,0,1)>=0 (0,1,0)>=0 (0,1,1)>=1 (1,0,0)>=0 (1,0,1)>=1 (1,1,0)>=1 (1,1,1)>=2",
        [] { return format_inequalities(newton_of(cycle_graph(3))); });
  t.add("polyhedra", "P-hat of the triangle has the vertex (1/2,1/2,1/2)", "yes", [] {
    const Polyhedron h = epsilon_hull(newton_of(cycle_graph(3)));
    const RatVector a(3, Rational(1, 2));
    return yes_no(std::find(h.vertices.begin(), h.vertices.end(), a) != h.vertices.end());
  });
  t.add("polyhedra", "4-cycle: max bounded face dim", "2",
        [] { return str(max_bounded_face_dim(newton_of(cycle_graph(4)))); });
  t.add("polyhedra", "4-cycle: compact facets", "0",
        [] { return str(compact_facets(newton_of(cycle_graph(4))).size()); });
  t.add("polyhedra", "(2,4)-hypersimplex relative volume in sum z = 2", "4", [] {
    std::vector<IntVector> verts;
    const MonomialIdeal ideal = ideal_of(complete_uniform(2, 4));
    for (const auto& g : ideal.generators()) verts.push_back(g);
    const IntVector u = to_int_vector({1, 1, 1, 1});
    return str(relative_normalized_volume(verts, u, Rational(2)));
  });
  t.add("polyhedra", "hypersimplex formula at (2,4)", "4", [] { return str(hypersimplex_volume(2, 4)); });

  const auto triangle_pyramid = [](const RatVector& apex) {
    const Polyhedron p = newton_of(cycle_graph(3));
    const auto facets = compact_facets(p);
    return str(pyramid_volume(p, facets.at(0), apex));
  };
  t.add("polyhedra", "pyramid over the triangle edge polytope, apex 0", "2",
        [&] { return triangle_pyramid(RatVector(3, Rational(0))); });
  t.add("polyhedra", "pyramid over the triangle edge polytope, apex (1/2,1/2,1/2)", "1/2",
        [&] { return triangle_pyramid(RatVector(3, Rational(1, 2))); });

  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{3, 5}, {2, 4}, {3, 4}}) {
    const std::string name = "projections of the complete " + str(m) + "-uniform polyhedron on " + str(n) +
                             " nodes are the complete " + str(m - 1) + "-uniform one on " + str(n - 1);
    t.add("polyhedra", name, "yes", [m, n] {
      const Polyhedron p = newton_of(complete_uniform(m, n));
      const Polyhedron q = newton_of(complete_uniform(m - 1, n - 1));
      bool all = true;
      for (std::size_t i = 0; i < n; ++i) all = all && coordinate_projection(p, i) == q;
      return yes_no(all);
    });
  }

  // Deleting z5 from the compact facet of the 7-cycle polyhedron: edges
  // x4x5 and x5x6 become e4 and e6, the other five keep two ones.
  const auto projected_facet = [] {
    const Polyhedron p = newton_of(cycle_graph(7));
    std::vector<RatVector> out;
    const auto facets = compact_facets(p);
    for (auto k : facets.at(0).vertex_indices) {
      RatVector v = p.vertices[k];
      v.erase(v.begin() + 4);
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), [](const RatVector& a, const RatVector& b) { return lex_less(a, b); });
    return out;
  };
  t.add("polyhedra", "7-cycle facet projected to z5 = 0: vertices are the rows of the collapsed incidence matrix",
        "yes", [&] {
          const MonomialIdeal ideal = ideal_of(cycle_graph(7));
          std::vector<RatVector> expected;
          for (const auto& g : ideal.generators()) {
            RatVector v;
            for (std::size_t i = 0; i < 7; ++i)
              if (i != 4) v.push_back(Rational(g[i]));
            expected.push_back(std::move(v));
          }
          std::sort(expected.begin(), expected.end(),
                    [](const RatVector& a, const RatVector& b) { return lex_less(a, b); });
          return yes_no(projected_facet() == expected);
        });
  t.add("polyhedra", "7-cycle facet projected to z5 = 0: affine rank", "6", [&] {
    const auto verts = projected_facet();
    std::vector<RatVector> diffs;
    for (std::size_t k = 1; k < verts.size(); ++k) {
      RatVector d = verts[k];
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= verts[0][i];
      diffs.push_back(std::move(d));
    }
    return str(rank(diffs));
  });
  t.add("polyhedra", "7-cycle facet projected to z5 = 0: (1,1,0,1,0,1,0) is 2 on x1x2 and 1 elsewhere",
        "2,1,1,1,1,1,1", [&] {
          const IntVector u = to_int_vector({1, 1, 0, 1, 1, 0});  // entry 5 dropped
          std::string out;
          RatVector x1x2(6, Rational(0));
          x1x2[0] = x1x2[1] = 1;
          out = str(dot(u, x1x2));
          for (const auto& v : projected_facet())
            if (v != x1x2) out += "," + str(dot(u, v));
          return out;
        });
  t.add("polyhedra", "j of triangle (+) 5-cycle in disjoint variables = 2 * 2", "4", [] {
    return str(j_monomial(direct_sum_ideal(ideal_of(cycle_graph(3)), ideal_of(cycle_graph(5)))));
  });
}

void hypergraphs(Table& t) {
  t.add("hypergraphs", "triangle profile n,e,m,c,c0,p", "3,3,2,1,0,1", [] {
    const auto pr = profile(cycle_graph(3));
    return str(pr.n) + "," + str(pr.e) + "," + str(*pr.m) + "," + str(pr.c) + "," + str(*pr.c0) + "," +
           str(pr.p);
  });
  t.add("hypergraphs", "connected simple graphs are properly connected", "yes", [] {
    bool all = true;
    for (const Hypergraph& g : {cycle_graph(4), cycle_graph(5), complete_uniform(2, 5), path_graph(3), bowtie(),
                                complete_multipartite({1, 2, 3})})
      for (bool b : profile(g).properly_connected) all = all && b;
    return yes_no(all);
  });
  t.add("hypergraphs", "5-cycle pivot classes", "1", [] { return str(pivot_classes(cycle_graph(5)).size()); });
  t.add("hypergraphs", "tetrahedron with three triangles: x and w pivot equivalent", "no", [] {
    const Hypergraph g = tetrahedron_with_three_triangles();
    const std::size_t x = g.index_of("x"), w = g.index_of("w");
    for (const auto& cls : pivot_classes(g))
      if (std::find(cls.begin(), cls.end(), x) != cls.end())
        return yes_no(std::find(cls.begin(), cls.end(), w) != cls.end());
    return std::string("x missing");
  });
  t.add("hypergraphs", "tetrahedron with three triangles: properly connected", "no",
        [] {
          const auto pc = profile(tetrahedron_with_three_triangles()).properly_connected;
          return yes_no(std::all_of(pc.begin(), pc.end(), [](bool b) { return b; }));
        });
  t.add("hypergraphs", "triangle with a length-2 path: free nodes", "x5", [] {
    const Hypergraph g = triangle_with_tail();
    std::string out;
    for (auto v : free_nodes(g)) out += (out.empty() ? "" : ",") + g.label(v);
    return out;
  });
  t.add("hypergraphs", "two triangles sharing a node: walk half-length", "3",
        [] { return str(*classify_bicyclic(bowtie()).walk_half_length); });
  t.add("hypergraphs", "two triangles sharing a node: j", "6", [] { return str(j_edge(bowtie())); });
  const auto tri_square = [] {
    return Hypergraph({}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "c"}});
  };
  t.add("hypergraphs", "triangle and 4-cycle sharing a node: walk half-length", "2",
        [&] { return str(*classify_bicyclic(tri_square()).walk_half_length); });
  t.add("hypergraphs", "triangle and 4-cycle sharing a node: j", "4", [&] { return str(j_edge(tri_square())); });
}

void multiplicities(Table& t) {
  t.add("j", "complete graph on 4 nodes", "8", [] { return str(j_edge(complete_uniform(2, 4))); });
  t.add("j", "single generator x1x2x3x4", "0",
        [] { return str(j_monomial(MonomialIdeal(4, {to_int_vector({1, 1, 1, 1})}))); });
  t.add("j", "5-cycle", "2", [] { return str(j_edge(cycle_graph(5))); });
  t.add("j", "complete graph on 5 nodes", "22", [] { return str(j_edge(complete_uniform(2, 5))); });
  t.add("j", "closed form, complete 2-uniform on 5 nodes", "22",
        [] { return str(closed_form_j(CompleteUniform{2, 5})); });
  for (std::size_t n : {4, 5, 6})
    t.add("j", "complete " + str(n - 1) + "-uniform on " + str(n) + " nodes", str(n - 1),
          [n] { return str(j_edge(complete_uniform(n - 1, n))); });
  t.add("j", "x^3, xy, y^3", "6",
        [] { return str(j_monomial(MonomialIdeal(2, {to_int_vector({3, 0}), to_int_vector({1, 1}), to_int_vector({0, 3})}))); });
  t.add("j", "x^3, y^3", "9",
        [] { return str(j_monomial(MonomialIdeal(2, {to_int_vector({3, 0}), to_int_vector({0, 3})}))); });
  t.add("spread", "4-cycle", "3", [] { return str(analytic_spread(ideal_of(cycle_graph(4)))); });

  t.add("epsilon", "triangle", "1/2", [] { return str(epsilon_monomial(ideal_of(cycle_graph(3)))); });
  for (std::size_t n : {5, 7, 9})
    t.add("epsilon", str(n) + "-cycle", str(make_rational(2, static_cast<long>(n + 1))),
          [n] { return str(epsilon_monomial(ideal_of(cycle_graph(n)))); });
  t.add("epsilon", "triangle + 5-cycle, disjoint", "4/9", [] {
    return str(epsilon_monomial(ideal_of(disjoint_union(cycle_graph(3, "a"), cycle_graph(5, "b")))));
  });
  t.add("epsilon", "triangle with a length-2 path", "1/3",
        [] { return str(epsilon_monomial(ideal_of(triangle_with_tail()))); });
  t.add("epsilon", "triangle with a length-2 path, free node removed", "1/2",
        [] { return str(epsilon_monomial(ideal_of(remove_node(triangle_with_tail(), "x5")))); });
  t.add("epsilon", "closed form, complete n-uniform on n nodes (n = 4)", "0",
        [] { return str(closed_form_epsilon(CompleteUniform{4, 4})); });
  t.add("epsilon", "complete 4-uniform on 4 nodes", "0",
        [] { return str(epsilon_monomial(ideal_of(complete_uniform(4, 4)))); });
  t.add("epsilon", "closed form, 7-cycle", "1/4", [] { return str(closed_form_epsilon(CycleFamily{7})); });

  for (const std::vector<std::size_t>& parts :
       {std::vector<std::size_t>{1, 1, 2}, {1, 2, 2}, {2, 2, 2}, {1, 1, 1, 2}}) {
    std::string name = "edge subring multiplicity, complete multipartite (";
    for (std::size_t k = 0; k < parts.size(); ++k) name += (k ? "," : "") + str(parts[k]);
    name += ")";
    t.add("edge subring", name, str(make_rational(multipartite_bound(parts), 2)), [parts] {
      return str(*edge_subring_multiplicity(complete_multipartite(parts)).value);
    });
  }
  t.add("toric height", "triangle", "0", [] { return str(*toric_height(cycle_graph(3)).value); });
  t.add("toric height", "complete graph on 4 nodes", "2",
        [] { return str(*toric_height(complete_uniform(2, 4)).value); });
  t.add("toric height", "two triangles sharing a node", "1", [] { return str(*toric_height(bowtie()).value); });
  t.add("bounds", "complete graph on 4 nodes: upper bound attained", "8 = 8", [] {
    const Hypergraph g = complete_uniform(2, 4);
    const Integer j = j_edge(g);
    return str(*bounds_report(g, j, std::nullopt).upper) + " = " + str(j);
  });
}

void reports(Table& t) {
  ReportOptions opts;
  t.add("report", "triangle: j, epsilon, spread, height, e(k[G])", "2, 1/2, 3, 0, 1", [&] {
    const auto r = report(cycle_graph(3), opts);
    return str(r.j) + ", " + str(*r.epsilon) + ", " + str(r.analytic_spread) + ", " + str(*r.toric_height.value) +
           ", " + str(*r.edge_subring_multiplicity.value);
  });
  t.add("report", "4-cycle: j, epsilon, spread", "0, 0, 3", [&] {
    const auto r = report(cycle_graph(4), opts);
    return str(r.j) + ", " + str(*r.epsilon) + ", " + str(r.analytic_spread);
  });
  t.add("report", "triangle + 5-cycle: j, epsilon", "4, 4/9", [&] {
    const auto r = report(disjoint_union(cycle_graph(3, "a"), cycle_graph(5, "b")), opts);
    return str(r.j) + ", " + str(*r.epsilon);
  });
}

}  // namespace

std::vector<FixtureResult> run_fixtures() {
  Table t;
  linear_algebra(t);
  polyhedra(t);
  hypergraphs(t);
  multiplicities(t);
  reports(t);
  return t.take();
}

}  // namespace genmult
