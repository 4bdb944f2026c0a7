#include <doctest.h>

#include <algorithm>
#include <random>

#include "genmult/error.hpp"
#include "genmult/fixtures.hpp"
#include "genmult/hypergraph.hpp"
#include "genmult/multiplicity.hpp"
#include "genmult/oracle.hpp"
#include "support.hpp"

using namespace genmult;
using namespace testing_support;

namespace {

MonomialIdeal ideal_of(const Hypergraph& g) { return edge_ideal(g).ideal; }

Hypergraph tri_plus_c5() { return disjoint_union(cycle_graph(3, "a"), cycle_graph(5, "b")); }

Rational eps(const Hypergraph& g) { return epsilon_monomial(ideal_of(g)); }

}  // namespace

TEST_CASE("j of monomial ideals") {
  CHECK(j_monomial(ideal_of(complete_uniform(2, 4))) == 8);
  CHECK(j_monomial(ideal(4, {{1, 1, 1, 1}})) == 0);
  CHECK(j_monomial(ideal(2, {{3, 0}, {1, 1}, {0, 3}})) == 6);
  CHECK(j_monomial(ideal(2, {{3, 0}, {0, 3}})) == 9);
  // compact-facet inventory for (x^3, xy, y^3): two segments at distance 3
  const auto terms = compact_facet_terms(ideal(2, {{3, 0}, {1, 1}, {0, 3}}));
  REQUIRE(terms.size() == 2);
  for (const auto& t : terms) {
    CHECK(t.lattice_distance == 3);
    CHECK(t.relative_volume == 1);
  }
}

TEST_CASE("j of edge ideals") {
  CHECK(j_edge(cycle_graph(5)) == 2);
  CHECK(j_edge(tri_plus_c5()) == 4);
  CHECK(j_edge(tri_plus_c5()) == j_edge(cycle_graph(3)) * j_edge(cycle_graph(5)));
  CHECK(j_edge(triangle_with_tail()) == 2);
  CHECK(j_edge(triangle_with_tail()) == j_edge(remove_node(remove_node(triangle_with_tail(), "x5"), "x4")));
  CHECK_THROWS_AS(j_edge(Hypergraph({}, {{"a"}, {"a", "b"}})), InputError);
  // an isolated node forces j = 0
  CHECK(j_edge(Hypergraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})) == 0);
}

TEST_CASE("analytic spread") {
  CHECK(analytic_spread(ideal_of(cycle_graph(4))) == 3);
  CHECK(analytic_spread(ideal_of(cycle_graph(3))) == 3);
  CHECK(analytic_spread(ideal(3, {{1, 2, 0}})) == 1);
  CHECK(analytic_spread_edge(cycle_graph(4)) == 3);
  CHECK(analytic_spread_edge(tetrahedron_with_three_triangles()) ==
        rank(incidence_matrix(tetrahedron_with_three_triangles())));
}

TEST_CASE("epsilon") {
  CHECK(eps(cycle_graph(3)) == Rational(1, 2));
  for (long n : {5, 7, 9}) CHECK(eps(cycle_graph(static_cast<std::size_t>(n))) == make_rational(2, n + 1));
  CHECK(eps(tri_plus_c5()) == make_rational(4, 9));
  CHECK(eps(cycle_graph(4)) == 0);
  CHECK(epsilon_monomial(ideal(1, {{3}})) == 3);
}

TEST_CASE("epsilon is neither multiplicative nor monotone") {
  const Rational whole = eps(tri_plus_c5());
  CHECK(whole != eps(cycle_graph(3)) * eps(cycle_graph(5)));
  const Hypergraph g = triangle_with_tail();
  const Hypergraph h = remove_node(g, "x5");
  CHECK(eps(g) == make_rational(1, 3));
  CHECK(eps(h) == make_rational(1, 2));
  CHECK(eps(h) > eps(g));
}

TEST_CASE("odd cycle epsilon geometry") {
  for (std::size_t n : {3u, 5u, 7u}) {
    CAPTURE(n);
    const std::size_t k = (n - 1) / 2;
    const Polyhedron p = newton_polyhedron(ideal_of(cycle_graph(n)));
    const Polyhedron hat = epsilon_hull(p);
    const RatVector apex(n, make_rational(1, static_cast<long>(k + 1)));

    // F-hat is the pyramid over F with this apex
    std::vector<RatVector> pts;
    const MonomialIdeal cyc = ideal_of(cycle_graph(n));
    for (const auto& g : cyc.generators()) pts.push_back(to_rat_vector(g));
    pts.push_back(apex);
    const Polyhedron pyramid = from_generators(n, pts, {});
    CHECK(pyramid.vertices.size() == n + 1);
    CHECK(normalized_volume(pyramid) == eps(cycle_graph(n)));
    CHECK(std::find(hat.vertices.begin(), hat.vertices.end(), apex) != hat.vertices.end());

    // facets of P-hat: coordinate hyperplanes and circulant rows of (1,1,0,1,0,...)
    IntVector u(n, Integer(0));
    u[0] = 1;
    for (std::size_t i = 1; i < n; i += 2) u[i] = 1;
    const IntMatrix c = circulant(u);
    std::vector<IntVector> expected;
    for (std::size_t r = 0; r < n; ++r) {
      expected.push_back(c.row(r));
      IntVector e(n, Integer(0));
      e[r] = 1;
      expected.push_back(e);
    }
    std::vector<IntVector> normals;
    for (const auto& h : hat.inequalities) normals.push_back(h.normal);
    std::sort(expected.begin(), expected.end(), [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
    std::sort(normals.begin(), normals.end(), [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
    CHECK(normals == expected);
    CHECK(rank(c) == n);
  }
}

TEST_CASE("epsilon regions agree") {
  std::mt19937 rng(515);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 5);
    const Hypergraph g = random_uniform(rng, n, 2, n + static_cast<std::size_t>(trial % 3));
    const MonomialIdeal i = ideal_of(g);
    CHECK(epsilon_monomial(i, EpsilonRegion::Box) == epsilon_monomial(i, EpsilonRegion::Simplex));
  }
  for (std::size_t n = 3; n <= 7; n += 2) {
    const MonomialIdeal i = ideal_of(cycle_graph(n));
    CHECK(epsilon_monomial(i, EpsilonRegion::Box) == epsilon_monomial(i, EpsilonRegion::Simplex));
  }
}

TEST_CASE("edge subring multiplicity and toric height") {
  CHECK(edge_subring_multiplicity(complete_uniform(2, 4)).value == Rational(4));
  CHECK(edge_subring_multiplicity(cycle_graph(5)).value == Rational(1));
  for (const std::vector<std::size_t>& parts :
       {std::vector<std::size_t>{1, 1, 2}, {1, 2, 3}, {2, 2, 2}, {1, 1, 1, 1}})
    CHECK(edge_subring_multiplicity(complete_multipartite(parts)).value ==
          make_rational(multipartite_bound(parts), 2));
  // two disjoint triangles: e(k[G]) = 4 / 2^2
  CHECK(edge_subring_multiplicity(disjoint_union(cycle_graph(3, "a"), cycle_graph(3, "b"))).value == Rational(1));

  const auto none = edge_subring_multiplicity(cycle_graph(4));
  CHECK_FALSE(none.value.has_value());
  CHECK_FALSE(none.reason.empty());
  CHECK_FALSE(toric_height(tetrahedron_with_three_triangles()).value.has_value());

  CHECK(toric_height(cycle_graph(3)).value == Integer(0));
  CHECK(toric_height(complete_uniform(2, 4)).value == Integer(2));
  CHECK(toric_height(bowtie()).value == Integer(1));
}

TEST_CASE("zero-dimensional multiplicity and the wJ route") {
  CHECK(zero_dim_multiplicity(ideal(2, {{1, 0}, {0, 1}})) == 1);
  CHECK(zero_dim_multiplicity(ideal(2, {{3, 0}, {0, 3}})) == 9);
  CHECK(zero_dim_multiplicity(ideal(2, {{2, 0}, {1, 1}, {0, 2}})) == 4);
  CHECK_THROWS_AS(zero_dim_multiplicity(ideal(2, {{1, 1}})), InputError);

  const MonomialIdeal m = ideal(2, {{1, 0}, {0, 1}});
  CHECK(j_via_wJ(to_int_vector({1, 1}), m) == 3);
  CHECK(j_via_wJ(to_int_vector({0, 0}), m) == 1);
  CHECK(j_via_wJ(to_int_vector({2, 0}), m) == 3);
  CHECK(multiply_by_monomial(to_int_vector({2, 0}), m) == ideal(2, {{3, 0}, {2, 1}}));

  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const MonomialIdeal j = random_zero_dim(rng, 2 + static_cast<std::size_t>(trial % 2), 4);
    const Integer e = zero_dim_multiplicity(j);
    CHECK(Rational(e) == ehrhart_j(j));
    CHECK(e == j_monomial(j));
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_j(CompleteUniform{2, 5}) == 22);
  for (std::size_t n = 3; n <= 7; ++n) CHECK(closed_form_j(CompleteUniform{n - 1, n}) == n - 1);
  CHECK(closed_form_j(CompleteUniform{4, 4}) == 0);
  CHECK(closed_form_j(CompleteMultipartite{{1, 1, 2}}) == 4);
  CHECK(closed_form_j(UnicyclicOdd{3}) == 8);
  CHECK(closed_form_j(UniformEdgesEqualNodes{3, 2}) == 9);
  CHECK(closed_form_j(BicyclicFamily{2, 1, Integer(3)}) == 6);
  CHECK(closed_form_epsilon(CompleteUniform{4, 4}) == 0);
  CHECK(closed_form_epsilon(CycleFamily{7}) == make_rational(1, 4));
  CHECK(closed_form_epsilon(CompleteUniform{2, 4}) == make_rational(8, 3));
  CHECK(closed_form_epsilon(CycleFamily{6}) == 0);
  CHECK_THROWS_AS(closed_form_j(CompleteUniform{5, 4}), InputError);
  CHECK_THROWS_AS(closed_form_j(CompleteMultipartite{{1, 2}}), InputError);
  CHECK(hypersimplex_volume(2, 4) == 4);
  CHECK(hypersimplex_volume(3, 6) == 66);
}

TEST_CASE("bounds") {
  const Bounds c5 = bounds_report(cycle_graph(5), 2, 1);
  CHECK(c5.lower == Integer(2));
  CHECK(c5.upper == Integer(22));
  CHECK(bounds_report(complete_uniform(2, 4), 8, 1).upper == Integer(8));
  CHECK(bounds_report(disjoint_union(cycle_graph(3, "a"), cycle_graph(3, "b")), 4, 2).lower == Integer(4));
  CHECK(bounds_report(complete_multipartite({1, 1, 2}), 4, 1, {1, 1, 2}).upper == Integer(4));
}

TEST_CASE("reports") {
  const auto tri = report(cycle_graph(3));
  CHECK(tri.j == 2);
  CHECK(tri.epsilon == Rational(1, 2));
  CHECK(tri.analytic_spread == 3);
  CHECK(tri.toric_height.value == Integer(0));
  CHECK(tri.edge_subring_multiplicity.value == Rational(1));
  CHECK(std::all_of(tri.cross_checks.begin(), tri.cross_checks.end(), [](const CrossCheck& c) { return c.pass; }));

  const auto c4 = report(cycle_graph(4));
  CHECK(c4.j == 0);
  CHECK(c4.epsilon == Rational(0));
  CHECK(c4.analytic_spread == 3);

  const auto two = report(tri_plus_c5());
  CHECK(two.j == 4);
  CHECK(two.epsilon == make_rational(4, 9));

  const auto fig = report(tetrahedron_with_three_triangles());
  CHECK_FALSE(fig.toric_height.value.has_value());
  CHECK(fig.toric_height.reason == "some component is not properly connected");

  // the complete-uniform epsilon formula is only applied where it holds
  const auto k4 = report(complete_uniform(2, 4));
  CHECK(k4.epsilon == make_rational(10, 3));
  CHECK(std::any_of(k4.notes.begin(), k4.notes.end(),
                    [](const std::string& s) { return s.find("epsilon") != std::string::npos; }));
}

TEST_CASE("randomized multiplicity properties") {
  std::mt19937 rng(8080);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 4);
    const std::size_t m = 2 + static_cast<std::size_t>(trial % 2);
    std::uniform_int_distribution<int> ne(2, 8);
    const Hypergraph g = random_uniform(rng, n, std::min(m, n - 1), static_cast<std::size_t>(ne(rng)), false);
    const MonomialIdeal i = ideal_of(g);
    const Integer j = j_edge(g);
    const Rational e = epsilon_monomial(i);
    const std::size_t l = analytic_spread(i);
    const bool full = l == g.node_count();
    CHECK(e >= 0);
    CHECK(e <= Rational(j));
    CHECK((j != 0) == full);
    CHECK((e != 0) == full);
    CHECK(compact_facets(newton_polyhedron(i)).empty() == !full);
    CHECK(ehrhart_j(i) == Rational(j));
    for (auto x : free_nodes(g)) {
      const Hypergraph h = remove_node(g, g.label(x));
      const auto iso = profile(h).isolated_nodes;
      if (iso.empty()) CHECK(j_edge(h) == j);
    }
  }
}
