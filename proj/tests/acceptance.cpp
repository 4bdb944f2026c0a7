// One line per acceptance criterion. Exit status is nonzero when any
// criterion fails; failing sub-checks are listed under their line.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "genmult/fixtures.hpp"
#include "genmult/hypergraph.hpp"
#include "genmult/multiplicity.hpp"
#include "genmult/oracle.hpp"
#include "genmult/polyhedra.hpp"
#include "support.hpp"

using namespace genmult;
using namespace testing_support;

namespace {

MonomialIdeal ideal_of(const Hypergraph& g) { return edge_ideal(g).ideal; }

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& computed, const B& expected, const std::string& what) {
    std::ostringstream s;
    s << what << ": expected " << expected << ", computed " << computed;
    expect(computed == expected, s.str());
  }
  bool passed() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << to_string(q); }

bool run(int number, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << "criterion " << number << ": " << (c.passed() ? "PASS" : "FAIL") << "  " << title << " ("
            << c.checks() << " checks, " << ms << " ms)" << std::endl;
  for (const auto& f : c.failures()) std::cout << "    failed: " << f << std::endl;
  return c.passed();
}

Hypergraph random_with_proper_components(std::mt19937& rng) {
  std::uniform_int_distribution<int> nodes(2, 8), mm(2, 3), ne(1, 12);
  while (true) {
    const std::size_t n = static_cast<std::size_t>(nodes(rng));
    const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(mm(rng)), n);
    const Hypergraph g = random_uniform(rng, n, m, static_cast<std::size_t>(ne(rng)), false);
    if (profile(g).pivot_hypotheses) return g;
  }
}

// A 2- or 3-uniform hypergraph on at most 6 nodes without isolated nodes.
Hypergraph small_random(std::mt19937& rng) {
  std::uniform_int_distribution<int> nodes(3, 6), mm(2, 3), ne(2, 9);
  const std::size_t n = static_cast<std::size_t>(nodes(rng));
  return random_uniform(rng, n, std::min<std::size_t>(static_cast<std::size_t>(mm(rng)), n - 1),
                        static_cast<std::size_t>(ne(rng)), false);
}

Polyhedron pyramid(std::size_t n, const std::vector<RatVector>& base) {
  std::vector<RatVector> pts{RatVector(n, Rational(0))};
  pts.insert(pts.end(), base.begin(), base.end());
  return from_generators(n, pts, {});
}

}  // namespace

int main() {
  bool all = true;
  const auto start = std::chrono::steady_clock::now();

  all &= run(1, "complete graphs: j(K_n) = 2^n - 2n for n = 4..8", [](Criterion& c) {
    for (std::size_t n = 4; n <= 8; ++n) {
      const Integer j = j_edge(complete_uniform(2, n));
      const Integer expect = (Integer(1) << static_cast<mp_bitcnt_t>(n)) - Integer(static_cast<unsigned long>(2 * n));
      c.equal(j, expect, "K" + std::to_string(n));
      c.equal(closed_form_j(CompleteUniform{2, n}), j, "closed form K" + std::to_string(n));
    }
  });

  all &= run(2, "complete m-uniform: j = m * A(n-1, m), zero iff m = n", [](Criterion& c) {
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 5}, {3, 5}, {3, 6}, {4, 5}, {5, 5}, {3, 3}}) {
      const Integer j = j_edge(complete_uniform(m, n));
      const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      c.equal(j, Integer(static_cast<unsigned long>(m)) * hypersimplex_volume(m, n), tag);
      c.expect((j == 0) == (m == n), tag + " vanishing");
    }
  });

  all &= run(3, "cycles: j = 2 for odd n in 3..9, 0 for even n in 4..8", [](Criterion& c) {
    for (std::size_t n : {3u, 5u, 7u, 9u}) c.equal(j_edge(cycle_graph(n)), 2, "C" + std::to_string(n));
    for (std::size_t n : {4u, 6u, 8u}) c.equal(j_edge(cycle_graph(n)), 0, "C" + std::to_string(n));
  });

  all &= run(4, "bicyclic graphs: j = l1 + l2 +- 2 l3 (both odd) or l2 (odd, even)", [](Criterion& c) {
    struct Shape {
      std::string name;
      Hypergraph g;
      long expected;
    };
    const std::vector<Shape> shapes{
        {"two triangles sharing a node", dumbbell(3, 3, 0), 3 + 3},
        {"triangle and 5-cycle sharing a node", dumbbell(3, 5, 0), 3 + 5},
        {"two triangles joined by a 2-path", dumbbell(3, 3, 2), 3 + 3 + 4},
        {"triangle and 5-cycle joined by an edge", dumbbell(3, 5, 1), 3 + 5 + 2},
        {"triangle and 4-cycle sharing a node", dumbbell(3, 4, 0), 4},
        {"triangle and 6-cycle joined by an edge", dumbbell(3, 6, 1), 6},
        {"5-cycle and 4-cycle joined by a 3-path", dumbbell(5, 4, 3), 4},
        {"theta K_{1,1,2}", complete_multipartite({1, 1, 2}), 3 + 3 - 2},
        {"theta with paths 2,3,2", theta_graph(2, 3, 2), 5 + 5 - 6},
        {"theta with paths 1,3,2", theta_graph(1, 3, 2), 3 + 5 - 4},
    };
    for (const auto& s : shapes) {
      c.equal(j_edge(s.g), s.expected, s.name);
      const auto shape = classify_bicyclic(s.g);
      c.equal(2 * static_cast<long>(shape.walk_half_length.value_or(0)), s.expected, s.name + " (2 * walk)");
    }
    c.expect(!classify_bicyclic(dumbbell(4, 6, 1)).walk_half_length.has_value(), "two even cycles have no walk");
    c.equal(j_edge(dumbbell(4, 6, 1)), 0, "two even cycles");
  });

  all &= run(5, "epsilon fixtures", [](Criterion& c) {
    c.equal(epsilon_monomial(ideal_of(cycle_graph(3))), make_rational(1, 2), "C3");
    for (long n = 3; n <= 9; n += 2)
      c.equal(epsilon_monomial(ideal_of(cycle_graph(static_cast<std::size_t>(n)))), make_rational(2, n + 1),
              "C" + std::to_string(n));
    c.equal(epsilon_monomial(ideal_of(disjoint_union(cycle_graph(3, "a"), cycle_graph(5, "b")))),
            make_rational(4, 9), "C3 + C5");
    c.equal(epsilon_monomial(ideal_of(triangle_with_tail())), make_rational(1, 3), "triangle with a 2-path");
    c.equal(epsilon_monomial(ideal_of(remove_node(triangle_with_tail(), "x5"))), make_rational(1, 2),
            "after removing the free node");
  });

  all &= run(6, "complete m-uniform epsilon = (n-m)/(n-1) A(n-1, m)", [](Criterion& c) {
    std::vector<std::pair<std::size_t, std::size_t>> cases{{2, 4}, {2, 5}, {3, 4}};
    for (std::size_t n = 3; n <= 6; ++n) cases.emplace_back(n - 1, n);
    for (auto [m, n] : cases) {
      const MonomialIdeal i = ideal_of(complete_uniform(m, n));
      const Rational computed = epsilon_monomial(i);
      std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      if (computed != closed_form_epsilon(CompleteUniform{m, n}))
        tag += " [box region gives " + to_string(epsilon_monomial(i, EpsilonRegion::Box)) +
               "; the closed form assumes F-hat is a pyramid with apex (m-1)/(n-1) * 1, which the orthant cuts"
               " off when m < n - 1]";
      c.equal(computed, closed_form_epsilon(CompleteUniform{m, n}), tag);
    }
    c.equal(closed_form_epsilon(CompleteUniform{2, 3}), closed_form_epsilon(CycleFamily{3}),
            "C3 through both families");
    c.equal(epsilon_monomial(ideal_of(complete_uniform(2, 3))), closed_form_epsilon(CycleFamily{3}), "C3 computed");
  });

  all &= run(7, "odd-cycle P-hat: circulant facets, pyramid F-hat, full circulant rank", [](Criterion& c) {
    for (std::size_t n : {3u, 5u, 7u}) {
      const std::string tag = "C" + std::to_string(n);
      const std::size_t k = (n - 1) / 2;
      const Polyhedron p = newton_polyhedron(ideal_of(cycle_graph(n)));
      const Polyhedron hat = epsilon_hull(p);

      IntVector u(n, Integer(0));
      u[0] = 1;
      for (std::size_t i = 1; i < n; i += 2) u[i] = 1;
      const IntMatrix circ = circulant(u);
      std::vector<IntVector> expected, normals;
      for (std::size_t r = 0; r < n; ++r) {
        expected.push_back(circ.row(r));
        IntVector e(n, Integer(0));
        e[r] = 1;
        expected.push_back(e);
      }
      for (const auto& h : hat.inequalities) normals.push_back(h.normal);
      const auto lex = [](const IntVector& a, const IntVector& b) { return lex_less(a, b); };
      std::sort(expected.begin(), expected.end(), lex);
      std::sort(normals.begin(), normals.end(), lex);
      c.expect(normals == expected, tag + ": facet normals of P-hat");

      // F-hat is P-hat below the compact facet sum z = 2, since P = P-hat cut by sum z >= 2.
      const IntVector ones(n, Integer(1)), minus(n, Integer(-1));
      c.expect(intersect(hat, {{ones, 2}}) == p, tag + ": P = P-hat cut by sum z >= 2");
      const Polyhedron f_hat = intersect(hat, {{minus, -2}});
      std::vector<RatVector> verts;
      const MonomialIdeal cyc = ideal_of(cycle_graph(n));
      for (const auto& g : cyc.generators()) verts.push_back(to_rat_vector(g));
      verts.push_back(RatVector(n, make_rational(1, static_cast<long>(k + 1))));
      std::sort(verts.begin(), verts.end(), [](const RatVector& a, const RatVector& b) { return lex_less(a, b); });
      c.expect(f_hat.vertices == verts, tag + ": vertices of F-hat");
      c.equal(normalized_volume(f_hat), epsilon_monomial(ideal_of(cycle_graph(n))), tag + ": Vol F-hat = epsilon");
      c.equal(rank(circ), n, tag + ": circulant rank");
      c.equal(circulant_rank_by_gcd(u), n, tag + ": circulant rank via gcd");
    }
  });

  all &= run(8, "spread: 1 + max bounded face dim = rank M(G) = n - p + c on 200 hypergraphs", [](Criterion& c) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      const Hypergraph g = random_with_proper_components(rng);
      const auto pr = profile(g);
      const std::size_t faces = 1 + max_bounded_face_dim(newton_polyhedron(ideal_of(g)));
      const std::size_t r = rank(incidence_matrix(g));
      const std::size_t formula = pr.n - pr.p + pr.c;
      const std::string tag = "trial " + std::to_string(trial);
      c.equal(faces, r, tag + " faces vs rank");
      c.equal(r, formula, tag + " rank vs n - p + c");
    }
  });

  all &= run(9, "property suites (200 cases each)", [](Criterion& c) {
    std::mt19937 rng(9);
    // multiplicativity under direct sums
    for (int t = 0; t < 200; ++t) {
      const MonomialIdeal a = random_ideal(rng, 1 + static_cast<std::size_t>(t % 3), 1 + static_cast<std::size_t>(t % 4), 3);
      const MonomialIdeal b = random_ideal(rng, 1 + static_cast<std::size_t>((t / 3) % 3), 1 + static_cast<std::size_t>((t / 2) % 4), 3);
      c.equal(j_monomial(direct_sum_ideal(a, b)), j_monomial(a) * j_monomial(b), "direct sum " + std::to_string(t));
    }
    // monotonicity under sub-hypergraphs when j(G) != 0
    for (int t = 0; t < 200;) {
      const Hypergraph g = small_random(rng);
      const Integer jg = j_edge(g);
      if (jg == 0) continue;
      std::vector<std::size_t> keep;
      std::bernoulli_distribution coin(0.6);
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (coin(rng)) keep.push_back(e);
      if (keep.empty()) keep.push_back(0);
      NodeSet nodes;
      for (auto e : keep) nodes.insert(nodes.end(), g.edges()[e].begin(), g.edges()[e].end());
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
      const Integer jh = j_edge(g.subhypergraph(nodes, keep));
      c.expect(jh <= jg, "monotonicity " + std::to_string(t) + ": " + to_string(jh) + " > " + to_string(jg));
      ++t;
    }
    // free-node invariance
    for (int t = 0; t < 200;) {
      const Hypergraph g = small_random(rng);
      const NodeSet free = free_nodes(g);
      if (free.empty() || g.node_count() < 3) continue;
      const Hypergraph h = remove_node(g, g.label(free.front()));
      c.equal(j_edge(h), j_edge(g), "free node " + std::to_string(t));
      ++t;
    }
    // epsilon <= j, and j = 0 <=> epsilon = 0 <=> spread < n
    for (int t = 0; t < 200; ++t) {
      const Hypergraph g = small_random(rng);
      const MonomialIdeal i = ideal_of(g);
      const Integer j = j_edge(g);
      const Rational e = epsilon_monomial(i);
      const bool full = analytic_spread(i) == i.nvars();
      const std::string tag = "edge ideal " + std::to_string(t);
      c.expect(e >= 0 && e <= Rational(j), tag + ": 0 <= epsilon <= j");
      c.expect((j != 0) == full, tag + ": j = 0 iff spread < n");
      c.expect((e != 0) == full, tag + ": epsilon = 0 iff spread < n");
    }
    for (int t = 0; t < 200; ++t) {
      const MonomialIdeal i = random_ideal(rng, 1 + static_cast<std::size_t>(t % 3), 1 + static_cast<std::size_t>(t % 5), 3);
      const Rational e = epsilon_monomial(i);
      c.expect(e >= 0 && e <= Rational(j_monomial(i)), "monomial ideal " + std::to_string(t) + ": epsilon <= j");
    }
  });

  all &= run(10, "Ehrhart volumes equal triangulation volumes", [](Criterion& c) {
    std::vector<std::pair<std::string, MonomialIdeal>> fixtures{
        {"C3", ideal_of(cycle_graph(3))},
        {"C5", ideal_of(cycle_graph(5))},
        {"C7", ideal_of(cycle_graph(7))},
        {"K4", ideal_of(complete_uniform(2, 4))},
        {"K5", ideal_of(complete_uniform(2, 5))},
        {"K^3_5", ideal_of(complete_uniform(3, 5))},
        {"K^3_4", ideal_of(complete_uniform(3, 4))},
        {"bowtie", ideal_of(bowtie())},
        {"K_{1,1,2}", ideal_of(complete_multipartite({1, 1, 2}))},
        {"C3 + C3", ideal_of(disjoint_union(cycle_graph(3, "a"), cycle_graph(3, "b")))},
        {"x^3, xy, y^3", ideal(2, {{3, 0}, {1, 1}, {0, 3}})},
        {"x^3, y^3", ideal(2, {{3, 0}, {0, 3}})},
    };
    for (const auto& [name, i] : fixtures) {
      const Polyhedron p = newton_polyhedron(i);
      for (const auto& f : compact_facets(p)) {
        std::vector<RatVector> base;
        for (auto k : f.vertex_indices) base.push_back(p.vertices[k]);
        const Polyhedron pyr = pyramid(i.nvars(), base);
        c.equal(ehrhart_volume(pyr), normalized_volume(pyr), name + " facet pyramid");
      }
      c.equal(ehrhart_j(i), Rational(j_monomial(i)), name + " j");
    }
    std::mt19937 rng(10);
    int done = 0;
    for (std::size_t attempt = 0; done < 100; ++attempt) {
      const std::size_t n = 2 + static_cast<std::size_t>(done % 5);
      const MonomialIdeal i = n <= 4 ? random_ideal(rng, n, n + attempt % 3, 3)
                                     : ideal_of(random_uniform(rng, n, 2, n + 2, false));
      if (i.nvars() != n) continue;
      const Polyhedron p = newton_polyhedron(i);
      const auto facets = compact_facets(p);
      if (facets.empty()) continue;
      std::vector<RatVector> base;
      for (auto k : facets.front().vertex_indices) base.push_back(p.vertices[k]);
      const Polyhedron pyr = pyramid(n, base);
      c.equal(ehrhart_volume(pyr), normalized_volume(pyr), "random pyramid " + std::to_string(done));
      ++done;
    }
  });

  all &= run(11, "j via the wJ decomposition agrees on 100 pairs; x^3, xy, y^3 gives 6 < 9", [](Criterion& c) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> wexp(0, 3);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 1 + static_cast<std::size_t>(t % 4);
      const MonomialIdeal j = random_zero_dim(rng, n, 3);
      IntVector w;
      for (std::size_t i = 0; i < n; ++i) w.emplace_back(wexp(rng));
      c.equal(j_via_wJ(w, j), j_monomial(multiply_by_monomial(w, j)), "pair " + std::to_string(t));
    }
    const Integer small = j_monomial(ideal(2, {{3, 0}, {1, 1}, {0, 3}}));
    const Integer big = j_monomial(ideal(2, {{3, 0}, {0, 3}}));
    c.equal(small, 6, "x^3, xy, y^3");
    c.equal(big, 9, "x^3, y^3");
    c.expect(small < big, "6 < 9");
  });

  all &= run(12, "tetrahedron-with-three-triangles pivot classes; toric heights", [](Criterion& c) {
    const Hypergraph g = tetrahedron_with_three_triangles();
    c.equal(format_classes(g, pivot_classes(g)), std::string("{x,x1,x2,x3},{y,z},{w}"),
            "pivot classes [xyw, yzw differ only in x, z and xyw, xzw only in y, z, so x ~ z ~ y]");
    bool together = false;
    for (const auto& cls : pivot_classes(g))
      together |= std::find(cls.begin(), cls.end(), g.index_of("x")) != cls.end() &&
                  std::find(cls.begin(), cls.end(), g.index_of("w")) != cls.end();
    c.expect(!together, "x and w in different classes");
    const auto pc = profile(g).properly_connected;
    c.expect(std::find(pc.begin(), pc.end(), false) != pc.end(), "flagged not properly connected");
    c.equal(toric_height(cycle_graph(3)).value.value_or(-1), 0, "C3 height");
    c.equal(toric_height(complete_uniform(2, 4)).value.value_or(-1), 2, "K4 height");
    c.equal(toric_height(bowtie()).value.value_or(-1), 1, "bowtie height");
  });

  const auto secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (all ? "all criteria passed" : "some criteria failed") << " in " << secs << " ms" << std::endl;
  return all ? 0 : 1;
}
