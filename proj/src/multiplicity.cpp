#include "genmult/multiplicity.hpp"

#include <algorithm>
#include <set>

#include "genmult/error.hpp"

namespace genmult {

namespace {

Integer power(const Integer& base, std::size_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

IntVector as_integers(const RatVector& v) {
  IntVector out;
  for (const auto& x : v) {
    if (x.get_den() != 1) throw std::logic_error("expected a lattice point");
    out.push_back(x.get_num());
  }
  return out;
}

IntVector unit(std::size_t n, std::size_t i, long value = 1) {
  IntVector e(n, Integer(0));
  e[i] = value;
  return e;
}

// Vol_{k-1}(F(G_k)) for one component: the edge points lie on sum z = m,
// so dropping the last coordinate is a lattice isomorphism onto its image.
Rational component_edge_polytope_volume(const Hypergraph& g, const NodeSet& comp) {
  const std::size_t k = comp.size();
  std::vector<RatVector> pts;
  for (const auto& e : g.edges()) {
    if (!std::binary_search(comp.begin(), comp.end(), e.front())) continue;
    RatVector p(k, Rational(0));
    for (auto v : e) p[static_cast<std::size_t>(std::lower_bound(comp.begin(), comp.end(), v) - comp.begin())] = 1;
    p.pop_back();
    pts.push_back(std::move(p));
  }
  if (pts.empty()) return 0;
  if (k == 1) return 1;
  return normalized_volume(pts, k - 1);
}

std::pair<Integer, Integer> j_edge_routes(const Hypergraph& g) {
  const auto m = g.uniformity();
  if (!m) throw InputError("j_edge needs a uniform hypergraph");
  Integer by_components = 1;
  for (const auto& comp : connected_components(g)) {
    const Rational vol = component_edge_polytope_volume(g, comp);
    if (vol.get_den() != 1) throw CrossCheckError("edge polytope volume", "not an integer: " + to_string(vol));
    by_components *= Integer(static_cast<unsigned long>(*m)) * vol.get_num();
  }
  return {by_components, j_monomial(edge_ideal(g).ideal)};
}

Integer edge_polytope_volume(const Hypergraph& g, std::size_t m) {
  std::vector<IntVector> verts;
  for (const auto& e : g.edges()) {
    IntVector v(g.node_count(), Integer(0));
    for (auto x : e) v[x] = 1;
    verts.push_back(std::move(v));
  }
  const IntVector ones(g.node_count(), Integer(1));
  return relative_normalized_volume(verts, ones, Rational(static_cast<long>(m)));
}

struct PivotData {
  std::size_t p = 0, c = 0;
  bool hypotheses = false;
  std::string reason;
};

PivotData pivot_data(const Hypergraph& g) {
  const auto pr = profile(g);
  return {pr.p, pr.c, pr.pivot_hypotheses, pr.pivot_hypotheses_reason};
}

Rational rational_max_coordinate(const std::vector<RatVector>& pts) {
  Rational best = 0;
  for (const auto& p : pts)
    for (const auto& x : p) best = std::max(best, x);
  return best;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<FacetTerm> compact_facet_terms(const MonomialIdeal& ideal) {
  const Polyhedron p = newton_polyhedron(ideal);
  std::vector<FacetTerm> out;
  for (const auto& f : compact_facets(p)) {
    FacetTerm t;
    t.normal = f.normal;
    if (f.lattice_distance.get_den() != 1) throw std::logic_error("non-integral facet of a lattice polyhedron");
    t.lattice_distance = f.lattice_distance.get_num();
    for (auto v : f.vertex_indices) t.vertices.push_back(as_integers(p.vertices[v]));
    t.relative_volume = relative_normalized_volume(t.vertices, t.normal, f.lattice_distance);
    out.push_back(std::move(t));
  }
  return out;
}

Integer j_monomial(const MonomialIdeal& ideal) {
  Integer total = 0;
  for (const auto& t : compact_facet_terms(ideal)) total += t.contribution();
  return total;
}

Integer j_edge(const Hypergraph& g) {
  const auto [by_components, whole] = j_edge_routes(g);
  if (by_components != whole)
    throw CrossCheckError("j_edge", "component product " + to_string(by_components) +
                                        " differs from the compact-facet sum " + to_string(whole));
  return whole;
}

std::size_t analytic_spread(const MonomialIdeal& ideal) {
  return 1 + max_bounded_face_dim(newton_polyhedron(ideal));
}

std::size_t analytic_spread_edge(const Hypergraph& g) {
  const std::size_t spread = analytic_spread(edge_ideal(g).ideal);
  if (!g.uniformity()) return spread;
  const std::size_t r = rank(incidence_matrix(g));
  if (r != spread)
    throw CrossCheckError("analytic_spread", "bounded faces give " + std::to_string(spread) +
                                                 " but rank M(G) = " + std::to_string(r));
  const auto pv = pivot_data(g);
  if (pv.hypotheses && g.node_count() - pv.p + pv.c != spread)
    throw CrossCheckError("analytic_spread", "n - p + c = " + std::to_string(g.node_count() - pv.p + pv.c) +
                                                 " but bounded faces give " + std::to_string(spread));
  return spread;
}

Polyhedron epsilon_hull(const Polyhedron& p) {
  const std::size_t n = p.nvars;
  std::vector<Inequality> ineqs;
  for (std::size_t i = 0; i < n; ++i) ineqs.push_back({unit(n, i), Rational(0)});
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& h : coordinate_projection(p, i).inequalities) {
        IntVector a = h.normal;
        a.insert(a.begin() + static_cast<long>(i), Integer(0));
        ineqs.push_back({std::move(a), h.rhs});
      }
    }
  }
  return from_inequalities(n, std::move(ineqs));
}

// If z is in P-hat and z_i >= max_v v_i for some i then z is in P: write
// pi_i(z) = pi_i(q) + r with q in conv(V), r >= 0, and lift back with
// z_i - q_i >= 0 in the i-th slot. So P-hat \ P lies in the open box
// prod [0, max_v v_i), and in the simplex sum z < sum_i max_v v_i.
Rational epsilon_monomial(const MonomialIdeal& ideal, EpsilonRegion region) {
  const Polyhedron p = newton_polyhedron(ideal);
  const Polyhedron hat = epsilon_hull(p);
  const std::size_t n = p.nvars;

  std::vector<Inequality> cut;
  if (region == EpsilonRegion::Box) {
    const Rational top = std::max(rational_max_coordinate(p.vertices), rational_max_coordinate(hat.vertices));
    cut = box_inequalities(n, ceil_of(top) + 1, true);
  } else {
    Integer s = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Rational best = 0;
      for (const auto& v : p.vertices) best = std::max(best, v[i]);
      s += ceil_of(best);
    }
    cut.push_back({IntVector(n, Integer(-1)), Rational(-s)});
  }
  return normalized_volume(intersect(hat, cut)) - normalized_volume(intersect(p, cut));
}

Maybe<Rational> edge_subring_multiplicity(const Hypergraph& g) {
  const auto m = g.uniformity();
  if (!m) return {std::nullopt, "hypergraph is not uniform"};
  const auto pv = pivot_data(g);
  if (!pv.hypotheses) return {std::nullopt, pv.reason};
  const Integer j = j_edge(g);
  if (j == 0) return {std::nullopt, "j-multiplicity is zero"};

  const Integer mc = power(Integer(static_cast<unsigned long>(*m)), pv.c);
  const Rational e = make_rational(j, mc);
  // The edge polytope volume is m^(c-1) e(k[G]); the j = m Vol(F(G)) identity
  // pins the exponent.
  const Integer vol = edge_polytope_volume(g, *m);
  const Rational expected = e * Rational(power(Integer(static_cast<unsigned long>(*m)), pv.c - 1));
  if (Rational(vol) != expected)
    throw CrossCheckError("edge_subring_multiplicity", "Vol(F(G)) = " + to_string(vol) +
                                                           " but m^(c-1) e(k[G]) = " + to_string(expected));
  return {e, ""};
}

Maybe<Integer> toric_height(const Hypergraph& g) {
  if (!g.uniformity()) return {std::nullopt, "hypergraph is not uniform"};
  const auto pv = pivot_data(g);
  if (!pv.hypotheses) return {std::nullopt, pv.reason};
  const long e = static_cast<long>(g.edge_count()), n = static_cast<long>(g.node_count());
  const Integer ht = e - n + static_cast<long>(pv.p) - static_cast<long>(pv.c);
  const Integer via_rank = e - static_cast<long>(rank(incidence_matrix(g)));
  if (ht != via_rank)
    throw CrossCheckError("toric_height", "e - n + p - c = " + to_string(ht) + " but e - rank M(G) = " +
                                              to_string(via_rank));
  return {ht, ""};
}

// Independent of the compact-facet sum: box volume minus the part of P(J)
// inside the box.
Integer zero_dim_multiplicity(const MonomialIdeal& j) {
  if (!j.is_zero_dimensional()) throw InputError("ideal is not zero-dimensional");
  const std::size_t n = j.nvars();
  Integer top = 0;
  for (const auto& g : j.generators())
    for (const auto& x : g) top = std::max(top, x);
  top += 1;
  const Polyhedron p = newton_polyhedron(j);
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  const Rational box = Rational(power(top, n) * fact);
  const Rational rest = box - normalized_volume(intersect(p, box_inequalities(n, top, true)));
  if (rest.get_den() != 1) throw std::logic_error("co-volume of a lattice polyhedron is not integral");
  return rest.get_num();
}

MonomialIdeal multiply_by_monomial(const IntVector& w, const MonomialIdeal& j) {
  if (w.size() != j.nvars()) throw InputError("monomial has wrong number of exponents");
  std::vector<IntVector> gens;
  for (const auto& g : j.generators()) {
    IntVector h = g;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (w[i] < 0) throw InputError("negative exponent in monomial");
      h[i] += w[i];
    }
    gens.push_back(std::move(h));
  }
  return MonomialIdeal(j.nvars(), std::move(gens));
}

Integer j_via_wJ(const IntVector& w, const MonomialIdeal& j) {
  const MonomialIdeal product = multiply_by_monomial(w, j);
  Integer total = zero_dim_multiplicity(j);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    // A ring of dimension zero has multiplicity one.
    const Integer restricted =
        j.nvars() == 1 ? Integer(1) : zero_dim_multiplicity(j.restrict_to_coordinate_hyperplane(i));
    total += w[i] * restricted;
  }
  const Integer direct = j_monomial(product);
  if (direct != total)
    throw CrossCheckError("j_via_wJ", "associativity sum " + to_string(total) +
                                          " differs from the compact-facet sum " + to_string(direct));
  return total;
}

// ---------------------------------------------------------------------------
// Closed forms

Integer hypersimplex_volume(std::size_t m, std::size_t n) {
  if (m < 1 || m > n) throw InputError("hypersimplex needs 1 <= m <= n");
  Integer total = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    // 0^0 = 1, as printed.
    const Integer term = binomial(n, k) * power(Integer(static_cast<unsigned long>(m - k)), n - 1);
    total += k % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

Integer multipartite_bound(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  for (auto q : parts) {
    if (q == 0) throw InputError("multipartition has an empty part");
    n += q;
  }
  Integer total = power(Integer(2), n);
  for (auto q : parts)
    for (std::size_t j = 1; j <= q; ++j) total -= 2 * binomial(n - 1, j - 1);
  return total;
}

Integer closed_form_j(const JFamily& family) {
  struct Visitor {
    Integer operator()(const CompleteUniform& f) const {
      return Integer(static_cast<unsigned long>(f.m)) * hypersimplex_volume(f.m, f.n);
    }
    Integer operator()(const UnicyclicOdd& f) const {
      if (f.c == 0) throw InputError("unicyclic family needs c >= 1");
      return power(Integer(2), f.c);
    }
    Integer operator()(const UniformEdgesEqualNodes& f) const {
      if (f.m == 0 || f.c == 0) throw InputError("e = n family needs m, c >= 1");
      return power(Integer(static_cast<unsigned long>(f.m)), f.c);
    }
    Integer operator()(const BicyclicFamily& f) const {
      if (f.m == 0 || f.c == 0 || f.l <= 0) throw InputError("bicyclic family needs m, c, l >= 1");
      return power(Integer(static_cast<unsigned long>(f.m)), f.c) * f.l;
    }
    Integer operator()(const CompleteMultipartite& f) const {
      if (f.parts.size() < 3) throw InputError("multipartite closed form needs at least 3 parts");
      return multipartite_bound(f.parts);
    }
  };
  return std::visit(Visitor{}, family);
}

Rational closed_form_epsilon(const EpsilonFamily& family) {
  struct Visitor {
    Rational operator()(const CompleteUniform& f) const {
      if (f.n < 2) throw InputError("complete family needs n >= 2");
      return make_rational(Integer(static_cast<unsigned long>(f.n - f.m)) * hypersimplex_volume(f.m, f.n),
                           Integer(static_cast<unsigned long>(f.n - 1)));
    }
    Rational operator()(const CycleFamily& f) const {
      if (f.n < 3) throw InputError("cycles have at least 3 nodes");
      if (f.n % 2 == 0) return 0;
      return make_rational(2, Integer(static_cast<unsigned long>(f.n + 1)));
    }
  };
  return std::visit(Visitor{}, family);
}

Bounds bounds_report(const Hypergraph& g, const Integer& j, std::optional<std::size_t> tulgeity,
                     const std::vector<std::size_t>& multipartition) {
  Bounds b;
  const auto m = g.uniformity();
  if (!m) {
    b.sources = "no bounds: hypergraph is not uniform";
    return b;
  }
  const std::size_t n = g.node_count();
  b.upper = Integer(static_cast<unsigned long>(*m)) * hypersimplex_volume(std::min(*m, n), n);
  b.sources = "upper: complete " + std::to_string(*m) + "-uniform hypergraph on " + std::to_string(n) + " nodes";
  if (*m == 2 && !multipartition.empty()) {
    std::size_t total = 0;
    for (auto q : multipartition) total += q;
    if (total != n) throw InputError("multipartition sizes must sum to the node count");
    const Integer refined = multipartite_bound(multipartition);
    if (refined < *b.upper) {
      b.upper = refined;
      b.sources = "upper: complete multipartite graph of the supplied type";
    }
  }
  if (*m == 2 && j != 0 && tulgeity) {
    b.lower = power(Integer(2), *tulgeity);
    b.sources += "; lower: 2^tau with odd tulgeity " + std::to_string(*tulgeity);
  } else if (*m == 2 && j != 0) {
    b.sources += "; lower: odd tulgeity not computed";
  }
  if ((b.lower && j < *b.lower) || (b.upper && j > *b.upper))
    throw CrossCheckError("bounds", "j = " + to_string(j) + " outside [" +
                                        (b.lower ? to_string(*b.lower) : std::string("-")) + ", " +
                                        to_string(*b.upper) + "]");
  return b;
}

// ---------------------------------------------------------------------------
// Report

namespace {

class Checks {
 public:
  explicit Checks(std::vector<CrossCheck>& out) : out_(out) {}

  void equal(const std::string& name, const std::string& expected, const std::string& computed) {
    out_.push_back({name, expected, computed, expected == computed});
    if (expected != computed)
      throw CrossCheckError(name, "expected " + expected + ", computed " + computed);
  }
  void holds(const std::string& name, bool ok, const std::string& detail) {
    out_.push_back({name, "true", ok ? "true" : "false", ok});
    if (!ok) throw CrossCheckError(name, detail);
  }

 private:
  std::vector<CrossCheck>& out_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Parts of a complete multipartite simple graph (non-adjacency is an
// equivalence relation), or empty.
std::vector<std::size_t> multipartite_parts(const Hypergraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
  std::vector<int> part(n, -1);
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    part[v] = static_cast<int>(sizes.size());
    sizes.push_back(1);
    for (std::size_t w = v + 1; w < n; ++w)
      if (!adj[v][w] && part[w] < 0) {
        part[w] = part[v];
        ++sizes.back();
      }
  }
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = v + 1; w < n; ++w)
      if ((part[v] == part[w]) == adj[v][w]) return {};
  return sizes;
}

}  // namespace

MultiplicityReport report(const Hypergraph& g, const ReportOptions& options) {
  MultiplicityReport r;
  const auto m = g.uniformity();
  const bool simple = m == 2u;
  r.profile = profile(g, options.tulgeity && simple, options.tulgeity_cap);
  const auto& pr = r.profile;
  const std::size_t n = pr.n;
  Checks check(r.cross_checks);

  const EdgeIdeal ei = edge_ideal(g);
  if (ei.reduced) r.notes.push_back("edge monomials are not an antichain; dominated ones were dropped");

  // j, two ways when uniform.
  if (m) {
    const auto [by_components, whole] = j_edge_routes(g);
    check.equal("j: component product vs compact-facet sum", to_string(whole), to_string(by_components));
    r.j = whole;
  } else {
    r.j = j_monomial(ei.ideal);
  }

  // Spread.
  r.analytic_spread = analytic_spread(ei.ideal);
  if (m) {
    check.equal("spread: bounded faces vs rank M(G)", std::to_string(rank(incidence_matrix(g))),
                std::to_string(r.analytic_spread));
    if (pr.pivot_hypotheses)
      check.equal("spread: bounded faces vs n - p + c", std::to_string(n - pr.p + pr.c),
                  std::to_string(r.analytic_spread));
  }
  const bool full_spread = r.analytic_spread == n;
  check.equal("j = 0 iff spread < n", yes_no(!full_spread), yes_no(r.j == 0));

  if (options.epsilon) {
    r.epsilon = epsilon_monomial(ei.ideal);
    check.holds("0 <= epsilon <= j", *r.epsilon >= 0 && *r.epsilon <= Rational(r.j),
                "epsilon = " + to_string(*r.epsilon) + ", j = " + to_string(r.j));
    check.equal("epsilon = 0 iff spread < n", yes_no(!full_spread), yes_no(*r.epsilon == 0));
  }

  r.toric_height = toric_height(g);
  r.edge_subring_multiplicity = edge_subring_multiplicity(g);

  if (pr.pivot_hypotheses) {
    check.equal("j != 0 iff one pivot class per component", yes_no(pr.p == pr.c), yes_no(r.j != 0));
    if (r.edge_subring_multiplicity.value)
      check.equal("j = m^c e(k[G])", to_string(r.j),
                  to_string(*r.edge_subring_multiplicity.value *
                            Rational(power(Integer(static_cast<unsigned long>(*m)), pr.c))));
  }
  if (simple) {
    check.equal("simple graph: j != 0 iff no bipartite component", yes_no(*pr.c0 == 0), yes_no(r.j != 0));
  }

  // Families with closed forms.
  if (m && g.edge_count() == binomial(n, *m)) {
    r.families.push_back("complete " + std::to_string(*m) + "-uniform hypergraph");
    check.equal("closed form j (complete uniform)", to_string(closed_form_j(CompleteUniform{*m, n})),
                to_string(r.j));
    // The pyramid-over-F description behind the closed form only holds when
    // the orthant facets miss the apex region, i.e. m >= n - 1.
    if (r.epsilon && n >= 2 && *m + 1 >= n)
      check.equal("closed form epsilon (complete uniform)",
                  to_string(closed_form_epsilon(CompleteUniform{*m, n})), to_string(*r.epsilon));
    else if (r.epsilon && n >= 2)
      r.notes.push_back("closed form epsilon for complete uniform hypergraphs not applied: it undercounts when m < n - 1 (here " +
                        to_string(closed_form_epsilon(CompleteUniform{*m, n})) + ")");
  }
  bool two_regular = simple;
  for (std::size_t v = 0; v < n && two_regular; ++v) two_regular = g.degree(v) == 2;
  if (two_regular && pr.c == 1 && n >= 3) {
    r.families.push_back(std::to_string(n) + "-cycle");
    check.equal("closed form j (cycle)", n % 2 ? "2" : "0", to_string(r.j));
    if (r.epsilon)
      check.equal("closed form epsilon (cycle)", to_string(closed_form_epsilon(CycleFamily{n})),
                  to_string(*r.epsilon));
  }

  if (simple && pr.isolated_nodes.empty()) {
    // Per-component edge counts decide unicyclic / bicyclic shapes.
    bool all_small = true, all_unicyclic = true;
    Integer walk_product = 1;
    const auto odd = bipartite_components(g).has_odd_cycle;
    for (std::size_t k = 0; k < pr.components.size(); ++k) {
      const auto& comp = pr.components[k];
      const Hypergraph sub = g.induced(comp);
      if (sub.edge_count() == comp.size()) continue;
      all_unicyclic = false;
      if (sub.edge_count() != comp.size() + 1) {
        all_small = false;
        break;
      }
      const auto shape = classify_bicyclic(sub);
      if (shape.walk_half_length) walk_product *= static_cast<unsigned long>(*shape.walk_half_length);
      else walk_product = 0;
    }
    const bool nonbipartite = std::all_of(odd.begin(), odd.end(), [](bool b) { return b; });
    if (all_unicyclic && nonbipartite) {
      r.families.push_back("unicyclic components with odd cycles");
      check.equal("closed form j (unicyclic)", to_string(closed_form_j(UnicyclicOdd{pr.c})), to_string(r.j));
    } else if (all_small && nonbipartite && walk_product != 0) {
      r.families.push_back("unicyclic and bicyclic components");
      check.equal("closed form j (bicyclic walks)",
                  to_string(closed_form_j(BicyclicFamily{2, pr.c, walk_product})), to_string(r.j));
    }
    const auto parts = multipartite_parts(g);
    if (parts.size() >= 3) {
      r.families.push_back("complete multipartite graph with " + std::to_string(parts.size()) + " parts");
      const Integer closed = closed_form_j(CompleteMultipartite{parts});
      check.equal("closed form j (complete multipartite)", to_string(closed), to_string(r.j));
      if (r.edge_subring_multiplicity.value)
        check.equal("multipartite: j = 2 e(k[G])", to_string(closed),
                    to_string(Rational(2) * *r.edge_subring_multiplicity.value));
    }
  }
  if (m && pr.pivot_hypotheses && g.edge_count() == n && pr.p == pr.c) {
    r.families.push_back("uniform with e = n");
    check.equal("closed form j (e = n)", to_string(closed_form_j(UniformEdgesEqualNodes{*m, pr.c})),
                to_string(r.j));
  }

  r.bounds = bounds_report(g, r.j, pr.tulgeity_odd, {});
  if (r.bounds.upper) {
    check.holds("j <= upper bound", r.j <= *r.bounds.upper, "");
    if (r.epsilon) check.holds("epsilon <= upper bound", *r.epsilon <= Rational(*r.bounds.upper), "");
  }
  if (r.bounds.lower) check.holds("lower bound <= j", *r.bounds.lower <= r.j, "");

  if (simple && pr.c == 1 && r.j != 0) {
    const long bound = 2 * (static_cast<long>(g.edge_count()) - static_cast<long>(n) + 1);
    r.notes.push_back("informational: j >= " + std::to_string(bound) +
                      ", requires Cohen-Macaulay edge subring (unverified)");
  }
  return r;
}

}  // namespace genmult
