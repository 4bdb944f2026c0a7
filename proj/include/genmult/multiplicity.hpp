#pragma once

// j-multiplicity, epsilon-multiplicity, analytic spread and the closed forms
// used to cross-check them.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "genmult/exact_linalg.hpp"
#include "genmult/hypergraph.hpp"
#include "genmult/polyhedra.hpp"

namespace genmult {

/// One term h(F) * Vol_{n-1}(F) of the compact-facet sum.
struct FacetTerm {
  IntVector normal;
  Integer lattice_distance;
  Integer relative_volume;
  std::vector<IntVector> vertices;
  Integer contribution() const { return lattice_distance * relative_volume; }
};

std::vector<FacetTerm> compact_facet_terms(const MonomialIdeal& ideal);

/// Sum over compact facets of P(I) of lattice distance times relative volume.
Integer j_monomial(const MonomialIdeal& ideal);

/// Computed per connected component as m * Vol(F(G_k)) and multiplied, then
/// compared with j_monomial of the whole edge ideal. Throws InputError for
/// non-uniform G and CrossCheckError when the two disagree.
Integer j_edge(const Hypergraph& g);

/// 1 + maximal dimension of a bounded face of P(I).
std::size_t analytic_spread(const MonomialIdeal& ideal);

/// analytic_spread of the edge ideal, checked against rank(M(G)) for uniform
/// G and against n - p + c under proper connectivity.
std::size_t analytic_spread_edge(const Hypergraph& g);

/// Intersection over i of the preimages of the coordinate projections of P,
/// together with the orthant. Contains P.
Polyhedron epsilon_hull(const Polyhedron& p);

/// Region used to cut P-hat and P down to bounded polytopes. Both contain
/// P-hat minus P; the simplex has far fewer vertices once intersected.
enum class EpsilonRegion {
  Simplex,  // z >= 0, sum z <= 1 + sum_i max_v v_i
  Box,      // [0, M]^n, M = 1 + largest vertex coordinate of P and P-hat
};

/// Vol_n(closure of P-hat minus P).
Rational epsilon_monomial(const MonomialIdeal& ideal, EpsilonRegion region = EpsilonRegion::Simplex);

/// A value that may be undefined, with the reason when it is.
template <class T>
struct Maybe {
  std::optional<T> value;
  std::string reason;
};

/// j / m^c, also checked against the edge polytope volume, which must equal
/// m^(c-1) * e(k[G]). None unless G is uniform, properly connected without
/// isolated nodes, and j != 0.
Maybe<Rational> edge_subring_multiplicity(const Hypergraph& g);

/// e - n + p - c under the same hypotheses; cross-checked against e - rank M(G).
Maybe<Integer> toric_height(const Hypergraph& g);

/// Vol_n of the complement of P(J) in the orthant. Throws InputError unless
/// J is zero-dimensional.
Integer zero_dim_multiplicity(const MonomialIdeal& j);

/// The ideal x^w * J.
MonomialIdeal multiply_by_monomial(const IntVector& w, const MonomialIdeal& j);

/// e(J) + sum_i w_i e(J restricted to x_i = 0), checked against
/// j_monomial(x^w J). Throws CrossCheckError on disagreement.
Integer j_via_wJ(const IntVector& w, const MonomialIdeal& j);

// Closed-form families.

/// Sum_{k=0}^{m} (-1)^k C(n,k) (m-k)^(n-1), the normalized volume of the
/// (m, n)-hypersimplex. Requires 1 <= m <= n.
Integer hypersimplex_volume(std::size_t m, std::size_t n);

struct CompleteUniform { std::size_t m = 0, n = 0; };
struct UnicyclicOdd { std::size_t c = 0; };
struct UniformEdgesEqualNodes { std::size_t m = 0, c = 0; };
struct BicyclicFamily { std::size_t m = 0, c = 0; Integer l; };
struct CompleteMultipartite { std::vector<std::size_t> parts; };
struct CycleFamily { std::size_t n = 0; };

using JFamily = std::variant<CompleteUniform, UnicyclicOdd, UniformEdgesEqualNodes, BicyclicFamily,
                             CompleteMultipartite>;
using EpsilonFamily = std::variant<CompleteUniform, CycleFamily>;

/// Throws InputError when the parameters are outside the family.
Integer closed_form_j(const JFamily& family);
Rational closed_form_epsilon(const EpsilonFamily& family);

/// 2^n - 2 sum_i sum_{j=1}^{q_i} C(n-1, j-1) for any partition (q_i) of n.
Integer multipartite_bound(const std::vector<std::size_t>& parts);

struct Bounds {
  std::optional<Integer> lower;
  std::optional<Integer> upper;
  std::string sources;
};

/// Upper bound from the complete m-uniform hypergraph (refined by a supplied
/// multipartition for simple graphs); lower bound 2^tau for simple graphs
/// with known odd tulgeity, emitted only when j != 0.
Bounds bounds_report(const Hypergraph& g, const Integer& j, std::optional<std::size_t> tulgeity,
                     const std::vector<std::size_t>& multipartition = {});

struct CrossCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = true;
};

struct ReportOptions {
  bool tulgeity = true;
  std::size_t tulgeity_cap = 14;
  bool epsilon = true;
};

struct MultiplicityReport {
  CombinatorialProfile profile;
  Integer j;
  std::optional<Rational> epsilon;
  std::size_t analytic_spread = 0;
  Maybe<Integer> toric_height;
  Maybe<Rational> edge_subring_multiplicity;
  Bounds bounds;
  std::vector<std::string> families;
  std::vector<CrossCheck> cross_checks;
  std::vector<std::string> notes;
};

/// Everything above for one hypergraph. Throws CrossCheckError when any
/// applicable identity fails, so a returned report has only passing checks.
MultiplicityReport report(const Hypergraph& g, const ReportOptions& options = {});

}  // namespace genmult
