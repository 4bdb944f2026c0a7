#pragma once

// Independent checks: brute-force lattice point counts, Ehrhart
// interpolation of volumes, circulant matrices and their rank via
// polynomial gcds.

#include <cstddef>
#include <vector>

#include "genmult/exact_linalg.hpp"
#include "genmult/polyhedra.hpp"

namespace genmult {

struct DilationCount {
  std::size_t t = 0;
  Integer count;
};

/// Number of integer points z with <a, z> >= t b for every inequality of q,
/// by scanning the bounding box of t q. Throws InputError if q is unbounded.
Integer lattice_points(const Polyhedron& q, std::size_t t);

/// Counts for t = 0..n.
std::vector<DilationCount> dilation_counts(const Polyhedron& q);

/// n! times the leading coefficient of the Ehrhart polynomial, obtained by
/// exact Lagrange interpolation at t = 0..n. Throws InputError for a
/// polytope with a non-integral vertex.
Rational ehrhart_volume(const Polyhedron& q);

/// Rational polytopes: dilate by the lcm d of the vertex denominators,
/// interpolate, and divide by d^n.
Rational ehrhart_volume_dilated(const Polyhedron& q);

/// Sum over compact facets F of P(I) of the interpolated volume of
/// conv(0, F).
Rational ehrhart_j(const MonomialIdeal& ideal);

/// Rows are the cyclic shifts of u: row i has u_k in column i + k mod n.
IntMatrix circulant(const IntVector& u);

/// n - deg gcd(t^n - 1, u_0 + u_1 t + ... + u_{n-1} t^{n-1}), over Q.
std::size_t circulant_rank_by_gcd(const IntVector& u);

}  // namespace genmult
