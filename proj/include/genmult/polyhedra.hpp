#pragma once

// Exact rational polyhedra: Newton polyhedra of monomial ideals, conversion
// between inequality and generator descriptions, bounded faces and
// normalized lattice volumes.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "genmult/exact_linalg.hpp"

namespace genmult {

/// Minimal generators of a monomial ideal, as exponent vectors.
///
/// Construction discards dominated generators (those componentwise >= some
/// other generator) and sorts the survivors lexicographically, so two ideals
/// compare equal iff they have the same minimal generators.
class MonomialIdeal {
 public:
  /// Throws InputError for an empty list, a zero vector (unit ideal),
  /// negative exponents or ragged vectors.
  MonomialIdeal(std::size_t nvars, std::vector<IntVector> generators);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  /// Number of input vectors removed as non-minimal (duplicates included).
  std::size_t dropped() const noexcept { return dropped_; }

  /// I restricted to x_i = 0: generators divisible by x_i vanish and the
  /// i-th coordinate is deleted. Throws InputError when nothing survives.
  MonomialIdeal restrict_to_coordinate_hyperplane(std::size_t i) const;

  /// Every variable has a pure power among the generators.
  bool is_zero_dimensional() const;

  bool operator==(const MonomialIdeal& other) const {
    return nvars_ == other.nvars_ && generators_ == other.generators_;
  }

 private:
  std::size_t nvars_;
  std::vector<IntVector> generators_;
  std::size_t dropped_ = 0;
};

/// <normal, z> >= rhs, with `normal` primitive.
struct Inequality {
  IntVector normal;
  Rational rhs;

  bool operator==(const Inequality&) const = default;
};

/// Full-dimensional pointed polyhedron carried in both descriptions.
///
/// `inequalities` lists exactly the facets (irredundant), `vertices` and
/// `rays` the minimal generators. All lists are sorted lexicographically.
struct Polyhedron {
  std::size_t nvars = 0;
  std::vector<Inequality> inequalities;
  std::vector<RatVector> vertices;
  std::vector<IntVector> rays;

  bool bounded() const noexcept { return rays.empty(); }
  bool contains(std::span<const Rational> z) const;

  /// Indices of vertices / rays on which inequality k is tight.
  std::vector<std::size_t> tight_vertices(std::size_t k) const;
  std::vector<std::size_t> tight_rays(std::size_t k) const;

  bool operator==(const Polyhedron&) const = default;
};

/// A bounded face of a polyhedron. For facets (dim == nvars - 1) the
/// supporting inequality is recorded; otherwise `normal` is empty.
struct FaceInfo {
  IntVector normal;
  std::vector<std::size_t> vertex_indices;
  std::size_t dim = 0;
  bool bounded = true;
  Rational lattice_distance;

  bool is_facet(std::size_t nvars) const { return dim + 1 == nvars && !normal.empty(); }
};

/// Pointed polyhedron given by inequalities. Throws InputError if the set
/// is empty, contains a line, or is not full-dimensional.
Polyhedron from_inequalities(std::size_t nvars, std::vector<Inequality> inequalities);

/// conv(points) + cone(rays). Throws InputError if not full-dimensional or
/// if the result contains a line.
Polyhedron from_generators(std::size_t nvars, const std::vector<RatVector>& points,
                           const std::vector<IntVector>& rays);

/// conv(generators) + nonnegative orthant.
Polyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// All bounded faces (vertices, edges, ..., compact facets), ordered by
/// dimension and then by vertex index list.
std::vector<FaceInfo> bounded_faces(const Polyhedron& p);

/// Bounded faces of dimension nvars - 1.
std::vector<FaceInfo> compact_facets(const Polyhedron& p);

/// Maximal dimension of a bounded face.
std::size_t max_bounded_face_dim(const Polyhedron& p);

/// Normalized volume of conv(vertices) relative to the lattice of the
/// hyperplane <u, z> = b. Zero when the polytope has dimension < n - 1.
/// Throws InputError if u is not primitive or a vertex is off the hyperplane.
Integer relative_normalized_volume(const std::vector<IntVector>& vertices,
                                   std::span<const Integer> u, const Rational& b);

/// Same, with an explicitly supplied lattice basis of {<u,z> = 0} (rows).
Integer relative_normalized_volume(const std::vector<IntVector>& vertices,
                                   std::span<const Integer> u, const Rational& b,
                                   const IntMatrix& kernel_basis);

/// n! * Euclidean volume of conv(points); 0 if degenerate.
Rational normalized_volume(const std::vector<RatVector>& points, std::size_t nvars);

/// n! * Euclidean volume of a bounded polyhedron. Throws InputError if unbounded.
Rational normalized_volume(const Polyhedron& p);

/// Pulling triangulation of a bounded full-dimensional polyhedron, as lists
/// of n + 1 vertex indices.
std::vector<std::vector<std::size_t>> pulling_triangulation(const Polyhedron& p);

/// |det| of the simplex with the given vertices (n + 1 points in R^n).
Rational simplex_volume(const std::vector<RatVector>& simplex);

/// (h(F) - <u, apex>) * Vol_{n-1}(F) for a compact facet F of p.
/// Throws InputError if the apex lies strictly beyond the facet hyperplane
/// or the face is not a facet.
Rational pyramid_volume(const Polyhedron& p, const FaceInfo& facet,
                        std::span<const Rational> apex);

/// Image of a Newton-type polyhedron (recession cone = orthant) under the
/// projection deleting coordinate i. Throws InputError when i is out of
/// range, nvars < 2, or the recession cone is not the orthant.
Polyhedron coordinate_projection(const Polyhedron& p, std::size_t i);

/// Generators of each ideal padded with zeros on the other block.
MonomialIdeal direct_sum_ideal(const MonomialIdeal& first, const MonomialIdeal& second);

/// Intersection with additional inequalities.
Polyhedron intersect(const Polyhedron& p, const std::vector<Inequality>& extra);

/// The box 0 <= z_i <= bound as inequalities (upper bounds only when
/// `upper_only` is set).
std::vector<Inequality> box_inequalities(std::size_t nvars, const Integer& bound,
                                         bool upper_only = false);

}  // namespace genmult
