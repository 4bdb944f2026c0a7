#include "genmult/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cone.hpp"
#include "genmult/error.hpp"

namespace genmult {

using detail::Bitset;

// ---------------------------------------------------------------------------
// MonomialIdeal

namespace {

bool dominates(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<IntVector> generators)
    : nvars_(nvars) {
  if (nvars == 0) throw InputError("monomial ideal needs at least one variable");
  if (generators.empty()) throw InputError("monomial ideal needs at least one generator");
  for (const auto& g : generators) {
    if (g.size() != nvars)
      throw InputError("generator has " + std::to_string(g.size()) + " exponents, expected " +
                       std::to_string(nvars));
    if (std::any_of(g.begin(), g.end(), [](const Integer& x) { return x < 0; }))
      throw InputError("negative exponent in generator");
    if (std::all_of(g.begin(), g.end(), [](const Integer& x) { return x == 0; }))
      throw InputError("zero exponent vector: the unit ideal is not supported");
  }
  std::sort(generators.begin(), generators.end(),
            [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
  const std::size_t input = generators.size();
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < generators.size() && minimal; ++j)
      if (i != j && dominates(generators[i], generators[j])) minimal = false;
    if (minimal) generators_.push_back(generators[i]);
  }
  dropped_ = input - generators_.size();
}

MonomialIdeal MonomialIdeal::restrict_to_coordinate_hyperplane(std::size_t i) const {
  if (i >= nvars_) throw InputError("coordinate index out of range");
  std::vector<IntVector> gens;
  for (const auto& g : generators_) {
    if (g[i] != 0) continue;
    IntVector h = g;
    h.erase(h.begin() + static_cast<long>(i));
    gens.push_back(std::move(h));
  }
  if (gens.empty() || nvars_ == 1)
    throw InputError("restriction to x_" + std::to_string(i + 1) + " = 0 is the zero ideal");
  return MonomialIdeal(nvars_ - 1, std::move(gens));
}

bool MonomialIdeal::is_zero_dimensional() const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    const bool pure = std::any_of(generators_.begin(), generators_.end(), [&](const IntVector& g) {
      for (std::size_t j = 0; j < nvars_; ++j)
        if ((j == i) != (g[j] != 0)) return false;
      return true;
    });
    if (!pure) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Polyhedron

bool Polyhedron::contains(std::span<const Rational> z) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const Inequality& h) { return dot(h.normal, z) >= h.rhs; });
}

std::vector<std::size_t> Polyhedron::tight_vertices(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (dot(inequalities[k].normal, vertices[v]) == inequalities[k].rhs) out.push_back(v);
  return out;
}

std::vector<std::size_t> Polyhedron::tight_rays(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rays.size(); ++r)
    if (dot(inequalities[k].normal, rays[r]) == 0) out.push_back(r);
  return out;
}

namespace {

// Homogenized generator rows (v, 1) and (r, 0).
std::vector<RatVector> homogenized(const std::vector<RatVector>& points,
                                   const std::vector<IntVector>& rays) {
  std::vector<RatVector> rows;
  for (const auto& p : points) {
    RatVector row = p;
    row.emplace_back(1);
    rows.push_back(std::move(row));
  }
  for (const auto& r : rays) {
    RatVector row(r.begin(), r.end());
    row.emplace_back(0);
    rows.push_back(std::move(row));
  }
  return rows;
}

void canonicalize(Polyhedron& p) {
  std::sort(p.vertices.begin(), p.vertices.end(),
            [](const RatVector& a, const RatVector& b) { return lex_less(a, b); });
  std::sort(p.rays.begin(), p.rays.end(),
            [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
  std::sort(p.inequalities.begin(), p.inequalities.end(),
            [](const Inequality& a, const Inequality& b) {
              if (a.normal != b.normal) return lex_less(a.normal, b.normal);
              return a.rhs < b.rhs;
            });
}

}  // namespace

Polyhedron from_inequalities(std::size_t nvars, std::vector<Inequality> inequalities) {
  // Homogenize a.z >= b to (q a, -p) . (z, t) >= 0 with b = p/q, plus t >= 0.
  std::vector<IntVector> cons;
  std::set<IntVector> seen;
  for (const auto& h : inequalities) {
    if (h.normal.size() != nvars) throw InputError("inequality has wrong dimension");
    RatVector row(h.normal.begin(), h.normal.end());
    row.push_back(-h.rhs);
    IntVector c = scale_to_primitive_integer(row);
    if (std::all_of(c.begin(), c.end() - 1, [](const Integer& x) { return x == 0; })) {
      if (c.back() < 0) throw InputError("infeasible constant inequality");
      continue;
    }
    if (seen.insert(c).second) cons.push_back(std::move(c));
  }
  const std::size_t nineq = cons.size();
  IntVector t(nvars + 1, Integer(0));
  t.back() = 1;
  cons.push_back(t);

  const auto cone = detail::extreme_rays(cons, nvars + 1);
  if (!cone.lineality.empty()) throw InputError("polyhedron contains a line");

  Polyhedron p;
  p.nvars = nvars;
  std::vector<const detail::ConeRay*> vert_src, ray_src;
  for (const auto& r : cone.rays) {
    const Integer& tt = r.coords.back();
    if (tt > 0) {
      RatVector v(nvars);
      for (std::size_t i = 0; i < nvars; ++i) v[i] = make_rational(r.coords[i], tt);
      p.vertices.push_back(std::move(v));
      vert_src.push_back(&r);
    } else {
      p.rays.push_back(IntVector(r.coords.begin(), r.coords.end() - 1));
      ray_src.push_back(&r);
    }
  }
  if (p.vertices.empty()) throw InputError("polyhedron is empty");
  if (rank(homogenized(p.vertices, p.rays)) != nvars + 1)
    throw InputError("polyhedron is not full-dimensional");

  for (std::size_t k = 0; k < nineq; ++k) {
    std::vector<RatVector> tight;
    for (std::size_t v = 0; v < vert_src.size(); ++v)
      if (vert_src[v]->zeros.test(k)) tight.push_back(p.vertices[v]);
    std::vector<IntVector> tight_r;
    for (std::size_t r = 0; r < ray_src.size(); ++r)
      if (ray_src[r]->zeros.test(k)) tight_r.push_back(p.rays[r]);
    if (tight.empty() || rank(homogenized(tight, tight_r)) != nvars) continue;
    IntVector a(cons[k].begin(), cons[k].end() - 1);
    const Integer g = content(a);
    Inequality h;
    h.rhs = make_rational(-cons[k].back(), g);
    h.normal = detail::divide_by_content(std::move(a));
    p.inequalities.push_back(std::move(h));
  }
  canonicalize(p);
  return p;
}

Polyhedron from_generators(std::size_t nvars, const std::vector<RatVector>& points,
                           const std::vector<IntVector>& rays) {
  if (points.empty()) throw InputError("polyhedron needs at least one point");
  for (const auto& p : points)
    if (p.size() != nvars) throw InputError("point has wrong dimension");
  for (const auto& r : rays)
    if (r.size() != nvars) throw InputError("ray has wrong dimension");
  const auto rows = homogenized(points, rays);
  if (rank(rows) != nvars + 1) throw InputError("generators do not span a full-dimensional set");

  // Facets of cone{(v,1),(r,0)} are extreme rays of its dual cone.
  std::vector<IntVector> cons;
  for (const auto& row : rows) cons.push_back(scale_to_primitive_integer(row));
  const auto dual = detail::extreme_rays(cons, nvars + 1);
  std::vector<Inequality> ineqs;
  for (const auto& y : dual.rays) {
    IntVector a(y.coords.begin(), y.coords.end() - 1);
    const Integer g = content(a);
    if (g == 0) continue;  // t >= 0
    ineqs.push_back({detail::divide_by_content(std::move(a)), make_rational(-y.coords.back(), g)});
  }
  return from_inequalities(nvars, std::move(ineqs));
}

Polyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  std::vector<RatVector> pts;
  for (const auto& g : ideal.generators()) pts.push_back(to_rat_vector(g));
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  return from_generators(n, pts, rays);
}

Polyhedron intersect(const Polyhedron& p, const std::vector<Inequality>& extra) {
  std::vector<Inequality> all = p.inequalities;
  all.insert(all.end(), extra.begin(), extra.end());
  return from_inequalities(p.nvars, std::move(all));
}

std::vector<Inequality> box_inequalities(std::size_t nvars, const Integer& bound, bool upper_only) {
  std::vector<Inequality> out;
  for (std::size_t i = 0; i < nvars; ++i) {
    IntVector e(nvars, Integer(0));
    e[i] = -1;
    out.push_back({e, Rational(-bound)});
    if (!upper_only) {
      e[i] = 1;
      out.push_back({e, Rational(0)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Faces

namespace {

struct Incidence {
  std::vector<Bitset> vertex_facets;  // per vertex: tight facets
  std::vector<Bitset> ray_facets;     // per ray: tight facets
  std::vector<Bitset> facet_vertices; // per facet: tight vertices
};

Incidence incidence(const Polyhedron& p) {
  const std::size_t f = p.inequalities.size();
  Incidence inc;
  inc.vertex_facets.assign(p.vertices.size(), Bitset(f));
  inc.ray_facets.assign(p.rays.size(), Bitset(f));
  inc.facet_vertices.assign(f, Bitset(p.vertices.size()));
  for (std::size_t k = 0; k < f; ++k) {
    for (auto v : p.tight_vertices(k)) {
      inc.vertex_facets[v].set(k);
      inc.facet_vertices[k].set(v);
    }
    for (auto r : p.tight_rays(k)) inc.ray_facets[r].set(k);
  }
  return inc;
}

std::size_t affine_dim(const std::vector<RatVector>& pts) {
  if (pts.empty()) return 0;
  return rank(homogenized(pts, {})) - 1;
}

std::vector<std::size_t> indices_of(const Bitset& b) {
  std::vector<std::size_t> out;
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

}  // namespace

std::vector<FaceInfo> bounded_faces(const Polyhedron& p) {
  const auto inc = incidence(p);
  const std::size_t nv = p.vertices.size();
  const std::size_t nf = p.inequalities.size();

  // Smallest face containing a vertex set: cut out by every facet tight on
  // all of them. Returns false when that face contains a ray.
  auto closure = [&](const Bitset& verts, Bitset& out_verts, Bitset& out_facets) {
    Bitset tight(nf);
    tight.set();
    for (auto v = verts.find_first(); v != Bitset::npos; v = verts.find_next(v))
      tight &= inc.vertex_facets[v];
    for (const auto& r : inc.ray_facets)
      if (tight.is_subset_of(r)) return false;
    out_verts = Bitset(nv);
    for (std::size_t v = 0; v < nv; ++v)
      if (tight.is_subset_of(inc.vertex_facets[v])) out_verts.set(v);
    out_facets = tight;
    return true;
  };

  std::map<Bitset, Bitset> found;  // vertex set -> tight facets
  std::vector<Bitset> frontier;
  for (std::size_t v = 0; v < nv; ++v) {
    Bitset single(nv), verts, facets;
    single.set(v);
    if (closure(single, verts, facets) && found.emplace(verts, facets).second)
      frontier.push_back(verts);
  }
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const auto& face : frontier) {
      for (std::size_t w = 0; w < nv; ++w) {
        if (face.test(w)) continue;
        Bitset grown = face, verts, facets;
        grown.set(w);
        if (closure(grown, verts, facets) && found.emplace(verts, facets).second)
          next.push_back(verts);
      }
    }
    frontier = std::move(next);
  }

  std::vector<FaceInfo> faces;
  for (const auto& [verts, facets] : found) {
    FaceInfo info;
    info.vertex_indices = indices_of(verts);
    std::vector<RatVector> pts;
    for (auto v : info.vertex_indices) pts.push_back(p.vertices[v]);
    info.dim = affine_dim(pts);
    info.bounded = true;
    if (info.dim + 1 == p.nvars && facets.count() == 1) {
      const auto k = facets.find_first();
      info.normal = p.inequalities[k].normal;
      info.lattice_distance = p.inequalities[k].rhs;
    }
    faces.push_back(std::move(info));
  }
  std::sort(faces.begin(), faces.end(), [](const FaceInfo& a, const FaceInfo& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_indices < b.vertex_indices;
  });
  return faces;
}

std::vector<FaceInfo> compact_facets(const Polyhedron& p) {
  std::vector<FaceInfo> out;
  for (std::size_t k = 0; k < p.inequalities.size(); ++k) {
    if (!p.tight_rays(k).empty()) continue;
    FaceInfo info;
    info.normal = p.inequalities[k].normal;
    info.lattice_distance = p.inequalities[k].rhs;
    info.vertex_indices = p.tight_vertices(k);
    info.dim = p.nvars - 1;
    out.push_back(std::move(info));
  }
  return out;
}

std::size_t max_bounded_face_dim(const Polyhedron& p) {
  std::size_t best = 0;
  for (const auto& f : bounded_faces(p)) best = std::max(best, f.dim);
  return best;
}

// ---------------------------------------------------------------------------
// Volumes

namespace {

// Pulling decomposition: Vol(G) = sum over facets H of G missing the first
// vertex v0 of G of (lattice height of v0 over H) * Vol(H). Volumes are
// measured in coordinate projections that are injective on the affine hull;
// dropping coordinate s from a hyperplane a.x = b scales by |a_s|.
class PullingVolume {
 public:
  explicit PullingVolume(const Polyhedron& p) : p_(p), inc_(incidence(p)) {}

  Rational full() {
    Bitset all(p_.vertices.size());
    all.set();
    std::vector<std::size_t> coords(p_.nvars);
    for (std::size_t i = 0; i < p_.nvars; ++i) coords[i] = i;
    return volume(all, coords);
  }

  std::vector<std::vector<std::size_t>> triangulate() {
    Bitset all(p_.vertices.size());
    all.set();
    return simplices(all);
  }

 private:
  std::vector<Bitset> facets_of(const Bitset& face) const {
    std::vector<Bitset> cand;
    for (const auto& f : inc_.facet_vertices) {
      Bitset s = face & f;
      if (s.none() || s == face) continue;
      if (std::find(cand.begin(), cand.end(), s) == cand.end()) cand.push_back(std::move(s));
    }
    std::vector<Bitset> out;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < cand.size() && maximal; ++j)
        if (i != j && cand[i].is_proper_subset_of(cand[j])) maximal = false;
      if (maximal) out.push_back(cand[i]);
    }
    return out;
  }

  Rational volume(const Bitset& face, const std::vector<std::size_t>& coords) {
    const std::size_t k = coords.size();
    if (k == 0) return 1;
    std::uint64_t mask = 0;
    for (auto c : coords) mask |= std::uint64_t{1} << c;
    auto key = std::make_pair(face, mask);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::size_t v0 = face.find_first();
    auto project = [&](std::size_t v) {
      RatVector x(k);
      for (std::size_t i = 0; i < k; ++i) x[i] = p_.vertices[v][coords[i]];
      return x;
    };
    const RatVector apex = project(v0);

    Rational total = 0;
    for (const auto& sub : facets_of(face)) {
      if (sub.test(v0)) continue;
      std::vector<RatVector> rows;
      for (auto v = sub.find_first(); v != Bitset::npos; v = sub.find_next(v)) {
        RatVector row = project(v);
        row.emplace_back(1);
        rows.push_back(std::move(row));
      }
      const auto ns = nullspace(rows, k + 1);
      if (ns.size() != 1) throw std::logic_error("face is not a hyperplane section");
      const RatVector& h = ns.front();  // h[0..k) . x + h[k] = 0
      std::size_t s = 0;
      while (h[s] == 0) ++s;
      Rational height = h[k];
      for (std::size_t i = 0; i < k; ++i) height += h[i] * apex[i];
      std::vector<std::size_t> sub_coords = coords;
      sub_coords.erase(sub_coords.begin() + static_cast<long>(s));
      total += abs(height) / abs(h[s]) * volume(sub, sub_coords);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<std::vector<std::size_t>> simplices(const Bitset& face) {
    if (face.count() == 1) return {{face.find_first()}};
    if (auto it = tri_memo_.find(face); it != tri_memo_.end()) return it->second;
    const std::size_t v0 = face.find_first();
    std::vector<std::vector<std::size_t>> out;
    for (const auto& sub : facets_of(face)) {
      if (sub.test(v0)) continue;
      for (auto s : simplices(sub)) {
        s.insert(s.begin(), v0);
        out.push_back(std::move(s));
      }
    }
    tri_memo_.emplace(face, out);
    return out;
  }

  const Polyhedron& p_;
  Incidence inc_;
  std::map<std::pair<Bitset, std::uint64_t>, Rational> memo_;
  std::map<Bitset, std::vector<std::vector<std::size_t>>> tri_memo_;
};

}  // namespace

Rational normalized_volume(const Polyhedron& p) {
  if (!p.bounded()) throw InputError("normalized_volume of an unbounded polyhedron");
  if (p.nvars > 64) throw InputError("normalized_volume supports at most 64 dimensions");
  return PullingVolume(p).full();
}

Rational normalized_volume(const std::vector<RatVector>& points, std::size_t nvars) {
  if (points.empty()) return 0;
  for (const auto& q : points)
    if (q.size() != nvars) throw InputError("point has wrong dimension");
  if (nvars == 0) return 1;
  if (affine_dim(points) < nvars) return 0;
  return normalized_volume(from_generators(nvars, points, {}));
}

std::vector<std::vector<std::size_t>> pulling_triangulation(const Polyhedron& p) {
  if (!p.bounded()) throw InputError("cannot triangulate an unbounded polyhedron");
  return PullingVolume(p).triangulate();
}

Rational simplex_volume(const std::vector<RatVector>& simplex) {
  if (simplex.empty()) throw InputError("empty simplex");
  const std::size_t n = simplex.size() - 1;
  std::vector<RatVector> rows;
  for (std::size_t i = 1; i <= n; ++i) {
    if (simplex[i].size() != n) throw InputError("simplex needs n + 1 points in R^n");
    RatVector d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = simplex[i][j] - simplex[0][j];
    rows.push_back(std::move(d));
  }
  return abs(determinant(rows));
}

Integer relative_normalized_volume(const std::vector<IntVector>& vertices,
                                   std::span<const Integer> u, const Rational& b,
                                   const IntMatrix& kernel_basis) {
  if (vertices.empty()) throw InputError("relative volume of an empty polytope");
  const std::size_t n = u.size();
  if (content(u) != 1) throw InputError("hyperplane normal is not primitive");
  for (const auto& v : vertices) {
    if (v.size() != n) throw InputError("vertex has wrong dimension");
    if (Rational(dot(u, v)) != b) throw InputError("vertex does not lie on the hyperplane");
  }
  if (n == 1) return 1;
  if (kernel_basis.rows() != n - 1 || kernel_basis.cols() != n)
    throw InputError("kernel basis has wrong shape");

  std::vector<RatVector> basis;
  for (const auto& row : kernel_basis.row_vectors()) {
    if (dot(u, row) != 0) throw InputError("kernel basis row is not orthogonal to u");
    basis.push_back(to_rat_vector(row));
  }
  std::vector<RatVector> coords;
  for (const auto& v : vertices) {
    RatVector diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = v[i] - vertices.front()[i];
    auto y = solve_row_combination(basis, diff);
    if (!y) throw InputError("kernel basis does not span the hyperplane");
    coords.push_back(std::move(*y));
  }
  const Rational vol = normalized_volume(coords, n - 1);
  if (vol.get_den() != 1) throw InputError("kernel basis is not a lattice basis");
  return vol.get_num();
}

Integer relative_normalized_volume(const std::vector<IntVector>& vertices,
                                   std::span<const Integer> u, const Rational& b) {
  if (u.size() == 1) return relative_normalized_volume(vertices, u, b, IntMatrix());
  return relative_normalized_volume(vertices, u, b, hyperplane_lattice_basis(u, u.size()));
}

Rational pyramid_volume(const Polyhedron& p, const FaceInfo& facet, std::span<const Rational> apex) {
  if (!facet.is_facet(p.nvars)) throw InputError("pyramid_volume needs a compact facet");
  if (apex.size() != p.nvars) throw InputError("apex has wrong dimension");
  const Rational height = facet.lattice_distance - dot(facet.normal, apex);
  if (height < 0) throw InputError("apex lies beyond the facet hyperplane");
  std::vector<IntVector> verts;
  for (auto v : facet.vertex_indices) {
    IntVector iv;
    for (const auto& x : p.vertices[v]) {
      if (x.get_den() != 1) throw InputError("facet has non-lattice vertices");
      iv.push_back(x.get_num());
    }
    verts.push_back(std::move(iv));
  }
  return height * Rational(relative_normalized_volume(verts, facet.normal, facet.lattice_distance));
}

Polyhedron coordinate_projection(const Polyhedron& p, std::size_t i) {
  if (i >= p.nvars) throw InputError("projection index out of range");
  if (p.nvars < 2) throw InputError("cannot project a one-dimensional polyhedron");
  std::set<IntVector> rays(p.rays.begin(), p.rays.end());
  for (std::size_t j = 0; j < p.nvars; ++j) {
    IntVector e(p.nvars, Integer(0));
    e[j] = 1;
    if (!rays.count(e)) throw InputError("recession cone is not the nonnegative orthant");
  }
  if (rays.size() != p.nvars) throw InputError("recession cone is not the nonnegative orthant");

  const std::size_t n = p.nvars - 1;
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices) {
    RatVector w = v;
    w.erase(w.begin() + static_cast<long>(i));
    pts.push_back(std::move(w));
  }
  std::vector<IntVector> orth;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, Integer(0));
    e[j] = 1;
    orth.push_back(std::move(e));
  }
  return from_generators(n, pts, orth);
}

MonomialIdeal direct_sum_ideal(const MonomialIdeal& first, const MonomialIdeal& second) {
  const std::size_t n1 = first.nvars(), n2 = second.nvars();
  std::vector<IntVector> gens;
  for (const auto& g : first.generators()) {
    IntVector h = g;
    h.resize(n1 + n2, Integer(0));
    gens.push_back(std::move(h));
  }
  for (const auto& g : second.generators()) {
    IntVector h(n1, Integer(0));
    h.insert(h.end(), g.begin(), g.end());
    gens.push_back(std::move(h));
  }
  return MonomialIdeal(n1 + n2, std::move(gens));
}

}  // namespace genmult
