#include "genmult/oracle.hpp"

#include <algorithm>

#include "genmult/error.hpp"

namespace genmult {

namespace {

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Depth-first scan of the box, abandoning a prefix as soon as some
// inequality cannot be met by any completion inside the box.
class Scanner {
 public:
  Scanner(const Polyhedron& q, std::size_t t) : q_(q), n_(q.nvars), lo_(n_), hi_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      Rational mn = q.vertices.front()[i], mx = mn;
      for (const auto& v : q.vertices) {
        mn = std::min(mn, v[i]);
        mx = std::max(mx, v[i]);
      }
      lo_[i] = ceil_of(mn * static_cast<long>(t));
      hi_[i] = floor_of(mx * static_cast<long>(t));
    }
    for (const auto& h : q.inequalities) rhs_.push_back(h.rhs * static_cast<long>(t));
    // Best completion of coordinates i..n-1 for every inequality.
    tail_.assign(q.inequalities.size(), std::vector<Integer>(n_ + 1, Integer(0)));
    for (std::size_t k = 0; k < q.inequalities.size(); ++k)
      for (std::size_t i = n_; i-- > 0;) {
        const Integer& a = q.inequalities[k].normal[i];
        tail_[k][i] = tail_[k][i + 1] + std::max(a * lo_[i], a * hi_[i]);
      }
    partial_.assign(q.inequalities.size(), Integer(0));
  }

  Integer count() {
    for (std::size_t i = 0; i < n_; ++i)
      if (lo_[i] > hi_[i]) return 0;
    return scan(0);
  }

 private:
  Integer scan(std::size_t depth) {
    if (depth == n_) return 1;
    Integer total = 0;
    for (Integer x = lo_[depth]; x <= hi_[depth]; ++x) {
      bool ok = true;
      for (std::size_t k = 0; k < rhs_.size() && ok; ++k) {
        const Integer val = partial_[k] + q_.inequalities[k].normal[depth] * x;
        if (Rational(val + tail_[k][depth + 1]) < rhs_[k]) ok = false;
      }
      if (!ok) continue;
      for (std::size_t k = 0; k < rhs_.size(); ++k) partial_[k] += q_.inequalities[k].normal[depth] * x;
      total += scan(depth + 1);
      for (std::size_t k = 0; k < rhs_.size(); ++k) partial_[k] -= q_.inequalities[k].normal[depth] * x;
    }
    return total;
  }

  const Polyhedron& q_;
  std::size_t n_;
  IntVector lo_, hi_;
  std::vector<Rational> rhs_;
  std::vector<std::vector<Integer>> tail_;
  IntVector partial_;
};

Rational interpolate_volume(const std::vector<DilationCount>& counts, std::size_t n) {
  // Leading coefficient of the interpolant through (t, count_t), t = 0..n.
  Rational lead = 0;
  for (std::size_t t = 0; t <= n; ++t) {
    Integer denom = 1;
    for (std::size_t s = 0; s <= n; ++s)
      if (s != t) denom *= static_cast<long>(t) - static_cast<long>(s);
    lead += make_rational(counts[t].count, denom);
  }
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  return lead * Rational(fact);
}

// Polynomials over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

Integer lattice_points(const Polyhedron& q, std::size_t t) {
  if (!q.bounded()) throw InputError("lattice_points needs a bounded polytope");
  return Scanner(q, t).count();
}

std::vector<DilationCount> dilation_counts(const Polyhedron& q) {
  std::vector<DilationCount> out;
  for (std::size_t t = 0; t <= q.nvars; ++t) out.push_back({t, lattice_points(q, t)});
  return out;
}

Rational ehrhart_volume(const Polyhedron& q) {
  for (const auto& v : q.vertices)
    for (const auto& x : v)
      if (x.get_den() != 1) throw InputError("ehrhart_volume needs integral vertices");
  return interpolate_volume(dilation_counts(q), q.nvars);
}

Rational ehrhart_volume_dilated(const Polyhedron& q) {
  if (!q.bounded()) throw InputError("ehrhart_volume_dilated needs a bounded polytope");
  Integer d = 1;
  for (const auto& v : q.vertices)
    for (const auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  Polyhedron scaled = q;
  for (auto& h : scaled.inequalities) h.rhs *= Rational(d);
  for (auto& v : scaled.vertices)
    for (auto& x : v) x *= Rational(d);
  Integer dn;
  mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), q.nvars);
  return ehrhart_volume(scaled) / Rational(dn);
}

Rational ehrhart_j(const MonomialIdeal& ideal) {
  const Polyhedron p = newton_polyhedron(ideal);
  Rational total = 0;
  for (const auto& f : compact_facets(p)) {
    std::vector<RatVector> pts{RatVector(p.nvars, Rational(0))};
    for (auto v : f.vertex_indices) pts.push_back(p.vertices[v]);
    total += ehrhart_volume(from_generators(p.nvars, pts, {}));
  }
  return total;
}

IntMatrix circulant(const IntVector& u) {
  if (u.empty() || std::all_of(u.begin(), u.end(), [](const Integer& x) { return x == 0; }))
    throw InputError("circulant needs a nonzero vector");
  const std::size_t n = u.size();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) c(i, (i + k) % n) = u[k];
  return c;
}

std::size_t circulant_rank_by_gcd(const IntVector& u) {
  const std::size_t n = u.size();
  Poly tn(n + 1, Rational(0));
  tn[0] = -1;
  tn[n] = 1;
  Poly f(u.begin(), u.end());
  trim(f);
  if (f.empty()) return 0;
  return n - (gcd(tn, f).size() - 1);
}

}  // namespace genmult
