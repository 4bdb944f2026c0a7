#include "cone.hpp"

#include <algorithm>
#include <numeric>

namespace genmult::detail {

IntVector divide_by_content(IntVector a) {
  const Integer g = content(a);
  if (g > 1)
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return a;
}

namespace {

// s * x - t * y, divided by its content.
IntVector combine(const Integer& s, const IntVector& x, const Integer& t, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] - t * y[i];
  return divide_by_content(std::move(out));
}

}  // namespace

ConeDescription extreme_rays(const std::vector<IntVector>& constraints, std::size_t dim) {
  const std::size_t m = constraints.size();
  ConeDescription cone;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    cone.lineality.push_back(std::move(e));
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(constraints[a], constraints[b]);
  });

  Bitset processed(m);
  for (std::size_t idx : order) {
    const IntVector& c = constraints[idx];

    // A lineality direction not orthogonal to c becomes a ray; everything
    // else is projected onto the hyperplane <c, x> = 0 along it.
    auto lin = std::find_if(cone.lineality.begin(), cone.lineality.end(),
                            [&](const IntVector& l) { return dot(c, l) != 0; });
    if (lin != cone.lineality.end()) {
      IntVector pivot = *lin;
      cone.lineality.erase(lin);
      Integer cp = dot(c, pivot);
      if (cp < 0) {
        for (auto& x : pivot) x = -x;
        cp = -cp;
      }
      for (auto& l : cone.lineality) {
        const Integer cl = dot(c, l);
        if (cl != 0) l = combine(cp, l, cl, pivot);
      }
      for (auto& r : cone.rays) {
        const Integer cr = dot(c, r.coords);
        if (cr != 0) r.coords = combine(cp, r.coords, cr, pivot);
        r.zeros.set(idx);
      }
      ConeRay fresh{divide_by_content(pivot), processed};
      cone.rays.push_back(std::move(fresh));
      processed.set(idx);
      continue;
    }

    std::vector<Integer> value(cone.rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < cone.rays.size(); ++r) {
      value[r] = dot(c, cone.rays[r].coords);
      if (value[r] > 0) pos.push_back(r);
      else if (value[r] < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < cone.rays.size(); ++r)
        if (value[r] == 0) cone.rays[r].zeros.set(idx);
      processed.set(idx);
      continue;
    }

    // Two rays are adjacent iff no third ray is tight on all constraints
    // tight on both (combinatorial test), given enough common constraints.
    const std::size_t need = dim - cone.lineality.size() >= 2 ? dim - cone.lineality.size() - 2 : 0;
    std::vector<ConeRay> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bitset common = cone.rays[p].zeros & cone.rays[q].zeros;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < cone.rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(cone.rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        // value[p] > 0 > value[q]; the combination vanishes on c.
        IntVector x = combine(value[p], cone.rays[q].coords, value[q], cone.rays[p].coords);
        common.set(idx);
        next.push_back({std::move(x), std::move(common)});
      }
    }
    for (std::size_t r = 0; r < cone.rays.size(); ++r) {
      if (value[r] > 0) {
        next.push_back(std::move(cone.rays[r]));
      } else if (value[r] == 0) {
        cone.rays[r].zeros.set(idx);
        next.push_back(std::move(cone.rays[r]));
      }
    }
    cone.rays = std::move(next);
    processed.set(idx);
  }
  return cone;
}

}  // namespace genmult::detail
