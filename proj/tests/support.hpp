#pragma once

// Shared helpers for the test binaries: random instances and small
// brute-force reference computations.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "genmult/exact_linalg.hpp"
#include "genmult/hypergraph.hpp"
#include "genmult/polyhedra.hpp"

namespace testing_support {

using namespace genmult;

inline std::vector<std::string> node_labels(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// `edges` distinct random m-subsets of n nodes (fewer if there are not that many).
inline Hypergraph random_uniform(std::mt19937& rng, std::size_t n, std::size_t m, std::size_t edges,
                                 bool declare_all = true) {
  const auto labels = node_labels(n);
  std::set<std::vector<std::size_t>> chosen;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t tries = 0; chosen.size() < edges && tries < 50 * edges; ++tries) {
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<std::size_t> e(idx.begin(), idx.begin() + static_cast<long>(m));
    std::sort(e.begin(), e.end());
    chosen.insert(e);
  }
  std::vector<std::vector<std::string>> es;
  for (const auto& e : chosen) {
    std::vector<std::string> row;
    for (auto i : e) row.push_back(labels[i]);
    es.push_back(row);
  }
  return Hypergraph(declare_all ? labels : std::vector<std::string>{}, es);
}

inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, std::size_t gens, long max_exp) {
  std::uniform_int_distribution<long> d(0, max_exp);
  std::vector<IntVector> rows;
  while (rows.size() < gens) {
    IntVector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(d(rng));
    if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) rows.push_back(v);
  }
  return MonomialIdeal(n, rows);
}

/// Pure powers of every variable plus a few mixed generators.
inline MonomialIdeal random_zero_dim(std::mt19937& rng, std::size_t n, long max_exp) {
  std::uniform_int_distribution<long> p(1, max_exp);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n, Integer(0));
    v[i] = p(rng);
    rows.push_back(v);
  }
  std::uniform_int_distribution<int> extra(0, 3);
  std::uniform_int_distribution<long> e(0, max_exp - 1);
  for (int k = extra(rng); k > 0; --k) {
    IntVector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(e(rng));
    if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) rows.push_back(v);
  }
  return MonomialIdeal(n, rows);
}

/// Determinant by permutation expansion, for small matrices.
inline Integer leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Rank as the size of the largest nonzero minor, for small matrices.
inline std::size_t minor_rank(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        IntMatrix sub(k, k);
        std::size_t a = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          std::size_t b = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) sub(a, b++) = m(i, j);
          ++a;
        }
        if (leibniz_det(sub) != 0) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

// Two cycles joined at a1 / b1 by a path of l3 edges (l3 = 0 glues them).
inline Hypergraph dumbbell(std::size_t l1, std::size_t l2, std::size_t l3) {
  const Hypergraph a = cycle_graph(l1, "a");
  const Hypergraph b = cycle_graph(l2, "b");
  if (l3 == 0) {
    std::vector<std::vector<std::string>> es;
    for (const auto& e : b.edges()) {
      std::vector<std::string> row;
      for (auto v : e) row.push_back(b.label(v) == "b1" ? "a1" : b.label(v));
      es.push_back(row);
    }
    return glue(a, Hypergraph({}, es));
  }
  std::vector<std::vector<std::string>> path;
  std::string prev = "a1";
  for (std::size_t k = 1; k <= l3; ++k) {
    const std::string next = k == l3 ? "b1" : "p" + std::to_string(k);
    path.push_back({prev, next});
    prev = next;
  }
  return glue(disjoint_union(a, b), Hypergraph({}, path));
}

/// Two nodes s, t joined by three internally disjoint paths of the given
/// edge counts; its cycles have lengths p + q, p + r and q + r.
inline Hypergraph theta_graph(std::size_t p, std::size_t q, std::size_t r) {
  std::vector<std::vector<std::string>> es;
  std::size_t fresh = 0;
  for (std::size_t len : {p, q, r}) {
    std::string prev = "s";
    for (std::size_t k = 1; k <= len; ++k) {
      const std::string next = k == len ? "t" : "i" + std::to_string(++fresh);
      es.push_back({prev, next});
      prev = next;
    }
  }
  return Hypergraph({}, es);
}

inline RatVector rat(std::initializer_list<long> v) {
  RatVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline MonomialIdeal ideal(std::size_t n, std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<IntVector> rows;
  for (auto g : gens) rows.push_back(to_int_vector(g));
  return MonomialIdeal(n, rows);
}

}  // namespace testing_support
