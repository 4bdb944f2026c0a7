#include <doctest.h>

#include <random>

#include "genmult/error.hpp"
#include "genmult/exact_linalg.hpp"
#include "genmult/hypergraph.hpp"
#include "genmult/oracle.hpp"
#include "support.hpp"

using namespace genmult;
using namespace testing_support;

TEST_CASE("rationals stay canonical") {
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  CHECK(to_string(make_rational(6, 3)) == "2");
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(make_rational(1, 0), InputError);
}

TEST_CASE("rank") {
  CHECK(rank(IntMatrix(3, 4)) == 0);
  CHECK(rank(incidence_matrix(cycle_graph(4))) == 3);
  CHECK(minor_rank(incidence_matrix(cycle_graph(4))) == 3);
  CHECK(rank(circulant(to_int_vector({1, 1, 0, 1, 0}))) == 5);
  CHECK(rank(incidence_matrix(cycle_graph(5))) == 5);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix::identity(3)) == 1);
  CHECK(abs(determinant(incidence_matrix(cycle_graph(3)))) == 2);
  const IntMatrix c5 = incidence_matrix(cycle_graph(5));
  CHECK(abs(determinant(c5)) == 2);
  CHECK(determinant(c5) == leibniz_det(c5));
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), InputError);
}

TEST_CASE("primitive") {
  CHECK(primitive(to_int_vector({2, 4, 6})) == to_int_vector({1, 2, 3}));
  CHECK(primitive(to_int_vector({-3, 3})) == to_int_vector({1, -1}));
  CHECK(primitive(to_int_vector({5})) == to_int_vector({1}));
  CHECK_THROWS_AS(primitive(to_int_vector({0, 0})), InputError);
}

namespace {

void check_kernel_basis(const IntVector& u) {
  const std::size_t n = u.size();
  const IntMatrix b = hyperplane_lattice_basis(u, n);
  REQUIRE(b.rows() == n - 1);
  REQUIRE(b.cols() == n);
  for (std::size_t r = 0; r < b.rows(); ++r) CHECK(dot(b.row(r), u) == 0);
  const IntVector sf = smith_invariant_factors(b);
  REQUIRE(sf.size() == n - 1);
  for (const auto& f : sf) CHECK(f == 1);
}

}  // namespace

TEST_CASE("hyperplane lattice basis") {
  CHECK(hyperplane_lattice_basis(to_int_vector({1, 1}), 2).rows() == 1);
  check_kernel_basis(to_int_vector({1, 1}));
  check_kernel_basis(to_int_vector({2, 3}));
  check_kernel_basis(to_int_vector({1, 1, 1}));
  check_kernel_basis(to_int_vector({6, 10, 15}));
  CHECK_THROWS_AS(hyperplane_lattice_basis(to_int_vector({2, 4}), 2), InputError);
  CHECK_THROWS_AS(hyperplane_lattice_basis(to_int_vector({1}), 1), InputError);
}

TEST_CASE("smith normal form") {
  const IntVector sf = smith_invariant_factors(IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(sf == to_int_vector({2, 6, 12}));
}

TEST_CASE("randomized matrix properties") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 5), entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(rank(m) == minor_rank(m));

    IntMatrix sq(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sq(i, j) = entry(rng);
    const Integer d = determinant(sq);
    CHECK(d == leibniz_det(sq));
    if (r >= 2) {
      IntMatrix swapped = sq;
      for (std::size_t j = 0; j < r; ++j) std::swap(swapped(0, j), swapped(1, j));
      CHECK(abs(determinant(swapped)) == abs(d));
      IntMatrix repeated = sq;
      for (std::size_t j = 0; j < r; ++j) repeated(1, j) = repeated(0, j);
      CHECK(determinant(repeated) == 0);
    }

    IntVector u;
    for (std::size_t i = 0; i < std::max<std::size_t>(c, 2); ++i) u.emplace_back(entry(rng));
    if (content(u) != 0) check_kernel_basis(primitive(u));
  }
}

TEST_CASE("circulant rank matches the gcd formula") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(2, 8), entry(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector u;
    for (int i = len(rng); i > 0; --i) u.emplace_back(entry(rng));
    if (content(u) == 0) continue;
    CHECK(rank(circulant(u)) == circulant_rank_by_gcd(u));
  }
}
