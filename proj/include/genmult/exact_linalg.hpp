#pragma once

// Exact integer and rational linear algebra.
//
// Integers and rationals are GMP values; every mpq_class result is kept in
// canonical form (positive denominator, reduced). Nothing in this header
// falls back to floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace genmult {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Builds num/den in canonical form. Throws InputError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text.
Rational parse_rational(const std::string& text);

IntVector to_int_vector(std::initializer_list<long> values);
RatVector to_rat_vector(std::span<const Integer> v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Row-major dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  std::vector<IntVector> row_vectors() const;
  IntMatrix transpose() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

/// Rank of a list of rational vectors (all of equal length).
std::size_t rank(const std::vector<RatVector>& rows);

/// Exact determinant by Bareiss elimination. Throws InputError unless square.
Integer determinant(const IntMatrix& m);
Rational determinant(const std::vector<RatVector>& rows);

/// v / gcd(v), with the first nonzero entry made positive.
/// Throws InputError for the zero vector.
IntVector primitive(std::span<const Integer> v);

/// gcd of the entries of v (0 for the zero vector).
Integer content(std::span<const Integer> v);

/// Clears denominators of a rational vector and divides by the content,
/// preserving direction (no sign normalization). Zero stays zero.
IntVector scale_to_primitive_integer(std::span<const Rational> v);

/// Rows form a Z-basis of {z in Z^n : <u,z> = 0}. Built from the unimodular
/// column transform that brings the 1 x n matrix u to Hermite form.
/// Throws InputError when u is not primitive, u.size() != n or n < 2.
IntMatrix hyperplane_lattice_basis(std::span<const Integer> u, std::size_t n);

/// Diagonal of the Smith normal form (nonzero invariant factors, each
/// dividing the next).
IntVector smith_invariant_factors(const IntMatrix& m);

/// A basis of the right nullspace {x : rows * x = 0} over Q.
std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, std::size_t cols);

/// Some solution x of sum_i x_i * rows[i] = target, or nullopt when
/// target is outside the row space.
std::optional<RatVector> solve_row_combination(const std::vector<RatVector>& rows,
                                               std::span<const Rational> target);

/// Lexicographic comparison helpers for canonical ordering.
bool lex_less(std::span<const Rational> a, std::span<const Rational> b);
bool lex_less(std::span<const Integer> a, std::span<const Integer> b);

}  // namespace genmult
