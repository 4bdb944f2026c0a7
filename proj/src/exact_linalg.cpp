#include "genmult/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "genmult/error.hpp"

namespace genmult {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw InputError("malformed rational '" + text + "'");
  std::string n = num[0] == '+' ? num.substr(1) : num;
  return make_rational(Integer(n), Integer(den));
}

IntVector to_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

RatVector to_rat_vector(std::span<const Integer> v) {
  return RatVector(v.begin(), v.end());
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> v;
  for (auto r : rows) v.push_back(to_int_vector(r));
  return from_rows(v);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<long>(r * cols_),
                   data_.begin() + static_cast<long>((r + 1) * cols_));
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

namespace {

// Bareiss elimination in place. Returns the rank; `sign` tracks row swaps.
std::size_t bareiss(std::vector<IntVector>& a, std::size_t cols, int& sign) {
  const std::size_t rows = a.size();
  sign = 1;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  auto rows = m.row_vectors();
  int sign = 1;
  return bareiss(rows, m.cols(), sign);
}

std::size_t rank(const std::vector<RatVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<IntVector> ints;
  ints.reserve(rows.size());
  for (const auto& r : rows) ints.push_back(scale_to_primitive_integer(r));
  int sign = 1;
  return bareiss(ints, rows.front().size(), sign);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto rows = m.row_vectors();
  int sign = 1;
  if (bareiss(rows, m.cols(), sign) < m.rows()) return 0;
  return sign * rows.back().back();
}

Rational determinant(const std::vector<RatVector>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  std::vector<IntVector> ints;
  ints.reserve(n);
  Rational scale = 1;
  for (const auto& r : rows) {
    if (r.size() != n) throw InputError("determinant of a non-square matrix");
    Integer den = 1;
    for (const auto& x : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    IntVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Integer(r[j] * den);
    scale /= den;
    ints.push_back(std::move(row));
  }
  int sign = 1;
  if (bareiss(ints, n, sign) < n) return 0;
  return scale * Rational(sign * ints.back().back());
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive(std::span<const Integer> v) {
  const Integer g = content(v);
  if (g == 0) throw InputError("primitive() of the zero vector");
  IntVector out(v.begin(), v.end());
  auto first = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
  const Integer d = (*first < 0) ? Integer(-g) : g;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return out;
}

IntVector scale_to_primitive_integer(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Integer(v[i] * den);
  const Integer g = content(out);
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntMatrix hyperplane_lattice_basis(std::span<const Integer> u, std::size_t n) {
  if (n < 2) throw InputError("hyperplane_lattice_basis needs n >= 2");
  if (u.size() != n) throw InputError("hyperplane_lattice_basis: |u| != n");
  if (content(u) != 1) throw InputError("hyperplane_lattice_basis: u is not primitive");

  // Column operations on w = u, mirrored on the unimodular matrix U, until w
  // has a single nonzero entry (then +-1 because u is primitive).
  IntVector w(u.begin(), u.end());
  IntMatrix U = IntMatrix::identity(n);
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    w[dst] -= q * w[src];
    for (std::size_t r = 0; r < n; ++r) U(r, dst) -= q * U(r, src);
  };
  for (;;) {
    std::size_t piv = n;
    for (std::size_t j = 0; j < n; ++j)
      if (w[j] != 0 && (piv == n || abs(w[j]) < abs(w[piv]))) piv = j;
    bool reduced = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == piv || w[j] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), w[j].get_mpz_t(), w[piv].get_mpz_t());
      col_axpy(j, piv, q);
      if (w[j] != 0) reduced = false;
    }
    if (reduced) {
      IntMatrix basis(n - 1, n);
      std::size_t out = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == piv) continue;
        for (std::size_t r = 0; r < n; ++r) basis(out, r) = U(r, j);
        ++out;
      }
      return basis;
    }
  }
}

IntVector smith_invariant_factors(const IntMatrix& m) {
  std::vector<IntVector> a = m.row_vectors();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntVector factors;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        for (auto& f : factors) f = abs(f);
        return factors;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold a row in.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    factors.push_back(a[t][t]);
  }
  for (auto& f : factors) f = abs(f);
  return factors;
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<RatVector> a = rows;
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -a[k][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVector> solve_row_combination(const std::vector<RatVector>& rows,
                                               std::span<const Rational> target) {
  // Columns of the system are the given rows; augment with the target.
  const std::size_t k = rows.size();
  const std::size_t n = target.size();
  std::vector<RatVector> sys(n, RatVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) sys[i][j] = rows[j][i];
    sys[i][k] = target[i];
  }
  const auto pivots = rref(sys, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  RatVector x(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = sys[r][k];
  return x;
}

bool lex_less(std::span<const Rational> a, std::span<const Rational> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(std::span<const Integer> a, std::span<const Integer> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace genmult
