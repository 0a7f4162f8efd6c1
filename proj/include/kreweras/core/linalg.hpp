#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kreweras/core/rat.hpp"
#include "kreweras/core/upoly.hpp"

namespace kreweras {

template <class R>
using Matrix = std::vector<std::vector<R>>;

inline Int ring_exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline BiPoly ring_exact_div(const BiPoly& a, const BiPoly& b) { return exact_div(a, b); }
inline QX ring_exact_div(const QX& a, const QX& b) { return exact_div(a, b); }

inline bool ring_is_zero(const Int& a) { return sgn(a) == 0; }
template <class R>
bool ring_is_zero(const R& a) {
  return a.is_zero();
}

inline std::size_t ring_size(const Int& a) { return mpz_sizeinbase(a.get_mpz_t(), 2); }
inline std::size_t ring_size(const QX& a) { return static_cast<std::size_t>(a.degree()) * 64 + 1; }
inline std::size_t ring_size(const BiPoly& a) {
  return static_cast<std::size_t>(a.degree()) * 4096 + static_cast<std::size_t>(degree_x(a)) * 64 + 1;
}

/// Result of fraction-free Gauss-Jordan elimination: every pivot row has
/// the common value `det` in its pivot column and zeros in the other pivot columns.
template <class R>
struct FFReduced {
  Matrix<R> m;
  std::vector<std::size_t> pivots;
  R det;
};

/// Fraction-free Gauss-Jordan elimination over an integral domain. Entries
/// stay minors of the input, so every division is exact. Pivot choice:
/// the smallest candidate (by ring_size) in the column, ties to the first row.
template <class R>
FFReduced<R> ff_gauss_jordan(Matrix<R> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  R prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ring_is_zero(a[i][c]) && (piv == rows || ring_size(a[i][c]) < ring_size(a[piv][c]))) piv = i;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const R p = a[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const R f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        R v = p * a[i][j];
        if (!ring_is_zero(f) && !ring_is_zero(a[r][j])) v -= f * a[r][j];
        a[i][j] = ring_is_zero(v) ? R(0) : ring_exact_div(v, prev);
      }
      a[i][c] = R(0);
    }
    prev = p;
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = R(0);
  return {std::move(a), std::move(pivots), prev};
}

/// Right nullspace basis: for each free column f, x_f = det and
/// x_{pivot(i)} = -m[i][f]; other free entries zero.
template <class R>
Matrix<R> ff_nullspace(const Matrix<R>& a, std::size_t cols) {
  if (!a.empty() && a[0].size() != cols) throw std::invalid_argument("ff_nullspace: column count mismatch");
  const auto red = ff_gauss_jordan(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : red.pivots) is_pivot[c] = true;
  Matrix<R> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<R> v(cols, R(0));
    v[f] = red.det;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank over the field of fractions.
template <class R>
std::size_t ff_rank(const Matrix<R>& a) {
  return ff_gauss_jordan(a).pivots.size();
}

/// Rows scaled by the lcm of their denominators.
Matrix<Int> clear_row_denominators(const Matrix<Rat>& a);
/// Divide out the gcd of the entries and make the first nonzero entry positive.
std::vector<Int> primitive_vector(const std::vector<Int>& v);
/// Divide out the common gcd (over Q[x][t]) and normalize the leading entry.
std::vector<BiPoly> primitive_vector(const std::vector<BiPoly>& v);
/// Nullspace of a rational matrix, each vector integral and primitive.
Matrix<Rat> rational_nullspace(const Matrix<Rat>& a, std::size_t cols);

}  // namespace kreweras
