#include "kreweras/core/modp_linalg.hpp"

#include <stdexcept>

#include "kreweras/simd/modp.hpp"

namespace kreweras {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inv_mod: zero has no inverse");
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t = t - q * nt;
    std::swap(t, nt);
    r = r - q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

ModpMatrix::ModpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
  if (p < 2 || p >= (1u << 16)) throw std::invalid_argument("ModpMatrix: prime must lie in [2, 2^16)");
}

std::vector<std::size_t> ModpMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
    simd::scale_mod(row(r), inv_mod(at(r, c), p_), cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      simd::axpy_mod(row(i), row(r), p_ - at(i, c), cols_, p_);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t ModpMatrix::rank() const {
  ModpMatrix m(*this);
  return m.rref().size();
}

std::vector<std::vector<std::uint32_t>> ModpMatrix::nullspace() const {
  ModpMatrix m(*this);
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = m.at(i, f) == 0 ? 0 : p_ - m.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ModpMatrix> reduce_mod_p(const std::vector<std::vector<Rat>>& m, std::uint32_t p) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  ModpMatrix out(m.size(), cols, p);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (mpz_divisible_ui_p(m[i][j].den_ref().get_mpz_t(), p)) return std::nullopt;
      out.at(i, j) = m[i][j].mod(p);
    }
  return out;
}

}  // namespace kreweras
