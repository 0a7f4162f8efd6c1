#include "kreweras/core/linalg.hpp"

namespace kreweras {

Matrix<Int> clear_row_denominators(const Matrix<Rat>& a) {
  Matrix<Int> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    Int l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den_ref().get_mpz_t());
    std::vector<Int> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(ring_exact_div(l, x.den_ref()) * x.num_ref());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Int> primitive_vector(const std::vector<Int>& v) {
  Int g = 0;
  int sign = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (sign == 0 && x != 0) sign = x < 0 ? -1 : 1;
  }
  if (g == 0) return v;
  if (sign < 0) g = -g;
  std::vector<Int> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ring_exact_div(x, g));
  return out;
}

std::vector<BiPoly> primitive_vector(const std::vector<BiPoly>& v) {
  BiPoly g;
  const BiPoly* first = nullptr;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (!first) first = &x;
    g = gcd(g, x);
  }
  if (!first) return v;
  std::vector<BiPoly> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.is_zero() ? x : exact_div(x, g));
  // integer-primitive over all coefficients, first entry with positive leading coefficient
  Int den = 1, num = 0;
  for (const auto& x : out)
    for (const auto& q : x.coeffs())
      for (const auto& c : q.coeffs()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den_ref().get_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.num_ref().get_mpz_t());
      }
  Rat s(den, num);
  for (const auto& x : out)
    if (!x.is_zero()) {
      if (leading_rat(x).sign() < 0) s = -s;
      break;
    }
  for (auto& y : out) y = y.scaled(QX(s));
  return out;
}

Matrix<Rat> rational_nullspace(const Matrix<Rat>& a, std::size_t cols) {
  const auto ns = ff_nullspace(clear_row_denominators(a), cols);
  Matrix<Rat> out;
  for (const auto& v : ns) {
    std::vector<Rat> r;
    for (const auto& x : primitive_vector(v)) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace kreweras
