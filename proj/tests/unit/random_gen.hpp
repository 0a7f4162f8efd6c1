#pragma once

#include <random>

#include "kreweras/core/mpoly.hpp"
#include "kreweras/core/rat.hpp"
#include "kreweras/core/series.hpp"
#include "kreweras/core/upoly.hpp"
#include "kreweras/ore/local.hpp"
#include "kreweras/ore/oreop.hpp"

namespace kreweras::testing {

inline constexpr std::uint64_t kSeed = 20240917;

inline Rat small_rat(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return Rat(Int(num(rng)), Int(den(rng)));
}

inline Rat nonzero_rat(std::mt19937_64& rng, int bound = 9) {
  for (;;) {
    Rat r = small_rat(rng, bound);
    if (!r.is_zero()) return r;
  }
}

inline QX random_qx(std::mt19937_64& rng, int max_deg, int bound = 9) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Rat> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& r : c) r = small_rat(rng, bound);
  return QX(c);
}

inline MPoly random_mpoly(std::mt19937_64& rng, const std::vector<Var>& vars, int terms, int min_e, int max_e) {
  std::uniform_int_distribution<int> e(min_e, max_e);
  MPoly p;
  for (int k = 0; k < terms; ++k) {
    Exponents ex{};
    for (Var v : vars) ex[static_cast<std::size_t>(v)] = e(rng);
    p.add_term(ex, small_rat(rng));
  }
  return p;
}

inline TruncSeries<Rat> random_series(std::mt19937_64& rng, int order, bool unit_constant) {
  std::vector<Rat> c(static_cast<std::size_t>(order));
  for (auto& r : c) r = small_rat(rng);
  if (unit_constant) c[0] = nonzero_rat(rng);
  return TruncSeries<Rat>::from_coeffs(c, order);
}

inline BiPoly random_bipoly(std::mt19937_64& rng, int tdeg, int xdeg) {
  std::uniform_int_distribution<int> td(0, tdeg);
  std::vector<QX> c(static_cast<std::size_t>(td(rng) + 1));
  for (auto& q : c) q = random_qx(rng, xdeg, 4);
  return BiPoly(c);
}

inline OreOp random_op(std::mt19937_64& rng, int max_order, int tdeg, int xdeg) {
  std::uniform_int_distribution<int> od(1, max_order);
  const int ord = od(rng);
  std::vector<BiPoly> c;
  for (int i = 0; i < ord; ++i) c.push_back(random_bipoly(rng, tdeg, xdeg));
  BiPoly lead;
  while (lead.is_zero()) lead = random_bipoly(rng, tdeg, xdeg);
  c.push_back(lead);
  return OreOp(c);
}

// x-free operator with p_ord(0) != 0, so 0 is an ordinary point
inline OreOp random_ordinary_op(std::mt19937_64& rng, int max_order) {
  OreOp l = random_op(rng, max_order, 2, 0);
  std::vector<BiPoly> c = l.coeffs();
  if (c.back().coeff(0).is_zero()) c.back() += BiPoly(1 + static_cast<long>(rng() % 3));
  return OreOp(c);
}

// Random solution of an ordinary-point operator from random initial values
inline TruncSeries<Rat> random_solution(std::mt19937_64& rng, const OreOp& l, int n) {
  const RecOp rec = to_recurrence(l);
  std::vector<Rat> f;
  for (int k = 0; k < l.order(); ++k) f.push_back(small_rat(rng));
  // at index n' = m + s_min the coefficient of f_m is chi(m)
  for (int m = l.order(); m < n; ++m) {
    const int idx = m + rec.s_min;
    Rat acc(0);
    for (int s = rec.s_min + 1; s <= rec.s_max; ++s) {
      const int j = idx - s;
      if (j < 0) continue;
      acc += rec.at(s).eval(QX(Rat(idx))).coeff(0) * f[static_cast<std::size_t>(j)];
    }
    const Rat lead = rec.at(rec.s_min).eval(QX(Rat(idx))).coeff(0);
    f.push_back(-acc / lead);
  }
  return TruncSeries<Rat>::from_coeffs(f, n);
}

}  // namespace kreweras::testing
