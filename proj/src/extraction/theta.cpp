#include "kreweras/extraction/theta.hpp"

#include <stdexcept>
#include <vector>

namespace kreweras {

namespace {

MPoly mono(long c, int ex, int ey) { return MPoly::monomial(Rat(c), make_exponents({{Var::x, ex}, {Var::y, ey}})); }

}  // namespace

MPoly theta0_numerator() {
  const MPoly x = MPoly::var(Var::x), y = MPoly::var(Var::y);
  return (x - y) * (x * x * y - MPoly(1)) * (x * y * y - MPoly(1));
}

MPoly kreweras_S() { return mono(1, 1, 1) + mono(1, -1, 0) + mono(1, 0, -1); }

TruncSeries<MPoly> expand_theta0(int order) {
  if (order < 1) throw std::invalid_argument("expand_theta0: order must be >= 1");
  const MPoly pre = theta0_numerator() * mono(1, -1, -1);
  const MPoly s = kreweras_S();
  auto f = TruncSeries<MPoly>::zero(order);
  MPoly power(1);
  for (int n = 0; n < order; ++n) {
    f.set_coeff(n, pre * power);
    power = power * s;
  }
  return f;
}

MPoly positive_part_x(const MPoly& f) {
  return f.filter([](const Exponents& e) { return e[static_cast<std::size_t>(Var::x)] > 0; });
}

MPoly coeff_y0(const MPoly& f) {
  return f.filter([](const Exponents& e) { return e[static_cast<std::size_t>(Var::y)] == 0; });
}

LPoly to_lpoly_x(const MPoly& f) {
  LPoly out;
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < kNumVars; ++i)
      if (i != static_cast<int>(Var::x) && e[static_cast<std::size_t>(i)] != 0)
        throw std::invalid_argument("to_lpoly_x: polynomial involves a variable other than x");
    out += LPoly::monomial(c, e[static_cast<std::size_t>(Var::x)]);
  }
  return out;
}

TruncSeries<LPoly> theta_series(int order) {
  if (order < 1) throw std::invalid_argument("theta_series: order must be >= 1");
  // Numerator/(xy) terms x^a y^b contribute [x^>] of x^a * [y^{-b}] S^n.
  struct Term { long c; int a, b; };
  std::vector<Term> pre;
  const MPoly pre_poly = theta0_numerator() * mono(1, -1, -1);
  for (const auto& [e, c] : pre_poly.terms())
    pre.push_back({c.num().get_si(), e[static_cast<std::size_t>(Var::x)], e[static_cast<std::size_t>(Var::y)]});
  int ymin = 0, ymax = 0, amax = 0;
  for (const auto& t : pre) {
    ymin = std::min(ymin, -t.b);
    ymax = std::max(ymax, -t.b);
    amax = std::max(amax, t.a);
  }
  const int last = order - 1;
  // S^n is supported on |x|, |y| <= n; dense window with offset `last`.
  const int width = 2 * last + 1;
  std::vector<Int> cur(static_cast<std::size_t>(width * width)), next(cur.size());
  auto idx = [&](int ex, int ey) { return static_cast<std::size_t>((ex + last) * width + (ey + last)); };
  cur[idx(0, 0)] = 1;
  auto f = TruncSeries<LPoly>::zero(order);
  for (int n = 0; n <= last; ++n) {
    const int slack = last - n;
    if (n > 0) {
      // rows that can still reach the final y window, x that can still end positive
      const int ylo = std::max(-n, ymin - slack), yhi = std::min(n, ymax + slack);
      const int xlo = std::max(-n, 1 - amax - slack);
      for (int ex = -n; ex <= n; ++ex)
        for (int ey = -n; ey <= n; ++ey) next[idx(ex, ey)] = 0;
      for (int ex = xlo; ex <= n; ++ex)
        for (int ey = std::max(-n, ylo); ey <= std::min(n, yhi); ++ey) {
          Int& d = next[idx(ex, ey)];
          if (ex - 1 >= -(n - 1) && ey - 1 >= -(n - 1) && ex - 1 <= n - 1 && ey - 1 <= n - 1) d += cur[idx(ex - 1, ey - 1)];
          if (ex + 1 <= n - 1 && ey >= -(n - 1) && ey <= n - 1) d += cur[idx(ex + 1, ey)];
          if (ey + 1 <= n - 1 && ex >= -(n - 1) && ex <= n - 1) d += cur[idx(ex, ey + 1)];
        }
      std::swap(cur, next);
    }
    LPoly coeff;
    for (const auto& t : pre) {
      const int ey = -t.b;
      if (ey < -n || ey > n) continue;
      for (int ex = std::max(-n, 1 - t.a); ex <= n; ++ex) {
        const Int& v = cur[idx(ex, ey)];
        if (v != 0) coeff += LPoly::monomial(Rat(Int(v * t.c)), ex + t.a);
      }
    }
    if (!coeff.is_zero() && coeff.high() > 3 + 2 * n) throw std::logic_error("theta_series: x-degree bound violated");
    f.set_coeff(n, coeff);
  }
  return f;
}

TruncSeries<LPoly> residue_oracle(int order) {
  if (order < 1 || order > 24) throw std::invalid_argument("residue_oracle: order must lie in [1, 24]");
  // Theta_0(t; z, y) with z in the x slot; the numerator is expanded term by term.
  const MPoly pre = theta0_numerator().swapped(Var::x, Var::z) * MPoly::monomial(Rat(1), make_exponents({{Var::z, -1}, {Var::y, -1}}));
  auto f = TruncSeries<LPoly>::zero(order);
  std::vector<Int> fact{1};
  for (int k = 1; k < order; ++k) fact.push_back(fact.back() * k);
  for (int n = 0; n < order; ++n) {
    // S(z,y)^n = sum_{i+j+k=n} n!/(i!j!k!) z^{i-j} y^{i-k}
    MPoly sn;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) {
        const int k = n - i - j;
        sn.add_term(make_exponents({{Var::z, i - j}, {Var::y, i - k}}), Rat(Int(fact[static_cast<std::size_t>(n)] / (fact[static_cast<std::size_t>(i)] * fact[static_cast<std::size_t>(j)] * fact[static_cast<std::size_t>(k)]))));
      }
    const MPoly th0 = pre * sn;
    // Res_{y=0} th0 / y: the coefficient of y^{-1} in th0 * y^{-1}
    const MPoly over_y = th0 * MPoly::var(Var::y, -1);
    MPoly g;
    for (const auto& [e, c] : over_y.terms())
      if (e[static_cast<std::size_t>(Var::y)] == -1) {
        Exponents e2 = e;
        e2[static_cast<std::size_t>(Var::y)] = 0;
        g.add_term(e2, c);
      }
    // Res_{z=0} g(z) * (1/z) * sum_{l>=1} (x/z)^l picks z^l -> x^l for l >= 1
    const int zmax = g.is_zero() ? 0 : g.degree_in(Var::z);
    LPoly out;
    for (int l = 1; l <= zmax; ++l) {
      const MPoly kernel_term = MPoly::monomial(Rat(1), make_exponents({{Var::x, l}, {Var::z, -l - 1}}));
      const MPoly prod = g * kernel_term;
      for (const auto& [e, c] : prod.terms())
        if (e[static_cast<std::size_t>(Var::z)] == -1) out += LPoly::monomial(c, e[static_cast<std::size_t>(Var::x)]);
    }
    f.set_coeff(n, out);
  }
  return f;
}

}  // namespace kreweras
