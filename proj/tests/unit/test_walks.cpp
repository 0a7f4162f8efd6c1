#include "doctest.h"
#include "kreweras/walks/walks.hpp"

using namespace kreweras;

namespace {

MPoly v(Var x, int e = 1) { return MPoly::var(x, e); }

}  // namespace

TEST_CASE("first layers of Q(a,b,c;x,y;t)") {
  const auto gf = enumerate(StepSet::kreweras(), WeightSpec::symbolic(), 4);
  const MPoly a = v(Var::a), b = v(Var::b), c = v(Var::c), x = v(Var::x), y = v(Var::y);
  CHECK(gf.layer_poly(0) == MPoly(1));
  CHECK(gf.layer_poly(1) == x * y);
  CHECK(gf.layer_poly(2) == x.pow(2) * y.pow(2) + a * x + b * y);
  CHECK(gf.layer_poly(3) == x.pow(3) * y.pow(3) + (a + MPoly(1)) * x.pow(2) * y + (b + MPoly(1)) * x * y.pow(2) + a * c + b * c);
}

TEST_CASE("brute force tables") {
  const auto k = StepSet::kreweras();
  const auto w = WeightSpec::symbolic();
  CHECK(brute_force_count(k, w, 0) == std::vector<MPoly>{MPoly(1)});
  const auto t1 = brute_force_count(k, w, 1);
  CHECK(t1[1 * 2 + 1] == MPoly(1));
  CHECK(t1[0].is_zero());
  const auto t3 = brute_force_count(k, w, 3);
  CHECK(t3[0] == v(Var::a) * v(Var::c) + v(Var::b) * v(Var::c));
  CHECK_THROWS(brute_force_count(k, w, 15));
  const auto gf = enumerate(k, w, 9);
  for (int n = 0; n < 9; ++n) {
    const auto bf = brute_force_count(k, w, n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) REQUIRE(gf.at(n, i, j) == bf[static_cast<std::size_t>(i * (n + 1) + j)]);
  }
}

TEST_CASE("series views of the table") {
  const auto gf = enumerate(StepSet::kreweras(), WeightSpec::symbolic(), 6);
  const MPoly a = v(Var::a), b = v(Var::b), c = v(Var::c);
  const auto q00 = series_Q(gf, Coord::at(0), Coord::at(0));
  CHECK(q00.coeff(0) == MPoly(1));
  CHECK(q00.coeff(1).is_zero());
  CHECK(q00.coeff(2).is_zero());
  CHECK(q00.coeff(3) == (a + b) * c);
  const auto q = series_Q(gf, Coord::symbolic(), Coord::symbolic());
  CHECK(q.coeff(1) == v(Var::x) * v(Var::y));
  const auto q11 = series_Q(gf, Coord::at(1), Coord::at(1));
  CHECK(q11.coeff(0) == MPoly(1));
  CHECK(q11.coeff(1) == MPoly(1));
  CHECK(q11.coeff(2) == MPoly(1) + a + b);
  // x^3y^3 + (a+1)x^2y + (b+1)xy^2 + ac + bc at x = y = 1
  CHECK(q11.coeff(3) == MPoly(3) + a + b + a * c + b * c);
  const auto q10 = coeff_at(gf, 1, 0);
  CHECK(q10.coeff(1).is_zero());
  CHECK(q10.coeff(2) == a);
  CHECK(coeff_at(gf, 3, 3).coeff(3) == MPoly(1));
  CHECK(coeff_at(gf, 0, 0).coeff(0) == MPoly(1));
}

TEST_CASE("single walk weight a c t^3") {
  // (0,0) -> (1,1) -> (1,0) -> (0,0)
  const auto t3 = brute_force_count(StepSet({{1, 1}, {0, -1}, {-1, 0}}), WeightSpec::symbolic(), 3);
  const auto only = brute_force_count(StepSet({{1, 1}}), WeightSpec::symbolic(), 1);
  CHECK(only[3] == MPoly(1));
  CHECK(t3[0].coeff(make_exponents({{Var::a, 1}, {Var::c, 1}})) == Rat(1));
}

TEST_CASE("kernel equation residual vanishes") {
  for (const auto& steps : {StepSet::kreweras(), StepSet::reverse_kreweras()}) {
    const auto gf = enumerate(steps, WeightSpec::symbolic(), 9);
    const auto r = kernel_residual(gf, steps, WeightSpec::symbolic());
    CHECK(r.order() == 9);
    CHECK(r.is_zero_mod());
  }
  const auto gf1 = enumerate(StepSet::kreweras(), WeightSpec::symbolic(), 1);
  CHECK(kernel_residual(gf1, StepSet::kreweras(), WeightSpec::symbolic()).is_zero_mod());
  CHECK(StepSet::reverse_kreweras().G() == v(Var::x, -1) * v(Var::y, -1));
  CHECK(StepSet::kreweras().G().is_zero());
}

TEST_CASE("kernel residual detects a corrupted table") {
  const auto steps = StepSet::kreweras();
  const auto gf = enumerate(steps, WeightSpec::symbolic(), 6);
  std::vector<std::vector<MPoly>> layers;
  for (int n = 0; n < 6; ++n) {
    std::vector<MPoly> l;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) l.push_back(gf.at(n, i, j));
    layers.push_back(l);
  }
  layers[4][0] += MPoly(1);
  const WalkGF bad(6, layers);
  CHECK_FALSE(kernel_residual(bad, steps, WeightSpec::symbolic()).is_zero_mod());
}

TEST_CASE("symmetry, positivity and unweighted counts") {
  const auto gf = enumerate(StepSet::kreweras(), WeightSpec::symbolic(), 9);
  for (int n = 0; n < 9; ++n) {
    const MPoly l = gf.layer_poly(n);
    CHECK(l.swapped(Var::x, Var::y).swapped(Var::a, Var::b) == l);
    for (const auto& [e, c] : l.terms()) {
      CHECK(c.is_integer());
      CHECK(c.sign() > 0);
    }
  }
  WeightSpec ones{Rat(1), Rat(1), Rat(1)};
  const auto gf1 = enumerate(StepSet::kreweras(), ones, 11);
  for (int n = 0; n < 11; ++n) {
    Rat total(0);
    for (const auto& q : brute_force_count(StepSet::kreweras(), ones, n)) total += q.constant_term();
    CHECK(series_Q(gf1, Coord::at(1), Coord::at(1)).coeff(n) == MPoly(total));
  }
}

TEST_CASE("relations from the second factor") {
  const auto gf = enumerate(StepSet::kreweras(), WeightSpec::symbolic(), 4);
  const auto rel = second_factor_coeffs(gf, WeightSpec::symbolic());
  const MPoly a = v(Var::a), b = v(Var::b), c = v(Var::c);
  CHECK(rel.t0 == a * c + b * c - a * b * c);
  const MPoly lam = a * b - a * c - b * c + a * b * c;
  CHECK(rel.t3 == -(lam * (a + b) * c));
  CHECK(rel.t0.substitute(Var::a, Rat(0)).substitute(Var::b, Rat(0)).is_zero());
  CHECK(rel.t3.substitute(Var::a, Rat(0)).substitute(Var::b, Rat(0)).is_zero());

  WeightSpec spot{Rat(1), Rat(2), Rat(3)};
  const auto gfn = enumerate(StepSet::kreweras(), spot, 4);
  const auto reln = second_factor_coeffs(gfn, spot);
  CHECK(reln.t3 == MPoly(9));
  CHECK(reln.t3 == rel.t3.substitute(Var::a, Rat(1)).substitute(Var::b, Rat(2)).substitute(Var::c, Rat(3)));
}

TEST_CASE("modular streaming counts agree with the exact table") {
  const std::uint32_t p = 45007;
  for (auto [a, b, c] : {std::tuple{1, 1, 1}, std::tuple{2, 3, 0}, std::tuple{5, 7, 11}}) {
    WeightSpec w{Rat(a), Rat(b), Rat(c)};
    const auto gf = enumerate(StepSet::kreweras(), w, 16);
    const auto m = enumerate_mod_p(StepSet::kreweras(), a, b, c, 16, p);
    const auto q00 = series_Q(gf, Coord::at(0), Coord::at(0));
    const auto q11 = series_Q(gf, Coord::at(1), Coord::at(1));
    for (int n = 0; n < 16; ++n) {
      CHECK(m.q00[static_cast<std::size_t>(n)] == q00.coeff(n).constant_term().mod(p));
      CHECK(m.q11[static_cast<std::size_t>(n)] == q11.coeff(n).constant_term().mod(p));
    }
  }
}
