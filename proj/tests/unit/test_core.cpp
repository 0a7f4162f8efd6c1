#include <random>

#include "doctest.h"
#include "kreweras/core/lpoly.hpp"
#include "kreweras/core/mpoly.hpp"
#include "kreweras/core/rat.hpp"
#include "kreweras/core/ratfunc.hpp"
#include "kreweras/core/series.hpp"
#include "kreweras/core/textio.hpp"
#include "kreweras/core/upoly.hpp"
#include "random_gen.hpp"

using namespace kreweras;
using kreweras::testing::kSeed;

namespace {

MPoly X() { return MPoly::var(Var::x); }
MPoly Y() { return MPoly::var(Var::y); }
MPoly T() { return MPoly::var(Var::t); }

// Term-by-term distribution over explicit term lists; shares nothing with MPoly::operator*.
MPoly expand_by_terms(const std::vector<MPoly>& factors) {
  std::vector<std::pair<Exponents, Rat>> acc{{Exponents{}, Rat(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<Exponents, Rat>> next;
    for (const auto& [e1, c1] : acc)
      for (const auto& [e2, c2] : f.terms()) {
        Exponents e{};
        for (int i = 0; i < kNumVars; ++i) e[static_cast<std::size_t>(i)] = e1[static_cast<std::size_t>(i)] + e2[static_cast<std::size_t>(i)];
        next.emplace_back(e, c1 * c2);
      }
    acc = std::move(next);
  }
  MPoly out;
  for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

}  // namespace

TEST_CASE("Rat normal form") {
  CHECK(Rat(Int(6), Int(-4)).to_string() == "-3/2");
  CHECK(Rat(Int(0), Int(5)).to_string() == "0/1");
  CHECK(Rat::parse("-14/21") == Rat(Int(-2), Int(3)));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK_THROWS(Rat(Int(1), Int(0)));
  Rat s;
  CHECK(Rat(Int(9), Int(4)).exact_sqrt(s));
  CHECK(s == Rat(Int(3), Int(2)));
  CHECK_FALSE(Rat(2).exact_sqrt(s));
}

TEST_CASE("MPoly arithmetic examples") {
  CHECK((X() + Y()) * (X() - Y()) == X() * X() - Y() * Y());
  const MPoly p = X() * Y() + MPoly(3);
  CHECK(p + MPoly() == p);
  const std::vector<MPoly> f{X() * X() * Y() - 1, X() * Y() * Y() - 1, X() - Y()};
  const MPoly expected = X().pow(4) * Y().pow(3) - X().pow(3) * Y().pow(4) - X().pow(3) * Y() + X() * Y().pow(3) + X() - Y();
  CHECK(f[0] * f[1] * f[2] == expected);
  CHECK(expand_by_terms(f) == expected);
}

TEST_CASE("MPoly Laurent behaviour and substitution") {
  const MPoly s = X() * Y() + MPoly::var(Var::x, -1) + MPoly::var(Var::y, -1);
  CHECK(s.min_degree_in(Var::x) == -1);
  CHECK(s.substitute(Var::x, Rat(1)).substitute(Var::y, Rat(1)) == MPoly(3));
  CHECK(s.swapped(Var::x, Var::y) == s);
  CHECK(X().pow(-2) * X().pow(2) == MPoly(1));
  CHECK(s.substitute(Var::x, T() * Rat(3)) == T() * Y() * Rat(3) + MPoly::var(Var::t, -1) * Rat(1, 3) + MPoly::var(Var::y, -1));
}

TEST_CASE("RatFunc normalization examples") {
  const QX t = QX::var();
  const QFrac q(t * t - 1, t - 1);
  CHECK(q.num() == t + 1);
  CHECK(q.den() == QX(1));
  const QFrac z(QX(), t * t + 3);
  CHECK(z.is_zero());
  CHECK(z.den() == QX(1));
  CHECK(gcd(t * t * t - t, t * t - 1) == t * t - 1);
  CHECK_THROWS(QFrac(t, QX()));
}

TEST_CASE("series examples") {
  using S = TruncSeries<Rat>;
  const S a = S::from_coeffs({1, 1}, 2), b = S::from_coeffs({1, -1}, 2);
  CHECK(series_mul(a, b) == S::from_coeffs({1, 0}, 2));
  const S tinv = S::monomial(Rat(1), -1, 10), t1 = S::monomial(Rat(1), 1, 10);
  const S prod = series_mul(tinv, t1);
  CHECK(prod.coeff(0) == Rat(1));
  CHECK(prod.order() == 9);
  const int n = 30;
  std::vector<Rat> ones(n, Rat(1));
  const S geo = S::from_coeffs(ones, n);
  CHECK(series_mul(geo, S::from_coeffs({1, -1}, n)) == S::one(n));
  CHECK(series_inverse(S::from_coeffs({1, -1}, n)) == geo);
  CHECK(series_inverse(S::one(5)) == S::one(5));
  CHECK(series_sqrt(S::from_coeffs({1, 2, 1}, 12)) == S::from_coeffs({1, 1}, 12));
  CHECK(series_sqrt(S::one(6)) == S::one(6));
  CHECK(series_integrate(S::one(6)) == S::monomial(Rat(1), 1, 7));
  CHECK(series_derive(S::monomial(Rat(1), 3, 8)) == S::monomial(Rat(3), 2, 7));
  CHECK_THROWS_AS(series_integrate(S::monomial(Rat(1), -1, 5)), std::domain_error);
  CHECK_THROWS_AS(series_inverse(S::from_coeffs({0, 0}, 2)), std::domain_error);
  CHECK_THROWS_AS(geo.coeff(n), PrecisionError);

  const S sub = series_substitute_poly(geo, std::vector<Rat>{0, 0, 1});
  CHECK(sub.order() == 2 * n);
  for (int k = 0; k < 2 * n; ++k) CHECK(sub.coeff(k) == Rat(k % 2 == 0 ? 1 : 0));
  CHECK_THROWS_AS(series_substitute_poly(geo, std::vector<Rat>{1, 1}), std::domain_error);
}

TEST_CASE("inverse of the kernel in Laurent coefficients") {
  const int n = 6;
  const MPoly s = X() * Y() + MPoly::var(Var::x, -1) + MPoly::var(Var::y, -1);
  auto k = TruncSeries<MPoly>::zero(n);
  k.set_coeff(0, MPoly(1));
  k.set_coeff(1, -s);
  const auto inv = series_inverse(k);
  MPoly power(1);
  for (int m = 0; m < n; ++m) {
    CHECK(inv.coeff(m) == power);
    power = power * s;
  }
  CHECK(inv.coeff(2) == s * s);
}

TEST_CASE("sqrt of the A0 radicand") {
  const int n = 12;
  auto g = TruncSeries<LPoly>::zero(n);
  g.set_coeff(0, LPoly(1));
  g.set_coeff(1, LPoly::monomial(Rat(-2), -1));
  g.set_coeff(2, LPoly(-2, {Rat(1), Rat(0), Rat(0), Rat(-4)}));
  const auto a0 = series_sqrt(g);
  CHECK(series_mul(a0, a0) == g);
  CHECK(a0.coeff(1) == LPoly::monomial(Rat(-1), -1));
  // -(4x^3-1)/(2x^2) - 1/(2x^2) = -2x
  CHECK(a0.coeff(2) == LPoly::monomial(Rat(-2), 1));
}

TEST_CASE("hypergeometric coefficient after t -> 27 t^3") {
  const int n = 4;
  std::vector<Rat> h{Rat(1)};
  const Rat al(Int(-1), Int(3)), be(Int(-2), Int(3)), ga(1);
  for (int k = 0; k + 1 < n; ++k)
    h.push_back(h.back() * (al + Rat(k)) * (be + Rat(k)) / ((ga + Rat(k)) * Rat(k + 1)));
  const auto f = TruncSeries<Rat>::from_coeffs(h, n);
  const auto g = series_substitute_poly(f, std::vector<Rat>{0, 0, 0, 27});
  CHECK(g.order() == 12);
  CHECK(g.coeff(3) == Rat(6));
  CHECK(g.coeff(6) == Rat(27 * 27) * h[2]);
}

TEST_CASE("coefficient variable substitution") {
  // (3t - x) x under x -> 3t vanishes
  auto f = TruncSeries<LPoly>::zero(5);
  f.set_coeff(0, LPoly(2, {Rat(-1)}));
  f.set_coeff(1, LPoly(1, {Rat(3)}));
  const auto g = substitute_coefficient_variable(f, {Rat(0), Rat(3)});
  CHECK(g.is_zero_mod());
  CHECK(g.order() == 5);
  CHECK(specialize(f, Rat(2)).coeff(1) == Rat(6));
}

TEST_CASE("text serialization round trip") {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = TruncSeries<LPoly>::zero(9, -2);
    for (int n = -2; n < 9; ++n) f.set_coeff(n, LPoly(-1, {kreweras::testing::small_rat(rng), Rat(0), kreweras::testing::small_rat(rng)}));
    TextDoc doc = to_doc(f);
    doc.comments.push_back("command: test");
    const std::string text = write_doc(doc);
    const TextDoc back = parse_doc(text);
    CHECK(write_doc(back) == text);
    CHECK(lpoly_series_from_doc(back) == f);
  }
  const MPoly p = kreweras::testing::random_mpoly(rng, {Var::a, Var::b, Var::x}, 8, -2, 3);
  const std::string ptext = write_doc(to_doc(p, {Var::a, Var::b, Var::x}));
  CHECK(mpoly_from_doc(parse_doc(ptext)) == p);
  CHECK(write_doc(parse_doc(ptext)) == ptext);
  CHECK_THROWS(parse_doc("series\nvars t\n0 : 1/1\n"));
}

TEST_CASE("property: ring axioms for MPoly") {
  std::mt19937_64 rng(kSeed + 1);
  const std::vector<Var> vars{Var::a, Var::x, Var::y};
  for (int trial = 0; trial < 300; ++trial) {
    const MPoly p = kreweras::testing::random_mpoly(rng, vars, 4, -1, 2);
    const MPoly q = kreweras::testing::random_mpoly(rng, vars, 4, -1, 2);
    const MPoly r = kreweras::testing::random_mpoly(rng, vars, 3, -1, 2);
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p * (q + r) == p * q + p * r);
    REQUIRE((p - p).is_zero());
    REQUIRE(p * q == q * p);
    REQUIRE(p * q == expand_by_terms({p, q}));
  }
}

TEST_CASE("property: RatFunc canonical form") {
  std::mt19937_64 rng(kSeed + 2);
  for (int trial = 0; trial < 200; ++trial) {
    const QX a = kreweras::testing::random_qx(rng, 3), b = kreweras::testing::random_qx(rng, 3) + QX::var().pow(4);
    const QX c = kreweras::testing::random_qx(rng, 2), d = kreweras::testing::random_qx(rng, 2) + QX::var().pow(3);
    const QX k = kreweras::testing::random_qx(rng, 2) + QX::var().pow(3);
    const QFrac f(a, b), g(c, d);
    REQUIRE(QFrac(a * k, b * k) == f);
    REQUIRE((f + g) - g == f);
    REQUIRE((f * g) * (g.is_zero() ? QFrac(1) : g.inverse()) == (g.is_zero() ? QFrac() : f));
    REQUIRE((f == g) == (a * d == b * c));
  }
}

TEST_CASE("property: series inverse, sqrt, calculus, substitution") {
  std::mt19937_64 rng(kSeed + 3);
  using S = TruncSeries<Rat>;
  for (int trial = 0; trial < 200; ++trial) {
    const S f = kreweras::testing::random_series(rng, 12, true);
    REQUIRE(series_mul(f, series_inverse(f)) == S::one(12));
  }
  for (int trial = 0; trial < 200; ++trial) {
    S f = kreweras::testing::random_series(rng, 12, false);
    f.set_coeff(0, Rat(1));
    const S s = series_sqrt(f);
    REQUIRE(s.coeff(0) == Rat(1));
    REQUIRE(series_mul(s, s) == f);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const S f = kreweras::testing::random_series(rng, 10, false);
    REQUIRE(series_derive(series_integrate(f)) == f);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const S f = kreweras::testing::random_series(rng, 8, false), g = kreweras::testing::random_series(rng, 8, false);
    const std::vector<Rat> q{0, kreweras::testing::small_rat(rng), kreweras::testing::small_rat(rng)};
    if (q[1].is_zero()) continue;
    REQUIRE(series_substitute_poly(series_mul(f, g), q) == series_mul(series_substitute_poly(f, q), series_substitute_poly(g, q)));
  }
}
