#include <random>

#include "doctest.h"
#include "kreweras/ore/local.hpp"
#include "kreweras/ore/oreop.hpp"
#include "random_gen.hpp"

using namespace kreweras;
using kreweras::testing::kSeed;
using kreweras::testing::random_op;
using kreweras::testing::random_ordinary_op;
using kreweras::testing::random_solution;

namespace {

BiPoly T() { return BiPoly::var(); }
BiPoly X() { return lift_x(QX::var()); }
BiPoly C(long c) { return BiPoly(c); }
OreOp D() { return OreOp::D(); }
OreOp P(const BiPoly& p) { return OreOp::poly(p); }

TruncSeries<Rat> series_of(int n, const std::function<Rat(int)>& c) {
  std::vector<Rat> v;
  for (int k = 0; k < n; ++k) v.push_back(c(k));
  return TruncSeries<Rat>::from_coeffs(v, n);
}

Rat factorial(int n) {
  Rat r(1);
  for (int k = 2; k <= n; ++k) r = r * Rat(k);
  return r;
}

TruncSeries<Rat> exp_series(int n, long a = 1) {
  return series_of(n, [&](int k) { return Rat(Int(a)).pow(k) / factorial(k); });
}

bool vanishes(const TruncSeries<Rat>& s) {
  for (int k = s.start(); k < s.order(); ++k)
    if (!s.coeff(k).is_zero()) return false;
  return true;
}

bool vanishes(const TruncSeries<LPoly>& s) {
  for (int k = s.start(); k < s.order(); ++k)
    if (!s.coeff(k).is_zero()) return false;
  return true;
}

// 2F1(a, b; c; t) coefficients from the Pochhammer ratio, independent of any operator code
TruncSeries<Rat> hyp_series(const Rat& a, const Rat& b, const Rat& c, int n) {
  std::vector<Rat> v{Rat(1)};
  for (int k = 0; k + 1 < n; ++k) v.push_back(v.back() * (a + Rat(k)) * (b + Rat(k)) / ((c + Rat(k)) * Rat(k + 1)));
  return TruncSeries<Rat>::from_coeffs(v, n);
}

// Substitution t -> s * t^e on a plain series
TruncSeries<Rat> dilate(const TruncSeries<Rat>& f, const Rat& s, int e, int n) {
  std::vector<Rat> v(static_cast<std::size_t>(n));
  for (int k = 0; k * e < n && k < f.order(); ++k) v[static_cast<std::size_t>(k * e)] = f.coeff(k) * s.pow(k);
  return TruncSeries<Rat>::from_coeffs(v, n);
}

// L applied to a rational function of t, with the sum of p_i f^(i) formed in Q(x)(t)
QXTFrac apply_rational(const OreOp& l, const QXTFrac& f) {
  QXTFrac acc, d = f;
  for (int i = 0; i <= l.order(); ++i) {
    if (i > 0) d = d.derivative();
    acc += QXTFrac(l.coeff(i)) * d;
  }
  return acc;
}

}  // namespace

TEST_CASE("Ore commutation and basic arithmetic") {
  CHECK(D() * P(T()) - P(T()) * D() == P(C(1)));
  const OreOp l({T() * T() - C(1), C(3) * T(), T()});
  CHECK(rrem(l, l).is_zero());
  CHECK(rquo(l, l) == P(C(1)));
  CHECK(OreOp({C(2), C(4)}).normalized() == OreOp({C(1), C(2)}));
}

TEST_CASE("apply on exponential, geometric and hypergeometric series") {
  const int n = 30;
  CHECK(vanishes(apply(D() - P(C(1)), exp_series(n))));
  CHECK(apply(D() - P(C(1)), exp_series(n)).order() == n - 1);
  const auto geom = series_of(n, [](int) { return Rat(1); });
  CHECK(vanishes(apply(P(C(1) - T()) * D() - P(C(1)), geom)));
  const OreOp h({C(-1), C(9) * T() - C(18), C(9) * T() * T() - C(9) * T()});
  const auto f = hyp_series(Rat(Int(-1), Int(3)), Rat(Int(1), Int(3)), Rat(2), n);
  const auto r = apply(h, f);
  CHECK(r.order() == n - 2);
  CHECK(vanishes(r));
  CHECK_FALSE(vanishes(apply(h, geom)));
  CHECK_THROWS_AS(apply(h, TruncSeries<Rat>::from_coeffs({Rat(1)}, 1)), PrecisionError);
}

TEST_CASE("recurrence image agrees with apply") {
  const OreOp h({C(-1), C(9) * T() - C(18), C(9) * T() * T() - C(9) * T()});
  const RecOp rec = to_recurrence(h);
  CHECK(rec.s_min == -1);
  CHECK(rec.s_max == 0);
  // chi(m) = -9 m (m + 1)
  CHECK(rec.indicial() == BiPoly({QX(0), QX(-9), QX(-9)}));
  const auto geom = series_of(20, [](int k) { return Rat(k + 1); });
  int first = 0;
  const auto seq = apply_recurrence(rec, geom.coeffs(), &first);
  const auto direct = apply(h, geom);
  CHECK(first == -1);
  // the recurrence sees one index further than the generic precision contract
  CHECK(static_cast<int>(seq.size()) + first == direct.order() + 1);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const int k = first + static_cast<int>(i);
    CHECK(seq[i] == (k < 0 ? Rat(0) : direct.coeff(k)));
  }
}

TEST_CASE("lclm of D and D - 1") {
  const OreOp l = lclm(D(), D() - P(C(1)));
  CHECK(l.order() == 2);
  const auto one = series_of(20, [](int k) { return Rat(k == 0 ? 1 : 0); });
  CHECK(vanishes(apply(l, one)));
  CHECK(vanishes(apply(l, exp_series(20))));
  CHECK(rrem(l, D()).is_zero());
  CHECK(rrem(l, D() - P(C(1))).is_zero());
  const OreOp m({C(1), T(), C(1) + T()});
  CHECK(lclm(m, m) == m.normalized());
}

TEST_CASE("closure annihilators") {
  const int n = 25;
  const OreOp e = D() - P(C(1));
  const OreOp g = P(C(1) - T()) * D() - P(C(1));
  const auto geom = series_of(n, [](int) { return Rat(1); });
  const OreOp prod = product_annihilator(e, g);
  CHECK(prod.order() == 1);
  CHECK(vanishes(apply(prod, series_mul(exp_series(n), geom))));

  const OreOp ia = integral_annihilator(e);
  CHECK(ia == e * D());
  const auto integ = series_integrate(exp_series(n));
  CHECK(vanishes(apply(ia, integ)));

  CHECK(rrem(sum_annihilator(g, g), g).is_zero());
  const OreOp s = sum_annihilator(e, g);
  CHECK(vanishes(apply(s, exp_series(n) + geom)));

  CHECK(annihilator_of_sqrt(QXTFrac(C(1))) == D());
  const auto e2 = substitute_argument(e, C(2) * T());
  CHECK(vanishes(apply(e2, exp_series(n, 2))));
  CHECK(substitute_argument(g, T()) == g.normalized());
}

TEST_CASE("hypergeometric operator transported along 27 t^3") {
  const int n = 40;
  // 9(t^2 - t) D^2 - 9 D + 2 annihilates 2F1(-1/3, -2/3; 1; t)
  const OreOp f1({C(2), C(-9), C(9) * T() * T() - C(9) * T()});
  const auto base = hyp_series(Rat(Int(-1), Int(3)), Rat(Int(-2), Int(3)), Rat(1), n);
  CHECK(vanishes(apply(f1, base)));
  const OreOp f1s = substitute_argument(f1, C(27) * T().pow(3));
  CHECK(f1s.order() == 2);
  CHECK(vanishes(apply(f1s, dilate(base, Rat(27), 3, n))));
}

TEST_CASE("annihilator of the rational solution of L1") {
  // 3x^3/t + 3x^4/t^2 - 2/t + 3x/t^2 - x^2/t^3 over the common denominator t^3
  const BiPoly x = X(), t = T();
  const BiPoly num = C(3) * x.pow(3) * t * t + C(3) * x.pow(4) * t - C(2) * t * t + C(3) * x * t - x * x;
  const QXTFrac f(num, t.pow(3));
  const OreOp l = annihilator_of_rational(f);
  CHECK(l.order() == 1);
  CHECK(l.has_x());
  CHECK(apply_rational(l, f).is_zero());
  // and on the Laurent expansion, coefficients in x
  std::vector<LPoly> c{LPoly(QX({Rat(0), Rat(0), Rat(-1)})),
                       LPoly(QX({Rat(0), Rat(3), Rat(0), Rat(0), Rat(3)})),
                       LPoly(QX({Rat(-2), Rat(0), Rat(0), Rat(3)}))};
  const TruncSeries<LPoly> fs(-3, 8, {c[0], c[1], c[2], LPoly(), LPoly(), LPoly(), LPoly(), LPoly(), LPoly(), LPoly(), LPoly()});
  CHECK(vanishes(apply(l, fs)));
  CHECK_FALSE(vanishes(apply(D(), fs)));
  CHECK_THROWS(annihilator_of_rational(QXTFrac()));
}

TEST_CASE("power series solution bases") {
  SolBasis b = power_series_solutions(D() * D(), 6);
  CHECK(b.dimension == 2);
  CHECK(b.r == 2);
  CHECK(b.leading_exponents == std::vector<int>{0, 1});
  CHECK(b.basis[0].coeff(0) == QFrac(1));
  CHECK(b.basis[0].coeff(1).is_zero());
  CHECK(b.basis[1].coeff(1) == QFrac(1));
  for (int k = 2; k < 6; ++k) CHECK((b.basis[0].coeff(k).is_zero() && b.basis[1].coeff(k).is_zero()));

  b = power_series_solutions(P(C(1) - T()) * D() - P(C(1)), 10);
  CHECK(b.dimension == 1);
  CHECK(b.r == 1);
  for (int k = 0; k < 10; ++k) CHECK(b.basis[0].coeff(k) == QFrac(1));

  const OreOp h({C(-1), C(9) * T() - C(18), C(9) * T() * T() - C(9) * T()});
  b = power_series_solutions(h, 12);
  CHECK(b.dimension == 1);
  CHECK(b.free_indices == std::vector<int>{0});

  // x-dependent: (D - x) has solution exp(x t)
  b = power_series_solutions(D() - P(X()), 6);
  CHECK(b.dimension == 1);
  CHECK(b.basis[0].coeff(3) == QFrac(QX({Rat(0), Rat(0), Rat(0), Rat(Int(1), Int(6))})));
}

TEST_CASE("logarithm detection at 0") {
  const OreOp h({C(-1), C(9) * T() - C(18), C(9) * T() * T() - C(9) * T()});
  LocalData ld = detect_log_at_0(h);
  CHECK(ld.rational_roots == std::vector<std::pair<Rat, int>>{{Rat(-1), 1}, {Rat(0), 1}});
  CHECK(ld.groups.size() == 1);
  CHECK(ld.regular_singular);
  CHECK(ld.log == LocalData::Log::Present);
  CHECK(frobenius_logfree_count(h, Rat(-1), 1) == 1);

  ld = detect_log_at_0(OreOp({C(0), C(1), T()}));
  CHECK(ld.log == LocalData::Log::Present);
  CHECK(ld.rational_roots == std::vector<std::pair<Rat, int>>{{Rat(0), 2}});

  ld = detect_log_at_0(D() * D());
  CHECK(ld.log == LocalData::Log::Absent);
  CHECK(ld.groups.size() == 1);

  // Euler operator t^2 D^2 - 2 with exponents 2, -1: resonant but log-free
  ld = detect_log_at_0(OreOp({C(-2), C(0), T() * T()}));
  CHECK(ld.log == LocalData::Log::Absent);
  // exponents 1/2 and 0 in different classes
  ld = detect_log_at_0(OreOp({C(0), C(-1), C(2) * T()}));
  CHECK(ld.log == LocalData::Log::Absent);
  CHECK(ld.groups.size() == 2);
  // t^2 D - 1 is irregular: nothing certain
  ld = detect_log_at_0(OreOp({C(-1), T() * T()}));
  CHECK(ld.log == LocalData::Log::Indeterminate);
  // t^2 D^2 + t D + 1: exponents +-i
  ld = detect_log_at_0(OreOp({C(1), T(), T() * T()}));
  CHECK(ld.nonrational_root_degree == 2);
  CHECK(ld.log == LocalData::Log::Indeterminate);
  CHECK(to_string(LocalData::Log::Present) == "present");
}

TEST_CASE("rational roots") {
  const auto r = rational_roots(QX({Rat(-6), Rat(11), Rat(-6), Rat(1)}) * QX({Rat(1), Rat(-2)}));
  CHECK(r == std::vector<std::pair<Rat, int>>{{Rat(Int(1), Int(2)), 1}, {Rat(1), 1}, {Rat(2), 1}, {Rat(3), 1}});
  CHECK(rational_roots(QX({Rat(0), Rat(0), Rat(1), Rat(0), Rat(1)})) == std::vector<std::pair<Rat, int>>{{Rat(0), 2}});
}

TEST_CASE("operator text round trip") {
  const OreOp l({X() * T() - C(3), C(0), lift_x(QX({Rat(Int(2), Int(7)), Rat(1)})) * T()});
  std::vector<std::string> comments;
  const std::string text = write_operator(l, {"command: test"});
  const OreOp back = parse_operator(text, &comments);
  CHECK(back == l);
  CHECK(back.coeffs() == l.coeffs());
  CHECK(comments == std::vector<std::string>{"command: test"});
  CHECK(write_operator(back, {"command: test"}) == text);
  CHECK(poly_from_text(poly_to_text(C(0))).is_zero());
  CHECK_THROWS(parse_operator("operator\nvars t x\norder 1\n0 : 1/1*t^0*x^0\n"));
}

TEST_CASE("property: right division reconstructs") {
  std::mt19937_64 rng(kSeed + 21);
  for (int iter = 0; iter < 250; ++iter) {
    const OreOp l = random_op(rng, 3, 2, iter % 3 == 0 ? 1 : 0);
    const OreOp m = random_op(rng, 2, 2, iter % 5 == 0 ? 1 : 0);
    const RightDivision qr = right_divide(l, m);
    CHECK(qr.rem.order() < m.order());
    CHECK(qr.quo * m + qr.rem == l);
  }
}

TEST_CASE("property: lclm is right-divisible by both factors") {
  std::mt19937_64 rng(kSeed + 22);
  for (int iter = 0; iter < 150; ++iter) {
    const OreOp l = random_op(rng, 2, 1, iter % 4 == 0 ? 1 : 0);
    const OreOp m = random_op(rng, 2, 1, 0);
    const OreOp u = lclm(l, m);
    CHECK(u.order() <= l.order() + m.order());
    CHECK(rrem(u, l).is_zero());
    CHECK(rrem(u, m).is_zero());
  }
}

TEST_CASE("property: apply of a product is composition") {
  std::mt19937_64 rng(kSeed + 23);
  for (int iter = 0; iter < 300; ++iter) {
    const OreOp l = random_op(rng, 2, 2, 0);
    const OreOp m = random_op(rng, 2, 2, 0);
    const auto f = kreweras::testing::random_series(rng, 14, false);
    const auto lhs = apply(l * m, f);
    const auto rhs = apply(l, apply(m, f));
    CHECK(lhs.order() == rhs.order());
    CHECK(vanishes(lhs - rhs));
  }
}

TEST_CASE("property: closure annihilators kill random solutions") {
  std::mt19937_64 rng(kSeed + 24);
  const int n = 16;
  for (int iter = 0; iter < 120; ++iter) {
    const OreOp l = random_ordinary_op(rng, 2);
    const OreOp m = random_ordinary_op(rng, 1 + iter % 2);
    const auto f = random_solution(rng, l, n);
    const auto g = random_solution(rng, m, n);
    REQUIRE(vanishes(apply(l, f)));
    REQUIRE(vanishes(apply(m, g)));
    const OreOp u = lclm(l, m);
    CHECK(vanishes(apply(u, f)));
    CHECK(vanishes(apply(u, g)));
    const OreOp p = product_annihilator(l, m);
    CHECK(p.order() <= l.order() * m.order());
    CHECK(vanishes(apply(p, series_mul(f, g))));
  }
}

TEST_CASE("property: power series solutions solve and match the recurrence") {
  std::mt19937_64 rng(kSeed + 25);
  for (int iter = 0; iter < 100; ++iter) {
    const OreOp l = random_op(rng, 2, 2, 0);
    const SolBasis b = power_series_solutions(l, 10);
    CHECK(b.r >= b.dimension);
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
      std::vector<Rat> v;
      for (int k = 0; k < b.basis[i].order(); ++k) {
        const QFrac c = b.basis[i].coeff(k);
        REQUIRE(c.num().degree() <= 0);
        v.push_back(c.num().coeff(0) / c.den().coeff(0));
      }
      CHECK(vanishes(apply(l, TruncSeries<Rat>::from_coeffs(v, static_cast<int>(v.size())))));
      CHECK(b.basis[i].coeff(b.leading_exponents[i]) == QFrac(1));
      if (i > 0) CHECK(b.leading_exponents[i] > b.leading_exponents[i - 1]);
    }
  }
}
