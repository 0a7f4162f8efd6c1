#include "kreweras/closedform/closedform.hpp"

#include <stdexcept>

#include "kreweras/closedform/formulas.hpp"
#include "kreweras/closedform/hypergeom.hpp"

namespace kreweras {

namespace {

TruncSeries<LPoly> bipoly_series(const BiPoly& p, int order) {
  std::vector<LPoly> c;
  for (int k = 0; k < order; ++k) c.emplace_back(p.coeff(k));
  return TruncSeries<LPoly>(0, order, std::move(c));
}

// F(27 t^3) over Q(x), known modulo t^order
TruncSeries<LPoly> hyp_at_argument(const Hypergeom2F1& h, int order) {
  const auto f = f21_series(h, (order + 2) / 3 + 1);
  const BiPoly arg = formulas::t_argument();
  std::vector<Rat> q;
  for (int k = 0; k <= arg.degree(); ++k) q.push_back(arg.coeff(k).coeff(0));
  return lift_series(series_substitute_poly(f, q)).truncated(order);
}

}  // namespace

TruncSeries<LPoly> lift_series(const TruncSeries<Rat>& f) {
  return f.map_coeffs([](const Rat& r) { return LPoly(r); });
}

TruncSeries<LPoly> frac_series(const QXTFrac& f, int order) {
  const BiPoly& den = f.den();
  const int v = den.valuation();
  const BiPoly d(std::vector<QX>(den.coeffs().begin() + v, den.coeffs().end()));
  // num / d known mod t^(order + v), then divided by t^v
  const auto inv = series_inverse(bipoly_series(d, order + v));
  const auto q = series_mul(bipoly_series(f.num(), order + v), inv);
  return q.shifted(-v);
}

bool pole_free(const TruncSeries<LPoly>& c) {
  for (int k = -3; k < 0; ++k)
    if (k >= c.start() && !c.coeff(k).is_zero()) return false;
  return true;
}

ClosedFormOps build_closed_form_operators() {
  using namespace formulas;
  ClosedFormOps o;
  const QXTFrac g = radicand();
  o.hyp1 = substitute_argument(f21_ode(t_hyp_1()), t_argument());
  o.hyp2 = substitute_argument(f21_ode(t_hyp_2()), t_argument());
  o.t_op = lclm(product_annihilator(annihilator_of_rational(QXTFrac(t_prefactor_1())), o.hyp1),
                product_annihilator(annihilator_of_rational(QXTFrac(t_prefactor_2())), o.hyp2));
  // A3 = sqrt(1 / (R^2 g)), A2 = sqrt(h2^2 g), h1 A0 = sqrt(h1^2 g)
  const BiPoly r = a3_denominator();
  o.a3_op = annihilator_of_sqrt(QXTFrac(g.den(), r * r * g.num()));
  o.a3t_op = product_annihilator(o.a3_op, o.t_op);
  o.integral_op = integral_annihilator(o.a3t_op);
  const QXTFrac h2 = a2_root_factor();
  o.a2_op = annihilator_of_sqrt(h2 * h2 * g);
  o.second_op = product_annihilator(o.a2_op, o.integral_op);
  const QXTFrac h1 = a1_root_factor();
  o.a1_op = lclm(annihilator_of_rational(a1_rational()), annihilator_of_sqrt(h1 * h1 * g));
  o.c_op = lclm(o.second_op, o.a1_op);
  return o;
}

ClosedFormC build_closed_form(int n, bool with_operator, bool printed_a1_sign) {
  using namespace formulas;
  if (n < 8) throw std::invalid_argument("build_closed_form: order must be at least 8");
  ClosedFormC cf;
  const int w = n + 4;  // working precision
  cf.A0 = series_sqrt(frac_series(radicand(), w));
  cf.A1 = frac_series(a1_rational(printed_a1_sign), w) + series_mul(frac_series(a1_root_factor(), w), cf.A0);
  cf.A2 = series_mul(frac_series(a2_root_factor(), w), cf.A0);
  cf.A3 = series_inverse(series_mul(bipoly_series(a3_denominator(), w), cf.A0));
  cf.T = series_mul(bipoly_series(t_prefactor_1(), w), hyp_at_argument(t_hyp_1(), w)) +
         series_mul(bipoly_series(t_prefactor_2(), w), hyp_at_argument(t_hyp_2(), w));
  cf.integral = series_integrate(series_mul(cf.A3, cf.T));
  const auto c = cf.A1 + series_mul(cf.A2, cf.integral);
  if (c.order() < n) throw PrecisionError("build_closed_form: working precision too small");
  cf.pole_free = pole_free(c);
  cf.C = c.truncated(n);
  cf.order = n;
  if (cf.pole_free) cf.C = cf.C.compacted();
  if (with_operator) cf.ops = build_closed_form_operators();
  return cf;
}

}  // namespace kreweras
