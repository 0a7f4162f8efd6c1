#include "kreweras/closedform/formulas.hpp"

namespace kreweras::formulas {

namespace {

BiPoly t() { return BiPoly::var(); }
BiPoly x() { return lift_x(QX::var()); }
BiPoly k(long v) { return BiPoly(v); }
QXTFrac frac(const BiPoly& n, const BiPoly& d) { return QXTFrac(n, d); }

}  // namespace

QXTFrac radicand() {
  // (x^2 - 2 t x - (4x^3 - 1) t^2) / x^2
  return frac(x().pow(2) - k(2) * t() * x() - (k(4) * x().pow(3) - k(1)) * t().pow(2), x().pow(2));
}

QXTFrac a1_rational(bool printed_sign) {
  const BiPoly mid = printed_sign ? x().pow(3) - k(1) : x().pow(3) + k(1);
  return frac(k(1), k(6) * x() * t().pow(3)) - frac(mid, k(2) * x().pow(2) * t().pow(2)) +
         frac(k(2) - k(3) * x().pow(3), k(6) * x().pow(3) * t());
}

QXTFrac a1_root_factor() { return frac(t() * x().pow(3) + k(2) * t() - x(), k(6) * t().pow(3) * x().pow(2)); }

QXTFrac a2_root_factor() { return frac(x().pow(2) * (x() - t() * x().pow(3) - k(2) * t()), k(3) * t().pow(3)); }

BiPoly a3_denominator() {
  const BiPoly l = t() * x().pow(3) + k(2) * t() - x();
  return l * l * (k(4) * t().pow(2) * x().pow(3) - (x() - t()).pow(2));
}

BiPoly t_prefactor_1() { return (k(3) * t() - x()) * x(); }
BiPoly t_prefactor_2() { return k(4) * t() * (k(2) * t() * x().pow(3) + t() - x()); }

Hypergeom2F1 t_hyp_1() { return {Rat(Int(-1), Int(3)), Rat(Int(-2), Int(3)), Rat(1)}; }
Hypergeom2F1 t_hyp_2() { return {Rat(Int(-1), Int(3)), Rat(Int(1), Int(3)), Rat(2)}; }

BiPoly t_argument() { return k(27) * t().pow(3); }

std::string fingerprint() {
  auto fr = [](const QXTFrac& f) { return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")"; };
  auto hy = [](const Hypergeom2F1& h) {
    return "2F1(" + h.alpha.to_string() + "," + h.beta.to_string() + ";" + h.gamma.to_string() + ")";
  };
  return "g=" + fr(radicand()) + "\nr1=" + fr(a1_rational()) + "\nh1=" + fr(a1_root_factor()) +
         "\nh2=" + fr(a2_root_factor()) + "\nR=" + to_string(a3_denominator()) + "\np1=" + to_string(t_prefactor_1()) +
         "\np2=" + to_string(t_prefactor_2()) + "\nF1=" + hy(t_hyp_1()) + "\nF2=" + hy(t_hyp_2()) +
         "\narg=" + to_string(t_argument()) + "\n";
}

}  // namespace kreweras::formulas
