#include "kreweras/closedform/hypergeom.hpp"

#include <stdexcept>

namespace kreweras {

void Hypergeom2F1::validate() const {
  if (gamma.is_integer() && gamma.sign() <= 0) throw std::domain_error("2F1: gamma is a non-positive integer");
}

Rat pochhammer(const Rat& u, int n) {
  Rat r(1);
  for (int k = 0; k < n; ++k) r *= u + Rat(k);
  return r;
}

TruncSeries<Rat> f21_series(const Hypergeom2F1& h, int n) {
  h.validate();
  std::vector<Rat> c;
  Rat v(1);
  for (int k = 0; k < n; ++k) {
    c.push_back(v);
    v = v * (h.alpha + Rat(k)) * (h.beta + Rat(k)) / ((h.gamma + Rat(k)) * Rat(k + 1));
  }
  return TruncSeries<Rat>::from_coeffs(c, n);
}

OreOp f21_ode(const Hypergeom2F1& h) {
  h.validate();
  const BiPoly t = BiPoly::var();
  auto k = [](const Rat& r) { return BiPoly(QX(r)); };
  return OreOp({k(h.alpha * h.beta), k(h.alpha + h.beta + Rat(1)) * t - k(h.gamma), t * t - t}).normalized();
}

}  // namespace kreweras
