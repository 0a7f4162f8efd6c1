#include "kreweras/core/series.hpp"

namespace kreweras {

TruncSeries<Rat> substitute_coefficient_variable(const TruncSeries<LPoly>& f, const std::vector<Rat>& q) {
  if (q.empty() || !q[0].is_zero()) throw std::domain_error("substitute_coefficient_variable: q(0) != 0");
  const int order = f.order();
  const auto qs = TruncSeries<Rat>::from_coeffs(q, order);
  std::vector<TruncSeries<Rat>> powers{TruncSeries<Rat>::one(order)};
  TruncSeries<Rat> acc = TruncSeries<Rat>::zero(order, std::min(f.start(), order));
  for (int n = f.start(); n < order; ++n) {
    const LPoly c = f.coeff(n);
    if (c.is_zero()) continue;
    if (!c.is_polynomial()) throw std::domain_error("substitute_coefficient_variable: negative power of x");
    while (static_cast<int>(powers.size()) <= c.high()) powers.push_back(series_mul(powers.back(), qs).truncated(order));
    TruncSeries<Rat> term = TruncSeries<Rat>::zero(order);
    for (int e = c.low(); e <= c.high(); ++e) {
      const Rat ce = c.coeff(e);
      if (!ce.is_zero()) term = term + powers[static_cast<std::size_t>(e)] * ce;
    }
    if (n >= 0) {
      acc = acc + term.shifted(n).truncated(order);
    } else {
      acc = acc + term.shifted(n);
    }
  }
  return acc;
}

TruncSeries<Rat> specialize(const TruncSeries<LPoly>& f, const Rat& x0) {
  return f.map_coeffs([&](const LPoly& c) { return c.eval(x0); });
}

}  // namespace kreweras
