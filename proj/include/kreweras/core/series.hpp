#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kreweras/core/lpoly.hpp"
#include "kreweras/core/mpoly.hpp"
#include "kreweras/core/rat.hpp"
#include "kreweras/core/ratfunc.hpp"

namespace kreweras {

/// Thrown when an operation would need coefficients beyond the known order.
class PrecisionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Unit and square-root hooks for the supported coefficient rings.
inline std::optional<Rat> ring_unit_inverse(const Rat& r) {
  if (r.is_zero()) return std::nullopt;
  return r.inverse();
}
inline std::optional<Rat> ring_exact_sqrt(const Rat& r) {
  Rat s;
  if (!r.exact_sqrt(s)) return std::nullopt;
  return s;
}
inline std::optional<LPoly> ring_unit_inverse(const LPoly& r) { return r.unit_inverse(); }
inline std::optional<LPoly> ring_exact_sqrt(const LPoly& r) { return r.exact_sqrt(); }
inline std::optional<MPoly> ring_unit_inverse(const MPoly& r) { return r.unit_inverse(); }
inline std::optional<MPoly> ring_exact_sqrt(const MPoly& r) { return r.exact_sqrt(); }
inline std::optional<QFrac> ring_unit_inverse(const QFrac& r) {
  if (r.is_zero()) return std::nullopt;
  return r.inverse();
}
inline std::optional<QFrac> ring_exact_sqrt(const QFrac& r) {
  if (r == QFrac(1)) return QFrac(1);
  return std::nullopt;
}

/// Truncated formal Laurent series sum_{n=start}^{order-1} c_n t^n + O(t^order).
/// Coefficients at or beyond `order` are unknown and never reported.
template <class R>
class TruncSeries {
public:
  TruncSeries() : start_(0), order_(0) {}
  TruncSeries(int start, int order, std::vector<R> coeffs) : start_(start), order_(order), c_(std::move(coeffs)) {
    if (order_ < start_) throw std::invalid_argument("TruncSeries: order below start");
    if (static_cast<int>(c_.size()) != order_ - start_) throw std::invalid_argument("TruncSeries: coefficient count mismatch");
  }
  /// Power series from leading coefficients c_0.., known modulo t^order (missing ones are zero).
  static TruncSeries from_coeffs(std::vector<R> coeffs, int order) {
    coeffs.resize(static_cast<std::size_t>(std::max(order, 0)), R(0));
    return TruncSeries(0, order, std::move(coeffs));
  }
  static TruncSeries zero(int order, int start = 0) {
    return TruncSeries(start, order, std::vector<R>(static_cast<std::size_t>(order - start), R(0)));
  }
  static TruncSeries monomial(const R& c, int e, int order) {
    TruncSeries s = zero(order, std::min(e, order));
    if (e < order) s.c_[static_cast<std::size_t>(e - s.start_)] = c;
    return s;
  }
  static TruncSeries one(int order) { return monomial(R(1), 0, order); }

  int start() const { return start_; }
  int order() const { return order_; }
  const std::vector<R>& coeffs() const { return c_; }

  /// Coefficient of t^n; zero below start, PrecisionError at or beyond order.
  R coeff(int n) const {
    if (n >= order_) throw PrecisionError("coefficient t^" + std::to_string(n) + " beyond order " + std::to_string(order_));
    if (n < start_) return R(0);
    return c_[static_cast<std::size_t>(n - start_)];
  }
  void set_coeff(int n, R v) {
    if (n < start_ || n >= order_) throw std::out_of_range("TruncSeries::set_coeff out of window");
    c_[static_cast<std::size_t>(n - start_)] = std::move(v);
  }
  /// Index of the first nonzero known coefficient, or order() when all vanish.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return start_ + static_cast<int>(i);
    return order_;
  }
  bool is_zero_mod() const { return valuation() == order_; }

  TruncSeries truncated(int order) const {
    if (order > order_) throw PrecisionError("truncated: requested order exceeds known order");
    const int s = std::min(start_, order);
    std::vector<R> v;
    v.reserve(static_cast<std::size_t>(order - s));
    for (int n = s; n < order; ++n) v.push_back(coeff(n));
    return TruncSeries(s, order, std::move(v));
  }
  /// Drop leading zero coefficients below the valuation (start becomes min(valuation, order)).
  TruncSeries compacted() const {
    const int v = valuation();
    return TruncSeries(v, order_, std::vector<R>(c_.begin() + (v - start_), c_.end()));
  }

  TruncSeries operator-() const {
    TruncSeries r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, false); }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, true); }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }
  friend TruncSeries operator*(TruncSeries a, const Rat& s) {
    for (auto& c : a.c_) c = c * s;
    return a;
  }
  /// Multiply every coefficient by a ring element.
  TruncSeries scaled(const R& s) const {
    TruncSeries r(*this);
    for (auto& c : r.c_) c = c * s;
    return r;
  }
  /// Multiplication by t^k.
  TruncSeries shifted(int k) const { return TruncSeries(start_ + k, order_ + k, c_); }

  /// Equality as truncated series: same order and identical known coefficients.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    if (a.order_ != b.order_) return false;
    for (int n = std::min(a.start_, b.start_); n < a.order_; ++n)
      if (!(a.coeff(n) == b.coeff(n))) return false;
    return true;
  }

  template <class F>
  auto map_coeffs(F&& f) const -> TruncSeries<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return TruncSeries<S>(start_, order_, std::move(out));
  }

private:
  static TruncSeries combine(const TruncSeries& a, const TruncSeries& b, bool subtract) {
    const int s = std::min(a.start_, b.start_);
    const int o = std::min(a.order_, b.order_);
    if (o <= s) return zero(o, o);
    std::vector<R> v;
    v.reserve(static_cast<std::size_t>(o - s));
    for (int n = s; n < o; ++n) v.push_back(subtract ? a.coeff(n) - b.coeff(n) : a.coeff(n) + b.coeff(n));
    return TruncSeries(s, o, std::move(v));
  }

  int start_;
  int order_;
  std::vector<R> c_;
};

/// Cauchy product. Valuations add; the result is known up to
/// min(order(f) + val(g), order(g) + val(f)).
template <class R>
TruncSeries<R> series_mul(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  const int vf = f.valuation(), vg = g.valuation();
  const int order = std::min(f.order() + vg, g.order() + vf);
  const int start = std::min(vf + vg, order);
  std::vector<R> out(static_cast<std::size_t>(order - start), R(0));
  for (int i = vf; i < f.order(); ++i) {
    const R& a = f.coeffs()[static_cast<std::size_t>(i - f.start())];
    if (a.is_zero()) continue;
    for (int j = vg; j < g.order() && i + j < order; ++j) {
      const R& b = g.coeffs()[static_cast<std::size_t>(j - g.start())];
      if (b.is_zero()) continue;
      out[static_cast<std::size_t>(i + j - start)] += a * b;
    }
  }
  return TruncSeries<R>(start, order, std::move(out));
}

/// Multiplicative inverse. The lowest nonzero coefficient must be a unit.
/// With f = t^v (u + ...) + O(t^N), the inverse is known up to N - 2v.
template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& f) {
  const int v = f.valuation();
  if (v == f.order()) throw std::domain_error("series_inverse: series is zero to known precision");
  auto inv0 = ring_unit_inverse(f.coeff(v));
  if (!inv0) throw std::domain_error("series_inverse: leading coefficient is not a unit");
  const int rel = f.order() - v;
  std::vector<R> g(static_cast<std::size_t>(rel), R(0));
  g[0] = *inv0;
  for (int n = 1; n < rel; ++n) {
    R acc(0);
    for (int k = 1; k <= n; ++k) {
      const R a = f.coeff(v + k);
      if (!a.is_zero() && !g[static_cast<std::size_t>(n - k)].is_zero()) acc += a * g[static_cast<std::size_t>(n - k)];
    }
    g[static_cast<std::size_t>(n)] = -(acc * *inv0);
  }
  return TruncSeries<R>(-v, f.order() - 2 * v, std::move(g));
}

/// Square root with positive leading branch. The series must have
/// valuation 0 and a constant term that is an exact square with unit root.
template <class R>
TruncSeries<R> series_sqrt(const TruncSeries<R>& f) {
  if (f.order() <= 0) throw PrecisionError("series_sqrt: no known coefficients");
  if (f.start() < 0)
    for (int n = f.start(); n < 0; ++n)
      if (!f.coeff(n).is_zero()) throw std::domain_error("series_sqrt: negative valuation");
  auto s0 = ring_exact_sqrt(f.coeff(0));
  if (!s0 || s0->is_zero()) throw std::domain_error("series_sqrt: constant term is not a nonzero square");
  auto inv = ring_unit_inverse(*s0 * Rat(2));
  if (!inv) throw std::domain_error("series_sqrt: square root of constant term is not a unit");
  const int n_ord = f.order();
  std::vector<R> s(static_cast<std::size_t>(n_ord), R(0));
  s[0] = *s0;
  for (int n = 1; n < n_ord; ++n) {
    R acc = f.coeff(n);
    for (int k = 1; k < n; ++k) {
      const auto& a = s[static_cast<std::size_t>(k)];
      const auto& b = s[static_cast<std::size_t>(n - k)];
      if (!a.is_zero() && !b.is_zero()) acc -= a * b;
    }
    s[static_cast<std::size_t>(n)] = acc * *inv;
  }
  return TruncSeries<R>(0, n_ord, std::move(s));
}

/// d/dt. Drops the truncation order by one.
template <class R>
TruncSeries<R> series_derive(const TruncSeries<R>& f) {
  const int start = f.start() == 0 ? 0 : f.start() - 1;
  const int order = f.order() - 1;
  if (order < start) return TruncSeries<R>::zero(order, order);
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(order - start));
  for (int n = start; n < order; ++n) out.push_back(f.coeff(n + 1) * Rat(n + 1));
  return TruncSeries<R>(start, order, std::move(out));
}

/// Definite integral from 0. Requires no negative powers (in particular no 1/t).
template <class R>
TruncSeries<R> series_integrate(const TruncSeries<R>& f) {
  for (int n = f.start(); n < std::min(0, f.order()); ++n)
    if (!f.coeff(n).is_zero())
      throw std::domain_error(n == -1 ? "series_integrate: t^-1 term has no series antiderivative"
                                      : "series_integrate: negative powers are not integrable from 0");
  const int order = f.order() + 1;
  std::vector<R> out(static_cast<std::size_t>(order), R(0));
  for (int n = std::max(f.start(), 0); n < f.order(); ++n) out[static_cast<std::size_t>(n + 1)] = f.coeff(n) * Rat(1, n + 1);
  return TruncSeries<R>(0, order, std::move(out));
}

/// Composition f(q(t)) for a polynomial q with q(0) = 0 (coefficients q[0..]).
/// With v = val(q), the result is known up to order(f) * v.
template <class R>
TruncSeries<R> series_substitute_poly(const TruncSeries<R>& f, const std::vector<R>& q) {
  int v = -1;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (!q[i].is_zero()) { v = static_cast<int>(i); break; }
  if (v < 0) throw std::domain_error("series_substitute_poly: q is zero");
  if (v == 0) throw std::domain_error("series_substitute_poly: q(0) != 0");
  if (f.start() < 0)
    for (int n = f.start(); n < 0; ++n)
      if (!f.coeff(n).is_zero()) throw std::domain_error("series_substitute_poly: negative powers unsupported");
  const int order = f.order() * v;
  const TruncSeries<R> qs = TruncSeries<R>::from_coeffs(std::vector<R>(q.begin(), q.begin() + std::min<std::size_t>(q.size(), static_cast<std::size_t>(order))), order);
  TruncSeries<R> acc = TruncSeries<R>::zero(order);
  TruncSeries<R> power = TruncSeries<R>::one(order);
  for (int n = 0; n < f.order(); ++n) {
    if (n > 0) power = series_mul(power, qs).truncated(order);
    const R c = f.coeff(n);
    if (!c.is_zero()) acc = acc + power.scaled(c);
  }
  return acc;
}

/// Replace the coefficient variable x by a polynomial q(t) with q(0) = 0.
/// All coefficients must be polynomial in x; the truncation order is preserved.
TruncSeries<Rat> substitute_coefficient_variable(const TruncSeries<LPoly>& f, const std::vector<Rat>& q);

/// Evaluate the coefficient variable at a rational value.
TruncSeries<Rat> specialize(const TruncSeries<LPoly>& f, const Rat& x0);

}  // namespace kreweras
