#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kreweras/core/rat.hpp"

namespace kreweras {

template <class K>
class UPoly;

namespace detail {
// Product of dense rational coefficient vectors through a single integer convolution.
std::vector<Rat> mul_dense(const std::vector<Rat>& a, const std::vector<Rat>& b);
}  // namespace detail

/// Dense univariate polynomial with coefficients in K, stored low degree first
/// with no trailing zeros. K is Rat (giving Q[v]) or UPoly<Rat> (giving Q[x][t]).
template <class K>
class UPoly {
public:
  using Coeff = K;

  UPoly() = default;
  UPoly(long c) { if (c != 0) c_.emplace_back(c); }  // NOLINT(google-explicit-constructor)
  UPoly(int c) : UPoly(static_cast<long>(c)) {}  // NOLINT
  explicit UPoly(K c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static UPoly monomial(K c, int deg) {
    UPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(deg) + 1, K(0));
    p.c_.back() = std::move(c);
    return p;
  }
  static UPoly var() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : K(0); }
  const K& lc() const {
    if (c_.empty()) throw std::domain_error("UPoly::lc of zero polynomial");
    return c_.back();
  }
  /// Lowest index with a nonzero coefficient (-1 for zero).
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
  }

  void set_coeff(int i, K v) {
    if (i < 0) throw std::out_of_range("UPoly::set_coeff negative index");
    if (static_cast<std::size_t>(i) >= c_.size()) {
      if (v.is_zero()) return;
      c_.resize(static_cast<std::size_t>(i) + 1, K(0));
    }
    c_[static_cast<std::size_t>(i)] = std::move(v);
    trim();
  }

  UPoly operator-() const {
    UPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { *this = *this * o; return *this; }

  friend UPoly operator+(UPoly a, const UPoly& b) { a += b; return a; }
  friend UPoly operator-(UPoly a, const UPoly& b) { a -= b; return a; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    if constexpr (std::is_same_v<K, Rat>) {
      return UPoly(detail::mul_dense(a.c_, b.c_));
    } else {
      std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
          if (b.c_[j].is_zero()) continue;
          r[i + j] += a.c_[i] * b.c_[j];
        }
      }
      return UPoly(std::move(r));
    }
  }
  /// Scalar multiplication by a coefficient.
  UPoly scaled(const K& s) const {
    if (s.is_zero()) return UPoly();
    UPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
  }
  /// Multiplication by v^k.
  UPoly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    UPoly r;
    r.c_.assign(static_cast<std::size_t>(k), K(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<K> r(c_.size() - 1, K(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long>(i));
    return UPoly(std::move(r));
  }

  /// Horner evaluation at a point of the coefficient ring.
  K eval(const K& v) const {
    K acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  /// Composition p(q).
  UPoly compose(const UPoly& q) const {
    UPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + UPoly(c_[i]);
    return acc;
  }

  UPoly pow(int e) const {
    UPoly r(1), b(*this);
    while (e > 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

using QX = UPoly<Rat>;     ///< Q[v] for a single variable v
using BiPoly = UPoly<QX>;  ///< Q[x][t]: outer variable t, coefficients in Q[x]

// ---- Q[v] ----------------------------------------------------------------

/// Division with remainder over Q.
std::pair<QX, QX> divrem(const QX& a, const QX& b);
/// Rational content c with a/c integral, coprime and with positive leading coefficient.
Rat content(const QX& a);
QX primitive_part(const QX& a);
QX monic(const QX& a);
/// Monic gcd via primitive polynomial remainder sequences over Z.
QX gcd(const QX& a, const QX& b);
QX exact_div(const QX& a, const QX& b);
QX pseudo_rem(const QX& a, const QX& b);
Rat leading_rat(const QX& a);
std::string to_string(const QX& p, const std::string& var);

// ---- Q[x][t] -------------------------------------------------------------

BiPoly pseudo_rem(const BiPoly& a, const BiPoly& b);
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
bool divides(const BiPoly& d, const BiPoly& a);
BiPoly exact_div_coeff(const BiPoly& a, const QX& c);
/// Content in Q[x] including the rational factor: a/content(a) has coprime
/// integer coefficients and a positive leading-leading coefficient.
QX content(const BiPoly& a);
BiPoly primitive_part(const BiPoly& a);
/// gcd over Q[x,t], normalized with leading-leading coefficient 1.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
Rat leading_rat(const BiPoly& a);
/// Evaluate the inner variable x at a rational point.
QX eval_x(const BiPoly& a, const Rat& x0);
/// Swap the roles of t and x.
BiPoly swap_vars(const BiPoly& a);
int degree_x(const BiPoly& a);
std::string to_string(const BiPoly& p, const std::string& outer = "t", const std::string& inner = "x");
/// Embed a univariate polynomial as Q[x][t] with x-free coefficients.
BiPoly lift_t(const QX& p);
/// Embed a polynomial in x as a t-constant.
BiPoly lift_x(const QX& p);

}  // namespace kreweras
