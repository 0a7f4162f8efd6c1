#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "kreweras/core/upoly.hpp"

namespace kreweras {

inline QX scale_rat(const QX& p, const Rat& s) { return p.scaled(s); }
inline BiPoly scale_rat(const BiPoly& p, const Rat& s) { return p.scaled(QX(s)); }

/// Quotient of polynomials in normal form: gcd(num, den) = 1 and the
/// denominator has leading (for Q[x][t]: leading-leading) coefficient 1.
/// RatFunc<QX> is Q(v); RatFunc<BiPoly> is Q(x)(t).
template <class P>
class RatFunc {
public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(static_cast<long>(c)) {}  // NOLINT
  explicit RatFunc(P num) : num_(std::move(num)), den_(1) {}
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  static RatFunc from_rat(const Rat& r) { return RatFunc(scale_rat(P(1), r)); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const { RatFunc r(*this); r.num_ = -r.num_; return r; }
  RatFunc& operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    }
    normalize();
    return *this;
  }
  RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
  RatFunc& operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) { *this = RatFunc(); return *this; }
    P g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    P n = exact_div(num_, g1) * exact_div(o.num_, g2);
    P d = exact_div(den_, g2) * exact_div(o.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    unit_normalize();
    return *this;
  }
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { a += b; return a; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { a -= b; return a; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { a *= b; return a; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { a /= b; return a; }
  friend RatFunc operator*(RatFunc a, const Rat& s) {
    a.num_ = scale_rat(a.num_, s);
    return a;
  }
  RatFunc& operator*=(const Rat& s) { num_ = scale_rat(num_, s); return *this; }

  /// Normal forms are canonical, so equality is structural; this is the same
  /// as comparing cross-multiplied numerators.
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
  }

  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) { den_ = P(1); return; }
    P g = gcd(num_, den_);
    if (g.degree() > 0 || !(g == P(1))) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    unit_normalize();
  }
  void unit_normalize() {
    const Rat l = leading_rat(den_);
    if (!l.is_one()) {
      const Rat inv = l.inverse();
      num_ = scale_rat(num_, inv);
      den_ = scale_rat(den_, inv);
    }
  }
  P num_;
  P den_;
};

using QFrac = RatFunc<QX>;      ///< Q(v)
using QXTFrac = RatFunc<BiPoly>;  ///< Q(x)(t)

inline std::string to_string(const QFrac& f, const std::string& var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace kreweras
