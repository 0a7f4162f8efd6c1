#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kreweras/core/rat.hpp"
#include "kreweras/core/upoly.hpp"

namespace kreweras {

/// Dense univariate Laurent polynomial over Q: sum of c_e v^e for
/// e in [low, low + size). Zero has no coefficients. Both ends trimmed.
class LPoly {
public:
  LPoly() = default;
  LPoly(long c) { if (c != 0) c_.emplace_back(c); }  // NOLINT(google-explicit-constructor)
  LPoly(int c) : LPoly(static_cast<long>(c)) {}  // NOLINT
  explicit LPoly(const Rat& c) { if (!c.is_zero()) c_.push_back(c); }
  LPoly(int low, std::vector<Rat> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }
  explicit LPoly(const QX& p) : low_(0), c_(p.coeffs()) { trim(); }
  static LPoly monomial(const Rat& c, int e) { return LPoly(e, {c}); }

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }   ///< lowest exponent (meaningless for zero)
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int e) const;
  std::size_t term_count() const;

  LPoly operator-() const;
  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const LPoly& o) { *this = *this * o; return *this; }
  LPoly& operator*=(const Rat& s);
  friend LPoly operator+(LPoly a, const LPoly& b) { a += b; return a; }
  friend LPoly operator-(LPoly a, const LPoly& b) { a -= b; return a; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend LPoly operator*(LPoly a, const Rat& s) { a *= s; return a; }
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }

  /// Multiplication by v^k.
  LPoly shifted(int k) const { LPoly r(*this); if (!r.is_zero()) r.low_ += k; return r; }
  /// Terms with exponent > 0.
  LPoly positive_part() const;
  bool is_polynomial() const { return is_zero() || low_ >= 0; }
  QX to_qx() const;
  Rat eval(const Rat& v) const;
  /// Inverse when this is a unit of Q[v, 1/v] (a single term).
  std::optional<LPoly> unit_inverse() const;
  /// Square root when this is c*v^(2k) with c a rational square.
  std::optional<LPoly> exact_sqrt() const;
  std::string to_string(const std::string& var) const;

private:
  void trim();
  int low_ = 0;
  std::vector<Rat> c_;
};

}  // namespace kreweras
