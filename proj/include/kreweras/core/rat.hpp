#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace kreweras {

using Int = mpz_class;

/// Exact rational number in canonical form (coprime, positive denominator).
class Rat {
public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(static_cast<long>(v)) {}  // NOLINT
  Rat(const Int& v) : v_(v) {}  // NOLINT
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "n", "n/d" (d may be negative or non-reduced; result is canonical).
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  const mpz_class& num_ref() const { return v_.get_num(); }
  const mpz_class& den_ref() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { Rat r; mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t()); return r; }
  Rat& operator+=(const Rat& o) { mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t()); return *this; }
  Rat& operator-=(const Rat& o) { mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t()); return *this; }
  Rat& operator*=(const Rat& o) { mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t()); return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat inverse() const;
  Rat pow(int e) const;

  /// "n/d" with d always present (canonical wire form).
  std::string to_string() const;
  /// "n" when integral, "n/d" otherwise.
  std::string to_pretty() const;

  /// Exact square root when this is the square of a rational.
  bool exact_sqrt(Rat& out) const;

  /// Residue modulo a prime p; the denominator must be invertible mod p.
  std::uint32_t mod(std::uint32_t p) const;

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace kreweras
