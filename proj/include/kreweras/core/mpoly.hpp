#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kreweras/core/rat.hpp"

namespace kreweras {

/// Fixed variable universe; a polynomial's variable set is the subset it uses.
enum class Var : int { a = 0, b, c, x, y, t, u, z };
inline constexpr int kNumVars = 8;
char var_name(Var v);
std::optional<Var> var_from_name(char c);

using Exponents = std::array<int, kNumVars>;

/// Graded lexicographic order (total degree, then a > b > c > x > y > t > u > z).
struct GrLex {
  bool operator()(const Exponents& l, const Exponents& r) const;
};

/// Sparse multivariate polynomial over Q. Negative exponents are allowed,
/// which makes this type double as the Laurent polynomial ring.
class MPoly {
public:
  using Terms = std::map<Exponents, Rat, GrLex>;

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(static_cast<long>(c)) {}  // NOLINT
  explicit MPoly(const Rat& c);
  static MPoly var(Var v, int e = 1);
  static MPoly monomial(const Rat& c, const Exponents& e);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rat coeff(const Exponents& e) const;
  /// Variables with a nonzero exponent somewhere, in universe order.
  std::vector<Var> variables() const;
  bool is_polynomial() const;  ///< no negative exponents
  bool is_constant() const;
  Rat constant_term() const;
  int degree_in(Var v) const;      ///< max exponent (INT_MIN for zero)
  int min_degree_in(Var v) const;  ///< min exponent (INT_MAX for zero)

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
  MPoly& operator*=(const Rat& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
  friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& s) { a *= s; return a; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(int e) const;
  /// Multiply by a monomial shift (exponent vector added to every term).
  MPoly shifted(const Exponents& e) const;
  /// Substitute a rational value for a variable (negative exponents need a nonzero value).
  MPoly substitute(Var v, const Rat& value) const;
  /// Substitute a polynomial for a variable; negative exponents require a single-term image.
  MPoly substitute(Var v, const MPoly& image) const;
  /// Coefficient of v^e viewed as a polynomial in the other variables.
  MPoly coeff_in(Var v, int e) const;
  /// Terms satisfying a predicate on the exponent vector.
  MPoly filter(const std::function<bool(const Exponents&)>& keep) const;
  /// Swap two variables.
  MPoly swapped(Var v, Var w) const;
  /// Inverse when this is a single term.
  std::optional<MPoly> unit_inverse() const;
  /// Square root when this is a single term with even exponents and a square coefficient.
  std::optional<MPoly> exact_sqrt() const;

  std::string to_string() const;

  void add_term(const Exponents& e, const Rat& c);

private:
  Terms terms_;
};

Exponents make_exponents(std::initializer_list<std::pair<Var, int>> parts);

}  // namespace kreweras
