#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kreweras/core/lpoly.hpp"
#include "kreweras/core/ratfunc.hpp"
#include "kreweras/core/series.hpp"
#include "kreweras/core/upoly.hpp"

namespace kreweras {

/// Linear differential operator (1/d) * sum_i p_i(t) D^i with p_i, d in Q[x][t],
/// D = d/dt. The denominator d is a left unit; annihilators built by the
/// closure operations carry d = 1 after normalization.
class OreOp {
public:
  OreOp() : den_(1) {}
  explicit OreOp(std::vector<BiPoly> coeffs, BiPoly den = BiPoly(1));
  static OreOp D();
  static OreOp poly(const BiPoly& p);

  int order() const { return static_cast<int>(c_.size()) - 1; }  ///< -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<BiPoly>& coeffs() const { return c_; }
  BiPoly coeff(int i) const { return (i >= 0 && i <= order()) ? c_[static_cast<std::size_t>(i)] : BiPoly(); }
  const BiPoly& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0 && leading_rat(den_).is_one(); }
  bool has_x() const;
  int degree_t() const;  ///< max t-degree of the numerator coefficients
  int degree_x() const;  ///< max x-degree of the numerator coefficients

  /// Same operator with the common factor of denominator and coefficients cancelled.
  OreOp reduced() const;
  /// Denominator dropped, numerator divided by the gcd of its coefficients,
  /// integer-primitive with positive leading rational coefficient. Same solutions.
  OreOp normalized() const;

  OreOp operator-() const;
  friend OreOp operator+(const OreOp& a, const OreOp& b);
  friend OreOp operator-(const OreOp& a, const OreOp& b) { return a + (-b); }
  /// Ore product; the right factor must have trivial denominator.
  friend OreOp operator*(const OreOp& a, const OreOp& b);
  /// p * L
  OreOp left_mul(const BiPoly& p) const;
  /// D * L, including the quotient rule for the denominator.
  OreOp d_left() const;
  /// Equal as operators over Q(x)(t).
  friend bool operator==(const OreOp& a, const OreOp& b);

  OreOp eval_x(const Rat& x0) const;
  std::string to_string() const;

private:
  std::vector<BiPoly> c_;
  BiPoly den_;
};

OreOp mul(const OreOp& l, const OreOp& m);

/// Pseudo right division over Q(x)(t): l = quo * m + rem with order(rem) < order(m).
struct RightDivision {
  OreOp quo;
  OreOp rem;
};
RightDivision right_divide(const OreOp& l, const OreOp& m);
OreOp rrem(const OreOp& l, const OreOp& m);
OreOp rquo(const OreOp& l, const OreOp& m);

/// Least common left multiple, normalized.
OreOp lclm(const OreOp& l, const OreOp& m);
OreOp sum_annihilator(const OreOp& l, const OreOp& m);
/// Annihilator of f*g from annihilators of f and g, by linear algebra on f^(i) g^(j).
/// Order-1 factors go through twist_annihilator, the rest through the generic path.
OreOp product_annihilator(const OreOp& l, const OreOp& m);
OreOp product_annihilator_generic(const OreOp& l, const OreOp& m);
/// Annihilator of f*g for L f = 0 and m g = 0 with m of order 1: L with D
/// replaced by D + p0/p1, denominators cleared. Same order as L.
OreOp twist_annihilator(const OreOp& l, const OreOp& m);
/// If L f = 0 then (L D)(integral of f) = 0.
OreOp integral_annihilator(const OreOp& l);
/// f D - f' for a rational function f (cleared and normalized).
OreOp annihilator_of_rational(const QXTFrac& f);
/// 2 g D - g' for sqrt(g), g rational (cleared and normalized).
OreOp annihilator_of_sqrt(const QXTFrac& g);
/// Annihilator of f(q(t)) from an annihilator of f, q(0) = 0, q' != 0.
OreOp substitute_argument(const OreOp& l, const BiPoly& q);

/// L applied to a truncated series; valid modulo t^(N - order).
/// Requires a trivial denominator. The Rat variant requires an x-free operator.
TruncSeries<Rat> apply(const OreOp& l, const TruncSeries<Rat>& f);
TruncSeries<LPoly> apply(const OreOp& l, const TruncSeries<LPoly>& f);
/// Apply at a specialization x = x0 of the coefficients.
TruncSeries<Rat> apply_at(const OreOp& l, const Rat& x0, const TruncSeries<Rat>& f);

/// Operator text format:
///
///     operator
///     # command: ...
///     vars t x
///     order 2
///     denominator : 1/1*t^0*x^0          (only when nontrivial)
///     0 : -1/1*t^0*x^0
///     1 : -18/1*t^0*x^0 + 9/1*t^1*x^0
///     2 : -9/1*t^1*x^0 + 9/1*t^2*x^0
///     end
///
/// Each coefficient line lists its terms as n/d*t^a*x^b, sorted by (a, b),
/// joined by " + "; a zero coefficient is written as 0.
std::string write_operator(const OreOp& l, const std::vector<std::string>& comments = {});
OreOp parse_operator(std::string_view text, std::vector<std::string>* comments = nullptr);
std::string poly_to_text(const BiPoly& p);
BiPoly poly_from_text(std::string_view s);

}  // namespace kreweras
