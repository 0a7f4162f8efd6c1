#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kreweras/core/mpoly.hpp"
#include "kreweras/core/rat.hpp"
#include "kreweras/core/series.hpp"

namespace kreweras {

struct Step {
  int dx, dy;
  friend bool operator==(const Step&, const Step&) = default;
};

/// Small-step model in the quarter plane with its generators
/// S (all steps), A (steps with dy = -1), B (dx = -1), G (indicator of (-1,-1)).
class StepSet {
public:
  explicit StepSet(std::vector<Step> steps);
  static StepSet kreweras();          ///< {(1,1), (-1,0), (0,-1)}
  static StepSet reverse_kreweras();  ///< {(-1,-1), (1,0), (0,1)}
  static StepSet from_name(const std::string& name);

  const std::vector<Step>& steps() const { return steps_; }
  MPoly S() const;
  MPoly A() const;
  MPoly B() const;
  MPoly G() const;

private:
  std::vector<Step> steps_;
};

/// Each boundary weight is symbolic (nullopt) or a rational value.
struct WeightSpec {
  std::optional<Rat> a, b, c;
  static WeightSpec symbolic() { return {}; }
  MPoly weight_a() const { return a ? MPoly(*a) : MPoly::var(Var::a); }
  MPoly weight_b() const { return b ? MPoly(*b) : MPoly::var(Var::b); }
  MPoly weight_c() const { return c ? MPoly(*c) : MPoly::var(Var::c); }
  bool fully_symbolic() const { return !a && !b && !c; }
};

/// Weighted walk counts: entry (n, i, j) is the polynomial in a, b, c
/// counting length-n walks from (0,0) to (i,j). Lengths 0 .. order-1 are stored.
class WalkGF {
public:
  WalkGF(int order, std::vector<std::vector<MPoly>> layers);
  int order() const { return order_; }
  const MPoly& at(int n, int i, int j) const;
  /// All positions of length n as a polynomial in a, b, c, x, y.
  MPoly layer_poly(int n) const;

private:
  int order_;
  std::vector<std::vector<MPoly>> layers_;  // layers_[n][i * (n+1) + j]
};

/// Dynamic program over lengths: a walk's weight picks up c on arriving at
/// (0,0), a on arriving at (i>0, 0), b on arriving at (0, j>0); the start is unweighted.
WalkGF enumerate(const StepSet& steps, const WeightSpec& weights, int order);

/// Exhaustive enumeration of all step sequences of length n (n <= 14).
/// Returns the (n+1) x (n+1) position table, row-major in (i, j).
std::vector<MPoly> brute_force_count(const StepSet& steps, const WeightSpec& weights, int n);

/// Coordinate specialization for series_Q.
struct Coord {
  std::optional<Rat> value;  ///< nullopt: keep the variable
  static Coord symbolic() { return {}; }
  static Coord at(const Rat& v) { return {v}; }
};

/// Q(x_spec, y_spec; t) as a series with coefficients in Q[a,b,c,x,y].
TruncSeries<MPoly> series_Q(const WalkGF& gf, Coord x, Coord y);
/// Q_{i,j}(t).
TruncSeries<MPoly> coeff_at(const WalkGF& gf, int i, int j);

/// abc * (K Q - right-hand side of the kernel equation), modulo t^order(gf).
TruncSeries<MPoly> kernel_residual(const WalkGF& gf, const StepSet& steps, const WeightSpec& weights);

/// Coefficients of t^0 and t^3 in ab - (ab - ac - bc + abc) Q(0,0).
struct SecondFactorRelations {
  MPoly t0;
  MPoly t3;
};
SecondFactorRelations second_factor_coeffs(const WalkGF& gf, const WeightSpec& weights);

/// Residue counts modulo p without keeping the symbolic table:
/// q00[n] = [t^n] Q(0,0), q11[n] = [t^n] Q(1,1), for n < order.
struct ModpCounts {
  std::vector<std::uint32_t> q00;
  std::vector<std::uint32_t> q11;
};
ModpCounts enumerate_mod_p(const StepSet& steps, std::uint32_t a, std::uint32_t b, std::uint32_t c, int order,
                           std::uint32_t p);

}  // namespace kreweras
