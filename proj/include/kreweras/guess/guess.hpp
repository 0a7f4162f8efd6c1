#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kreweras/core/lpoly.hpp"
#include "kreweras/core/series.hpp"
#include "kreweras/ore/oreop.hpp"

namespace kreweras {

struct GuessConfig {
  int max_order = 4;
  int max_degree = 16;        ///< max t-degree of the coefficients
  int max_x_degree = 200;     ///< symbolic x only
  int reserve = 10;           ///< coefficients withheld from fitting, R >= 10
  std::uint32_t prefilter_prime = 65521;  ///< 0 disables the mod-p rank prefilter
  void validate() const;
};

/// One staircase cell: operators of the given order with coefficients of t-degree <= degree.
struct Cell {
  int order = 0;
  int degree = 0;
  int unknowns() const { return (order + 1) * (degree + 1); }
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Cells sorted by order + degree, lower order first on ties.
std::vector<Cell> staircase(const GuessConfig& cfg);

struct CellVisit {
  Cell cell;
  enum class Outcome { NoSolution, Insufficient, ReserveFailed, Found } outcome = Outcome::NoSolution;
  int nullity = 0;
  bool by_prefilter = false;  ///< full rank already mod p
};

/// How many coefficients past the fitted ones an operator annihilates.
struct ReserveReport {
  int fit_coefficients = 0;  ///< f_0 .. f_{fit-1} were used for fitting
  int checked = 0;           ///< [t^n] L(f) checked for n in [fit - order, N - order)
  int passed = 0;            ///< consecutive passes from the first reserve index
  std::optional<int> first_failure;  ///< index n of the first nonzero [t^n] L(f)
  bool all_passed() const { return !first_failure && checked > 0; }
};

ReserveReport verify_reserve(const OreOp& l, const TruncSeries<Rat>& f, int reserve);
ReserveReport verify_reserve(const OreOp& l, const TruncSeries<LPoly>& f, int reserve);

struct GuessResult {
  std::optional<OreOp> op;
  Cell cell;
  ReserveReport reserve;
  std::vector<CellVisit> visited;
  bool exhausted = false;  ///< staircase ran out without a confirmed candidate
  std::vector<Rat> points;  ///< symbolic x: specialization points used
  std::string summary() const;
};

/// First confirmed operator in staircase order for a series over Q.
GuessResult guess_min_ode(const TruncSeries<Rat>& f, const GuessConfig& cfg);

/// Nullspace of the fit equations of one cell (primitive integer vectors laid out as
/// coefficient (i, k) at index i * (degree + 1) + k). Empty when too few coefficients.
std::vector<std::vector<Rat>> cell_nullspace(const TruncSeries<Rat>& f, const Cell& cell, int fit_coefficients);
OreOp operator_from_vector(const std::vector<Rat>& v, const Cell& cell);

/// Symbolic-x guess: specialize at points 2, 3, 5, 7, 11, 13, ..., guess at each,
/// reconstruct every coefficient as a rational function of x, clear denominators,
/// and confirm by applying the result to the symbolic series.
GuessResult guess_min_ode_symbolic(const TruncSeries<LPoly>& f, const GuessConfig& cfg);

/// Rational function reconstruction from values at distinct points: returns num/den
/// with deg num + deg den < number of points - 1 (one point of slack), or none.
std::optional<std::pair<QX, QX>> rational_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);
QX lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

struct AlgGuess {
  std::uint32_t p = 0;
  int deg_t = 0;
  int deg_u = 0;
  int M = 0;             ///< P(t, f) = 0 mod t^M checked
  int fit_rows = 0;
  std::vector<std::vector<std::uint32_t>> P;  ///< P[j][i]: coefficient of t^i u^j, normalized to lead 1
  std::string to_string() const;
};

/// Nonzero P with P(t, f(t)) = 0 mod t^M over F_p, fitted on the first M - reserve
/// coefficients of the product expansions and confirmed on the rest.
std::optional<AlgGuess> guess_algebraic_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p, int deg_t,
                                              int deg_u, int reserve);

struct AlgSearch {
  std::optional<AlgGuess> found;
  std::vector<std::pair<int, int>> visited;  ///< (deg_t, deg_u) in search order
};
/// Staircase over (deg_t, deg_u) by deg_t + deg_u, lower deg_u first; deg_u >= 1.
AlgSearch guess_algebraic_staircase(const std::vector<std::uint32_t>& f, std::uint32_t p, int max_total,
                                    int reserve);

/// P(t, f) mod t^M over F_p.
std::vector<std::uint32_t> eval_algebraic_mod_p(const AlgGuess& g, const std::vector<std::uint32_t>& f);

}  // namespace kreweras
