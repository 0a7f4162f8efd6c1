#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kreweras/core/ratfunc.hpp"
#include "kreweras/core/series.hpp"
#include "kreweras/ore/oreop.hpp"

namespace kreweras {

/// Coefficient recurrence of an operator: [t^n] L(f) = sum_s P_s(n) f_{n-s},
/// s = s_min .. s_max, each P_s in Q[x][n] (stored as BiPoly with outer variable n).
struct RecOp {
  int s_min = 0;
  int s_max = -1;
  std::vector<BiPoly> P;  ///< P[s - s_min]
  BiPoly at(int s) const { return (s < s_min || s > s_max) ? BiPoly() : P[static_cast<std::size_t>(s - s_min)]; }
  /// chi(m) = P_{s_min}(m + s_min): the coefficient of the highest index.
  BiPoly indicial() const;
};

RecOp to_recurrence(const OreOp& l);
/// Apply the recurrence to coefficients f_0, ..., f_{N-1} (Q-valued, x-free operator):
/// returns [t^n] L(f) for n from s_min up to the last n whose terms are all known.
std::vector<Rat> apply_recurrence(const RecOp& r, const std::vector<Rat>& f, int* first_index = nullptr);

/// Echelon basis of power-series solutions modulo t^order.
struct SolBasis {
  int dimension = 0;
  int r = 0;                          ///< 1 + largest free-parameter index (0 if none)
  std::vector<int> free_indices;      ///< indices where the recurrence leaves a coefficient free
  std::vector<TruncSeries<QFrac>> basis;  ///< leading exponents strictly increasing, leading coefficient 1, reduced
  std::vector<int> leading_exponents;
};

SolBasis power_series_solutions(const OreOp& l, int order);

/// Indicial data at t = 0.
struct LocalData {
  QX indicial;                         ///< x-free part of chi, in the variable m (content over Q[m])
  bool x_dependent_indicial = false;   ///< chi has x-dependent factors beyond `indicial`
  std::vector<std::pair<Rat, int>> rational_roots;  ///< sorted, with multiplicity
  int nonrational_root_degree = 0;
  std::vector<std::vector<std::pair<Rat, int>>> groups;  ///< integer-spaced root groups
  bool regular_singular = false;       ///< deg chi == order
  enum class Log { Present, Absent, Indeterminate } log = Log::Indeterminate;
  std::string reason;
};

LocalData detect_log_at_0(const OreOp& l);

/// Rational roots of a polynomial over Q with multiplicities.
std::vector<std::pair<Rat, int>> rational_roots(const QX& p);

/// Number of linearly independent solutions of the form t^rho * (power series)
/// with exponents in rho + N, restricted to the roots of the group starting at rho.
int frobenius_logfree_count(const OreOp& l, const Rat& rho, int span);

std::string to_string(LocalData::Log log);

}  // namespace kreweras
