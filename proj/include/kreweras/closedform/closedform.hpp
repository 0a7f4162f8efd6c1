#pragma once

#include <optional>

#include "kreweras/core/lpoly.hpp"
#include "kreweras/core/series.hpp"
#include "kreweras/ore/oreop.hpp"

namespace kreweras {

/// Series expansion of f in Q(x)(t) whose t-leading denominator coefficient is a
/// monomial in x. Coefficients are Laurent in x; known modulo t^order.
TruncSeries<LPoly> frac_series(const QXTFrac& f, int order);
/// Coefficientwise lift of a series over Q.
TruncSeries<LPoly> lift_series(const TruncSeries<Rat>& f);

/// Closure-built annihilators of every piece of the closed form.
struct ClosedFormOps {
  OreOp hyp1, hyp2;   ///< 2F1 operators transported along 27 t^3
  OreOp t_op;         ///< T
  OreOp a3_op;        ///< A3 (order 1)
  OreOp a3t_op;       ///< A3 T
  OreOp integral_op;  ///< int_0^t A3 T
  OreOp a2_op;        ///< A2 (order 1)
  OreOp second_op;    ///< A2 int A3 T
  OreOp a1_op;        ///< A1
  OreOp c_op;         ///< L_C
};

struct ClosedFormC {
  int order = 0;                 ///< C known modulo t^order
  TruncSeries<LPoly> A0, A1, A2, A3, T, integral, C;
  bool pole_free = false;        ///< [t^-3], [t^-2], [t^-1] of C vanish
  std::optional<ClosedFormOps> ops;
};

/// All pieces modulo t^n (n >= 8). The operator tower is built when with_operator is set.
ClosedFormC build_closed_form(int n, bool with_operator = true, bool printed_a1_sign = false);
ClosedFormOps build_closed_form_operators();

/// Coefficients of t^-3 .. t^-1.
bool pole_free(const TruncSeries<LPoly>& c);

}  // namespace kreweras
