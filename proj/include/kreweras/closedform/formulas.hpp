#pragma once

#include <string>

#include "kreweras/closedform/hypergeom.hpp"
#include "kreweras/core/ratfunc.hpp"

namespace kreweras::formulas {

// The closed form of Theta, transcribed once. Every piece is written as
// rational functions in Q(x)(t) around the single square root A0 = sqrt(g):
//
//   A1 = r1 + h1 A0,   A2 = h2 A0,   A3 = 1 / (R A0),
//   T  = p1 F1(27 t^3) + p2 F2(27 t^3),   C = A1 + A2 * int_0^t A3 T.

QXTFrac radicand();             ///< g = 1 - 2t/x - (4x^3 - 1) t^2 / x^2
/// r1 = 1/(6x t^3) - (x^3 + 1)/(2x^2 t^2) + (2 - 3x^3)/(6x^3 t).
/// printed_sign selects the printed "-(x^3 - 1)/(2x^2 t^2)" middle term instead.
QXTFrac a1_rational(bool printed_sign = false);
QXTFrac a1_root_factor();       ///< h1 = (t x^3 + 2t - x) / (6 t^3 x^2)
QXTFrac a2_root_factor();       ///< h2 = x^2 (x - t x^3 - 2t) / (3 t^3)
BiPoly a3_denominator();        ///< R = (t x^3 + 2t - x)^2 (4 t^2 x^3 - (x - t)^2)
BiPoly t_prefactor_1();         ///< p1 = (3t - x) x
BiPoly t_prefactor_2();         ///< p2 = 4t (2t x^3 + t - x)
Hypergeom2F1 t_hyp_1();         ///< 2F1(-1/3, -2/3; 1)
Hypergeom2F1 t_hyp_2();         ///< 2F1(-1/3, 1/3; 2)
BiPoly t_argument();            ///< 27 t^3

/// Canonical text of all pieces; its hash pins the transcription.
std::string fingerprint();

}  // namespace kreweras::formulas
