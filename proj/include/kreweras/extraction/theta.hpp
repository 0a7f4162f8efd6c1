#pragma once

#include "kreweras/core/lpoly.hpp"
#include "kreweras/core/mpoly.hpp"
#include "kreweras/core/series.hpp"

namespace kreweras {

/// (x - y)(x^2 y - 1)(x y^2 - 1)
MPoly theta0_numerator();
/// S(x,y) = xy + 1/x + 1/y
MPoly kreweras_S();

/// Theta_0 = numerator / (xy) * sum_{n < order} t^n S^n, coefficients Laurent in x, y.
TruncSeries<MPoly> expand_theta0(int order);

/// Terms with positive x-exponent.
MPoly positive_part_x(const MPoly& f);
/// Terms free of y (the y-exponent 0 slice).
MPoly coeff_y0(const MPoly& f);

/// Theta = [x^>][y^0] Theta_0, coefficients in x Q[x]. Computed on clipped
/// dense windows of S^n, never forming the full expansion.
TruncSeries<LPoly> theta_series(int order);

/// Theta through the residue encoding: Res_{y=0} Theta_0(t; z, y) / y, then
/// Res_z against the positive-part kernel sum_{l >= 1} x^l z^{-l}, with S^n
/// taken from its multinomial expansion. Slow; order <= 24.
TruncSeries<LPoly> residue_oracle(int order);

/// LPoly in x from an MPoly that only involves x.
LPoly to_lpoly_x(const MPoly& f);

}  // namespace kreweras
