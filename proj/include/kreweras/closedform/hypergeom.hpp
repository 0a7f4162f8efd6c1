#pragma once

#include "kreweras/core/series.hpp"
#include "kreweras/ore/oreop.hpp"

namespace kreweras {

/// 2F1(alpha, beta; gamma; t); gamma must not be a non-positive integer.
struct Hypergeom2F1 {
  Rat alpha, beta, gamma;
  void validate() const;
};

/// (u)_n = u (u+1) ... (u+n-1)
Rat pochhammer(const Rat& u, int n);
/// Exact truncation mod t^n from the coefficient ratio.
TruncSeries<Rat> f21_series(const Hypergeom2F1& h, int n);
/// (t^2 - t) D^2 + ((alpha+beta+1) t - gamma) D + alpha beta, denominators cleared.
OreOp f21_ode(const Hypergeom2F1& h);

}  // namespace kreweras
