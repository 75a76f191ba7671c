#pragma once

#include "pog/predictive.hpp"

namespace pog {

// Hellinger distance between two Gaussians, in [0, 1]:
//   d = sqrt(1 - BC),
//   BC = |S1|^{1/4} |S2|^{1/4} / |Sbar|^{1/2}
//        * exp(-1/8 (m1-m2)^T Sbar^{-1} (m1-m2)),   Sbar = (S1+S2)/2.
// Evaluated in log space through expm1/log1p so that near-identical inputs
// resolve to tiny positive distances instead of rounding to zero.
double hellinger_gaussian(const PredictiveGaussian& g1, const PredictiveGaussian& g2);

// Direct numerical integration of 1/2 * integral (sqrt(p1) - sqrt(p2))^2
// over a box of +-10 pooled standard deviations, >= 2000 nodes per axis;
// returns the square root of the integral. Supports dimension <= 2 with
// diagonal covariances. Testing oracle; not used in any hot path.
double hellinger_quadrature(const PredictiveGaussian& g1, const PredictiveGaussian& g2);

}  // namespace pog
