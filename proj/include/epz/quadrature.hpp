#pragma once

#include <functional>

namespace epz {

struct QuadratureResult {
  double value;
  double errorEstimate;
  int evaluations;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (7/15) with global bisection of the worst interval.
QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           double relTol, double absTol = 0.0,
                           int maxEvaluations = 2'000'000);

// [lo, inf) via t = lo + u/(1-u)
QuadratureResult integrate_to_infinity(const Integrand& f, double lo,
                                       double relTol, double absTol = 0.0);

// (-inf, inf) via t = center + u/(1-u^2)
QuadratureResult integrate_real_line(const Integrand& f, double center,
                                     double relTol, double absTol = 0.0);

} // namespace epz
