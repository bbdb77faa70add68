#pragma once

#include <complex>
#include <cstddef>

namespace epz {

using Complex = std::complex<double>;

// Riemann zeta for real s > 1 (Euler-Maclaurin).
double zeta_real(double s);

// L(s) = sum_{n>=0} (-1)^n (2n+1)^{-s}, the series for the nontrivial
// character mod 4. s > 0.
double dirichlet_L(double s);

// Principal branch of log Gamma. Throws Error(Domain) at poles.
Complex log_gamma(Complex z);

struct ZetaZero {
  int index;     // 1-based
  double gamma;  // zeta(1/2 + i gamma) = 0
  double beta0;  // gamma / 2, so that 2 (1/4 + i beta0) is the zero
};

std::size_t zeta_zero_count() noexcept;

// Tabulated ordinate of the index-th zero on the critical line.
ZetaZero zeta_zero(int index);

// Riemann-Siegel theta, asymptotic expansion (t >= 10).
double riemann_siegel_theta(double t);

// zeta(1/2 + i t) by Euler-Maclaurin with complex argument; t <= 200.
Complex zeta_critical_line(double t);

// Hardy Z(t) = Re(e^{i theta(t)} zeta(1/2 + i t)).
double hardy_z(double t);

struct ZeroBracket {
  double lo;
  double hi;
  double midpoint() const noexcept { return 0.5 * (lo + hi); }
};

// Bisects a sign change of Z(t) inside [lo, hi] down to width <= width.
// Throws Error(Verification) if Z does not change sign on the input bracket.
ZeroBracket refine_zero(double lo, double hi, double width);

} // namespace epz
