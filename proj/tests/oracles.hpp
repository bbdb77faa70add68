#pragma once
// Brute-force references used only by the tests. Nothing here shares code
// with the row-interval enumeration in the library.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>

#include "epz/quadform.hpp"

namespace epz::oracle {

struct Mult {
  std::int64_t total = 0;
  std::int64_t prim = 0;
  bool operator==(const Mult&) const = default;
};

// All nonzero (m,n) with |m|,|n| <= box and Q <= X, keyed by value.
inline std::map<double, Mult> box_values(const QuadraticForm& q, double X,
                                         std::int64_t box) {
  std::map<double, Mult> out;
  for (std::int64_t m = -box; m <= box; ++m) {
    for (std::int64_t n = -box; n <= box; ++n) {
      if (m == 0 && n == 0) continue;
      const double v = q(m, n);
      if (v > X) continue;
      auto& e = out[v];
      ++e.total;
      if (std::gcd(std::abs(m), std::abs(n)) == 1) ++e.prim;
    }
  }
  return out;
}

// Q >= kappa (m^2 + n^2), so |m|,|n| <= sqrt(X / kappa) covers the ellipse.
inline std::int64_t covering_box(double kappaValue, double X) {
  return static_cast<std::int64_t>(std::ceil(std::sqrt(X / kappaValue))) + 1;
}

// Gauss-Kronrod-free reference: adaptive Simpson with a hard sample budget.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol, int depth,
                        long& budget) {
  struct Local {
    static double step(const F& f, double a, double b, double fa, double fm,
                       double fb, double whole, double tol, int depth,
                       long& budget) {
      const double m = 0.5 * (a + b);
      const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      const double flm = f(lm), frm = f(rm);
      budget -= 2;
      const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      if (depth <= 0 || budget <= 0 ||
          std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
      return step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, budget) +
             step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, budget);
    }
  };
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  budget -= 3;
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return Local::step(f, a, b, fa, fm, fb, whole, tol, depth, budget);
}

} // namespace epz::oracle
