#include "epz/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "epz/error.hpp"

namespace epz {

namespace {

// Kronrod abscissae (positive half) and weights; Gauss weights belong to the
// odd-indexed abscissae plus the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double lo, hi, value, error;
  bool operator<(const Piece& other) const { return error < other.error; }
};

Piece gauss_kronrod(const Integrand& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace

QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           double relTol, double absTol, int maxEvaluations) {
  std::priority_queue<Piece> pieces;
  Piece first = gauss_kronrod(f, lo, hi);
  double value = first.value;
  double error = first.error;
  int evaluations = 15;
  pieces.push(first);
  while (error > std::max(absTol, relTol * std::abs(value))) {
    if (evaluations + 30 > maxEvaluations)
      fail(ErrorKind::Verification, "quadrature did not converge");
    const Piece worst = pieces.top();
    pieces.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Piece left = gauss_kronrod(f, worst.lo, mid);
    const Piece right = gauss_kronrod(f, mid, worst.hi);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    pieces.push(left);
    pieces.push(right);
  }
  // Re-add from scratch to shed the drift of the running update.
  double total = 0.0;
  double totalError = 0.0;
  while (!pieces.empty()) {
    total += pieces.top().value;
    totalError += pieces.top().error;
    pieces.pop();
  }
  return {total, totalError, evaluations};
}

QuadratureResult integrate_to_infinity(const Integrand& f, double lo,
                                       double relTol, double absTol) {
  const Integrand mapped = [&](double u) {
    const double v = 1.0 - u;
    return f(lo + u / v) / (v * v);
  };
  return integrate(mapped, 0.0, 1.0, relTol, absTol);
}

QuadratureResult integrate_real_line(const Integrand& f, double center,
                                     double relTol, double absTol) {
  const Integrand mapped = [&](double u) {
    const double v = 1.0 - u * u;
    return f(center + u / v) * (1.0 + u * u) / (v * v);
  };
  return integrate(mapped, -1.0, 1.0, relTol, absTol);
}

} // namespace epz
