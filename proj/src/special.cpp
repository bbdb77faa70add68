#include "epz/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "epz/error.hpp"

namespace epz {

namespace {

// B_2, B_4, ..., B_24
constexpr std::array<double, 12> kBernoulliEven = {
    1.0 / 6.0,          -1.0 / 30.0,       1.0 / 42.0,
    -1.0 / 30.0,        5.0 / 66.0,        -691.0 / 2730.0,
    7.0 / 6.0,          -3617.0 / 510.0,   43867.0 / 798.0,
    -174611.0 / 330.0,  854513.0 / 138.0,  -236364091.0 / 2730.0};

// Euler-Maclaurin for sum_{n>=1} n^{-s}: head up to N-1, then
// N^{1-s}/(s-1) + N^{-s}/2 + sum_k B_2k/(2k)! (s)_{2k-1} N^{-s-2k+1}.
// `lastTerm` receives the magnitude of the final correction kept.
template <class T>
T euler_maclaurin_zeta(T s, int N, int corrections, double& lastTerm) {
  T head = 0.0;
  for (int n = 1; n < N; ++n)
    head += std::exp(-s * std::log(static_cast<double>(n)));
  const double logN = std::log(static_cast<double>(N));
  const T powN = std::exp(-s * logN);  // N^{-s}
  T sum = head + powN * static_cast<double>(N) / (s - 1.0) + 0.5 * powN;

  T rising = s;                          // (s)_{2k-1}
  T power = powN / static_cast<double>(N);  // N^{-s-2k+1}
  double factorial = 2.0;                // (2k)!
  for (int k = 1; k <= corrections; ++k) {
    const T term = kBernoulliEven[k - 1] / factorial * rising * power;
    sum += term;
    lastTerm = std::abs(term);
    rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    power /= static_cast<double>(N) * static_cast<double>(N);
    factorial *= static_cast<double>(2 * k + 1) * static_cast<double>(2 * k + 2);
  }
  return sum;
}

// Godfrey's coefficients for g = 607/128, 15 terms; relative error about
// 1e-15 on Re z >= 1/2.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5};

Complex log_gamma_lanczos(Complex z) {
  const Complex w = z - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k)
    series += kLanczos[k] / (w + static_cast<double>(k));
  const Complex t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (w + 0.5) * std::log(t) - t +
         std::log(series);
}

// Ordinates of the first zeros of zeta(1/2 + i t), 20 significant digits.
constexpr std::array<double, 15> kZeroTable = {
    14.134725141734693790, 21.022039638771554993, 25.010857580145688763,
    30.424876125859513210, 32.935061587739189691, 37.586178158825671257,
    40.918719012147495187, 43.327073280914999519, 48.005150881167159727,
    49.773832477672302181, 52.970321477714460644, 56.446247697063394804,
    59.347044002602353079, 60.831778524609809844, 65.112544048081606660};

} // namespace

double zeta_real(double s) {
  if (!(s > 1.0) || std::isnan(s))
    fail(ErrorKind::Domain, "zeta_real needs s > 1, got " + std::to_string(s));
  if (s > 40.0) {
    double sum = 0.0;
    for (int n = 12; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
    return sum;
  }
  double last = 0.0;
  const double value = euler_maclaurin_zeta(s, 20, 10, last);
  // The remainder is bounded by the first omitted correction, which is
  // smaller than the last one kept for these parameters.
  if (last > 1e-12 * value)
    fail(ErrorKind::Verification, "zeta_real truncation bound not met");
  return value;
}

double dirichlet_L(double s) {
  if (!(s > 0.0) || std::isnan(s))
    fail(ErrorKind::Domain, "dirichlet_L needs s > 0, got " + std::to_string(s));
  // Cohen-Rodriguez Villegas-Zagier acceleration; (2k+1)^{-s} is a moment
  // sequence, so the error is at most 2 a_0 / (3 + sqrt 8)^n.
  constexpr int n = 40;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * std::pow(2.0 * k + 1.0, -s);
    b = static_cast<double>(k + n) * static_cast<double>(k - n) * b /
        ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

Complex log_gamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    fail(ErrorKind::Domain,
         "log_gamma pole at z = " + std::to_string(z.real()));
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) -
         log_gamma_lanczos(1.0 - z);
}

std::size_t zeta_zero_count() noexcept { return kZeroTable.size(); }

ZetaZero zeta_zero(int index) {
  if (index < 1 || static_cast<std::size_t>(index) > kZeroTable.size())
    fail(ErrorKind::Domain, "zeta zero index " + std::to_string(index) +
                                " outside table 1.." +
                                std::to_string(kZeroTable.size()));
  const double gamma = kZeroTable[static_cast<std::size_t>(index - 1)];
  return {index, gamma, gamma / 2.0};
}

double riemann_siegel_theta(double t) {
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  return 0.5 * t * std::log(t / (2.0 * std::numbers::pi)) - 0.5 * t -
         std::numbers::pi / 8.0 +
         inv * (1.0 / 48.0 +
                inv2 * (7.0 / 5760.0 +
                        inv2 * (31.0 / 80640.0 +
                                inv2 * (127.0 / 430080.0 +
                                        inv2 * (511.0 / 1216512.0)))));
}

Complex zeta_critical_line(double t) {
  if (std::abs(t) > 200.0)
    fail(ErrorKind::Domain, "zeta_critical_line limited to |t| <= 200");
  double last = 0.0;
  const int N = 30 + static_cast<int>(std::abs(t));
  return euler_maclaurin_zeta(Complex(0.5, t), N, 12, last);
}

double hardy_z(double t) {
  const Complex rotation = std::polar(1.0, riemann_siegel_theta(t));
  return (rotation * zeta_critical_line(t)).real();
}

ZeroBracket refine_zero(double lo, double hi, double width) {
  double zLo = hardy_z(lo);
  const double zHi = hardy_z(hi);
  if (std::signbit(zLo) == std::signbit(zHi) || zLo == 0.0 || zHi == 0.0)
    fail(ErrorKind::Verification, "Z(t) has no sign change on [" +
                                      std::to_string(lo) + ", " +
                                      std::to_string(hi) + "]");
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    const double zMid = hardy_z(mid);
    if (zMid == 0.0) return {mid, mid};
    if (std::signbit(zMid) == std::signbit(zLo)) {
      lo = mid;
      zLo = zMid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

} // namespace epz
