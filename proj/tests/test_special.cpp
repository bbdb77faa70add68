#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "epz/error.hpp"
#include "epz/special.hpp"

using namespace epz;

namespace {

constexpr double kPi = std::numbers::pi;

// Direct summation with the tail pinched between its two integral bounds.
double zeta_direct(double s, long terms) {
  double sum = 0.0;
  for (long n = terms; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
  const double upper = std::pow(static_cast<double>(terms), 1.0 - s) / (s - 1.0);
  const double lower = std::pow(static_cast<double>(terms + 1), 1.0 - s) / (s - 1.0);
  return sum + 0.5 * (upper + lower);
}

// Plain alternating sum; the mean of two consecutive partial sums cancels the
// leading oscillating error term.
double alternating_direct(double s, long terms) {
  double sum = 0.0;
  for (long n = terms - 1; n >= 0; --n) {
    const double t = std::pow(2.0 * n + 1.0, -s);
    sum += (n % 2 == 0) ? t : -t;
  }
  const double next = std::pow(2.0 * terms + 1.0, -s);
  return sum + 0.5 * ((terms % 2 == 0) ? next : -next);
}

Complex reduce_mod_2pi_i(Complex z) {
  const double k = std::round(z.imag() / (2.0 * kPi));
  return {z.real(), z.imag() - 2.0 * kPi * k};
}

} // namespace

TEST_CASE("zeta_real") {
  CHECK(zeta_real(2.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
  CHECK(std::abs(zeta_real(3.0) - zeta_direct(3.0, 10'000'000)) < 1e-9);
  CHECK(zeta_real(3.0) == doctest::Approx(1.2020569031595942854).epsilon(1e-14));
  CHECK(zeta_real(4.0) == doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-13));

  // Stieltjes: 1/(s-1) + gamma - gamma_1 (s-1)
  const double s = 1.25;
  const double euler = 0.57721566490153286;
  const double gamma1 = -0.072815845483676725;
  CHECK(std::abs(zeta_real(s) - (1.0 / (s - 1.0) + euler - gamma1 * (s - 1.0))) < 2e-3);
  CHECK(zeta_real(50.0) == doctest::Approx(1.0 + std::pow(2.0, -50.0)).epsilon(1e-15));

  CHECK_THROWS_AS(zeta_real(1.0), Error);
  CHECK_THROWS_AS(zeta_real(0.5), Error);
}

TEST_CASE("dirichlet_L") {
  CHECK(dirichlet_L(1.0) == doctest::Approx(kPi / 4.0).epsilon(1e-12));
  const double catalan = alternating_direct(2.0, 1'000'000);
  CHECK(std::abs(dirichlet_L(2.0) - catalan) < 1e-10);
  CHECK(std::abs(dirichlet_L(1.25) - alternating_direct(1.25, 10'000'000)) < 1e-10);
  CHECK(dirichlet_L(3.0) == doctest::Approx(std::pow(kPi, 3) / 32.0).epsilon(1e-13));
  CHECK_THROWS_AS(dirichlet_L(0.0), Error);
}

TEST_CASE("zeta_real decreases and dirichlet_L increases") {
  double prev = zeta_real(1.01);
  for (double s = 1.02; s < 30.0; s += 0.01) {
    const double v = zeta_real(s);
    CHECK(v < prev);
    prev = v;
  }
  // L rises from 1/2 at s -> 0 through pi/4 at s = 1 towards 1.
  prev = dirichlet_L(0.01);
  CHECK(prev == doctest::Approx(0.5).epsilon(0.01));
  // Beyond s ~ 25 consecutive grid values differ by less than an ulp.
  for (double s = 0.02; s < 20.0; s += 0.01) {
    const double v = dirichlet_L(s);
    CHECK(v > prev);
    CHECK(v < 1.0);
    prev = v;
  }
}

TEST_CASE("log_gamma values") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(0.5) - Complex(0.5 * std::log(kPi), 0.0)) < 1e-15);
  CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-13);
  // Reference values from an arbitrary-precision library.
  CHECK(std::abs(log_gamma({3.0, 4.0}) -
                 Complex(-1.7566267846037842, 4.742664438034658)) < 1e-13);
  CHECK(std::abs(log_gamma({0.5, 20.0}) -
                 Complex(-30.49698800269326, 39.91672910847333)) < 1e-12);
  CHECK(std::abs(reduce_mod_2pi_i(log_gamma({-1.5, 3.0}) -
                                  Complex(-6.115946290523605, -3.460569668918787))) < 1e-12);
  CHECK_THROWS_AS(log_gamma(0.0), Error);
  CHECK_THROWS_AS(log_gamma(-3.0), Error);
  CHECK_NOTHROW(log_gamma({-3.0, 1e-9}));
}

TEST_CASE("log_gamma recurrence and reflection") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(-20.0, 20.0);
  for (int i = 0; i < 100; ++i) {
    const Complex z(re(rng), im(rng));
    const Complex gap = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
    CHECK(std::abs(reduce_mod_2pi_i(gap)) < 1e-10);
  }
  std::uniform_real_distribution<double> im2(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const Complex z(re(rng), im2(rng));
    const Complex lhs = std::exp(log_gamma(z)) * std::exp(log_gamma(1.0 - z));
    const Complex rhs = kPi / std::sin(kPi * z);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(rhs));
  }
}

TEST_CASE("zeta on the critical line") {
  CHECK(std::abs(zeta_critical_line(20.0) -
                 Complex(0.42991386043784337, -1.0642914430805891)) < 1e-11);
  CHECK(std::abs(zeta_critical_line(60.0) -
                 Complex(0.54120083514634811, 0.22718392236826873)) < 1e-11);
  CHECK(riemann_siegel_theta(20.0) == doctest::Approx(1.186894808444484).epsilon(1e-11));
  CHECK(riemann_siegel_theta(14.5) == doctest::Approx(-1.5782929239815516).epsilon(1e-11));
  // Z is real: the rotated value has no imaginary part.
  for (double t : {15.0, 33.3, 61.0}) {
    const Complex rotated = std::polar(1.0, riemann_siegel_theta(t)) * zeta_critical_line(t);
    CHECK(std::abs(rotated.imag()) < 1e-9);
  }
}

TEST_CASE("zeta zero table") {
  const ZetaZero first = zeta_zero(1);
  CHECK(first.index == 1);
  CHECK(std::floor(first.beta0 * 1e5) / 1e5 == doctest::Approx(7.06736).epsilon(1e-12));
  CHECK(first.beta0 == first.gamma / 2.0);
  CHECK(zeta_zero_count() >= 10);

  CHECK(hardy_z(14.1) * hardy_z(14.2) < 0.0);
  const ZeroBracket b1 = refine_zero(14.1, 14.2, 1e-12);
  CHECK(b1.lo <= first.gamma + 1e-12);
  CHECK(b1.hi >= first.gamma - 1e-12);
  CHECK(first.gamma == doctest::Approx(14.134725).epsilon(1e-7));

  CHECK(hardy_z(21.0) * hardy_z(21.1) < 0.0);
  const ZeroBracket b2 = refine_zero(21.0, 21.1, 1e-12);
  CHECK(std::abs(b2.midpoint() - zeta_zero(2).gamma) < 1e-11);

  CHECK_THROWS_AS(refine_zero(15.0, 16.0, 1e-6), Error);
  CHECK_THROWS_AS(zeta_zero(0), Error);
  CHECK_THROWS_AS(zeta_zero(static_cast<int>(zeta_zero_count()) + 1), Error);
}

TEST_CASE("every tabulated zero is certified by a sign change of Z(t)") {
  double prev = 0.0;
  for (int i = 1; i <= static_cast<int>(zeta_zero_count()); ++i) {
    const double g = zeta_zero(i).gamma;
    CHECK(g > prev);
    prev = g;
    CAPTURE(i);
    CHECK(hardy_z(g - 1e-6) * hardy_z(g + 1e-6) < 0.0);
    const ZeroBracket b = refine_zero(g - 1e-6, g + 1e-6, 1e-11);
    CHECK(std::abs(b.midpoint() - g) < 1e-10);
  }
}
