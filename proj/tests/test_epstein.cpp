#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "epz/epstein.hpp"
#include "epz/error.hpp"

using namespace epz;

namespace {

const QuadraticForm kCircle(1, 0, 1);
constexpr double kBeta0 = 14.134725141734693790 / 2.0;

// zeta(5/4) and L(5/4), from an arbitrary-precision library.
constexpr double kZeta54 = 4.5951118258429433807;
constexpr double kL54 = 0.82905071313839657038;

bool discs_intersect(const PotterEvaluation& x, const PotterEvaluation& y) {
  return std::abs(x.F1 - y.F1) <= x.F2bound + y.F2bound;
}

} // namespace

TEST_CASE("direct series") {
  // r(k) = 4 sum_{d|k} chi(d), so zeta_circle(s) = 4 zeta(s) L(s).
  const Complex two = zeta_q_series(kCircle, 2.0, 1e-9);
  CHECK(std::abs(two - 4.0 * zeta_real(2.0) * dirichlet_L(2.0)) < 1e-8);

  const Complex three = zeta_q_series(reference_form_q0(), 3.0, 1e-10);
  CHECK(std::abs(three.imag()) < 1e-12);

  // zeta_{4Q}(s) = 4^{-s} zeta_Q(s)
  const Complex s(2.5, 4.0);
  const Complex off = zeta_q_series(kCircle, s, 1e-9);
  CHECK(std::abs(zeta_q_series(QuadraticForm(4, 0, 4), s, 1e-9) * std::pow(4.0, s) -
                 off) < 1e-8);

  CHECK_THROWS_AS(zeta_q_series(kCircle, Complex(1.0, 3.0), 1e-6), Error);
  EnumerationOptions tiny;
  tiny.maxPoints = 1e4;
  try {
    zeta_q_series(kCircle, 1.1, 1e-12, tiny);
    FAIL("expected resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
  }
}

TEST_CASE("potter_f1 on the reference form") {
  const QuadraticForm q0 = reference_form_q0();
  const Complex s(0.75, -kBeta0);
  const Complex f1 = potter_f1(q0, 1000.0, s);
  CHECK(std::abs(std::abs(f1) - 0.422182) <= 1e-5);

  // Conjugate symmetry, bit for bit.
  CHECK(potter_f1(q0, 1000.0, std::conj(s)) == std::conj(f1));
  CHECK(potter_f1(q0, 777.0, Complex(2.0, 3.0)) ==
        std::conj(potter_f1(q0, 777.0, Complex(2.0, -3.0))));

  CHECK_THROWS_AS(potter_f1(q0, 1000.0, 1.0), Error);
  CHECK_THROWS_AS(potter_f1(q0, 1000.0, Complex(-0.25, 1.0)), Error);
  CHECK_THROWS_AS(potter_f1(q0, 0.0, 0.5), Error);
}

TEST_CASE("potter_f1 with only the origin enumerated") {
  const QuadraticForm q(2, 0, 5);  // lambda1 = 2
  const double Z = 1.5;
  const double mainTerm = std::numbers::pi / std::sqrt(q.discriminant());
  for (Complex s : {Complex(0.75, 3.0), Complex(2.0, 0.0), Complex(0.1, -8.0)}) {
    const Complex zs = std::exp(-s * std::log(Z));
    const Complex expected =
        -(1.0 + s) * zs + mainTerm * s * (s + 1.0) / (s - 1.0) * Z * zs;
    CHECK(std::abs(potter_f1(q, Z, s) - expected) < 1e-14 * std::abs(expected));
  }
}

TEST_CASE("potter_f2_bound") {
  const QuadraticForm q0 = reference_form_q0();
  const Complex s(0.75, -kBeta0);
  const F2Bound b = potter_f2_bound(q0, 1000.0, s);
  CHECK(std::abs(b.value - 0.236529) <= 1e-5);
  CHECK(b.certified);
  CHECK(potter_f2_bound(q0, 2000.0, s).value == b.value / 2.0);
  CHECK_FALSE(potter_f2_bound(q0, 1000.0, 2.0).certified);

  // Hand evaluation for the circle: D = 4, kappa = 1.
  const Complex t(0.75, 0.0);
  const double expected = std::abs(t * (t + 1.0)) * std::pow(4.0, 0.75) /
                          std::pow(std::numbers::pi, 1.5) * kZeta54 * kL54 / 100.0;
  CHECK(potter_f2_bound(kCircle, 100.0, t).value ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("F1 + F2 does not depend on Z") {
  const QuadraticForm q0 = reference_form_q0();
  const PotterEvaluation a = potter_evaluate(q0, 500.0, 2.0);
  const PotterEvaluation b = potter_evaluate(q0, 2000.0, 2.0);
  CHECK(std::abs(a.F1 - b.F1) <= a.F2bound + b.F2bound);

  // The series value lies inside the Potter enclosures.
  const Complex series = zeta_q_series(q0, 2.0, 1e-8);
  for (double Z : {250.0, 500.0, 1000.0, 2000.0}) {
    const PotterEvaluation e = potter_evaluate(q0, Z, 2.0);
    CHECK(std::abs(series - e.F1) <= e.F2bound);
  }
}

TEST_CASE("enclosures on Re s = 3/4 intersect pairwise") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> t(-10.0, 10.0);
  for (const QuadraticForm& q : {reference_form_q0(), kCircle, QuadraticForm(1, 1, 1)}) {
    const ValueList list = enumerate(q, 1000.0);
    for (int i = 0; i < 10; ++i) {
      const Complex s(0.75, t(rng));
      std::vector<PotterEvaluation> discs;
      for (double Z : {250.0, 500.0, 1000.0})
        discs.push_back({s, Z, potter_f1_from(q, list, Z, s),
                         potter_f2_bound(q, Z, s).value, true});
      CHECK(discs_intersect(discs[0], discs[1]));
      CHECK(discs_intersect(discs[0], discs[2]));
      CHECK(discs_intersect(discs[1], discs[2]));
    }
  }
}

TEST_CASE("functional equation") {
  const QuadraticForm q0 = reference_form_q0();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(-30.0, 30.0);
  for (int i = 0; i < 100; ++i) {
    const Complex s(re(rng), im(rng));
    const Complex v(re(rng), im(rng));
    const Complex there = functional_equation(q0, s, v);
    const Complex back = functional_equation(q0, 1.0 - s, there);
    CHECK(std::abs(back - v) <= 1e-10 * std::abs(v));
  }

  // Potter at s against Potter at 1-s carried over.
  const Complex s(0.6, 3.0);
  const PotterEvaluation direct = potter_evaluate(q0, 1000.0, s);
  const PotterEvaluation mirror = potter_evaluate(q0, 1000.0, 1.0 - s);
  const Complex chi = functional_factor(q0, s);
  CHECK(std::abs(functional_equation(q0, s, mirror.F1) - direct.F1) <=
        std::abs(chi) * mirror.F2bound + direct.F2bound);
  const PotterEvaluation reflected = reflected_evaluate(q0, 1000.0, s);
  CHECK(reflected.F1 == chi * mirror.F1);
  CHECK(reflected.F2bound == std::abs(chi) * mirror.F2bound);

  // Potter cannot supply zeta_Q(-1), so the s = 2 reflection is refused.
  try {
    reflected_evaluate(kCircle, 1000.0, 2.0);
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
  CHECK_NOTHROW(reflected_evaluate(kCircle, 1000.0, Complex(0.7, 5.0)));
  CHECK_THROWS_AS(functional_factor(q0, 1.0), Error);
  CHECK_THROWS_AS(functional_factor(q0, 0.0), Error);
  CHECK_THROWS_AS(functional_factor(q0, 3.0), Error);   // Gamma(1-s) pole
  CHECK_THROWS_AS(functional_factor(q0, -2.0), Error);  // Gamma(s) pole
}

TEST_CASE("functional factor modulus on the quarter line") {
  // |chi(1/4 + i b)| = (2 pi/sqrt D)^{-1/2} |Gamma(3/4 - i b)| / |Gamma(1/4 + i b)|
  const QuadraticForm q0 = reference_form_q0();
  const Complex z0(0.25, kBeta0);
  const double expected = std::pow(main_coefficient_all(q0), -0.5) *
                          std::exp((log_gamma(1.0 - z0) - log_gamma(z0)).real());
  CHECK(std::abs(functional_factor(q0, z0)) == doctest::Approx(expected).epsilon(1e-13));
}
