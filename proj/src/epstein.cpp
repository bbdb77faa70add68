#include "epz/epstein.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "epz/error.hpp"

namespace epz {

namespace {

std::string to_string(Complex s) {
  return fmt::format("({:g}{:+g}i)", s.real(), s.imag());
}

// Q^{-s} for Q > 0 through the real logarithm.
Complex real_power(double base, Complex exponent) {
  return std::exp(exponent * std::log(base));
}

void check_potter_region(Complex s) {
  if (s == Complex(1.0, 0.0))
    fail(ErrorKind::Domain, "zeta_Q has a pole at s = 1");
  if (!(s.real() > -0.25))
    fail(ErrorKind::Domain, "Potter's formula needs Re s > -1/4, got s = " +
                                to_string(s));
}

} // namespace

Complex zeta_q_series(const QuadraticForm& form, Complex s, double tol,
                      const EnumerationOptions& opts) {
  const double sigma = s.real();
  if (!(sigma > 1.0))
    fail(ErrorKind::Domain, "series needs Re s > 1, got s = " + to_string(s));
  if (!(tol > 0.0)) fail(ErrorKind::InvalidArgument, "tolerance must be > 0");

  const double area = main_coefficient_all(form);
  const double xMax = opts.maxPoints / area;
  auto partial = [&](double X) {
    const ValueList list = enumerate(form, X, opts);
    Complex sum = 0.0;
    for (const auto& e : list.entries())
      sum += static_cast<double>(e.totalMult) * real_power(e.value, -s);
    return sum + area * real_power(X, 1.0 - s) / (s - 1.0);
  };

  double X = 64.0 * lambda1(form);
  Complex previous = partial(X);
  while (true) {
    X *= 2.0;
    if (X > xMax)
      fail(ErrorKind::Resource,
           "series did not reach tolerance " + fmt::format("{:g}", tol) +
               " within the point budget");
    const Complex current = partial(X);
    // Left after the main-term tail is added back: the lattice remainder,
    // taken as O(sqrt X) for P(X).
    const double tail = (1.0 + std::abs(s) / (sigma - 0.5)) * std::pow(X, 0.5 - sigma);
    if (std::abs(current - previous) < tol && tail < tol) return current;
    previous = current;
  }
}

Complex potter_f1_from(const QuadraticForm& form, const ValueList& list,
                       double Z, Complex s) {
  check_potter_region(s);
  if (!(Z > 0.0)) fail(ErrorKind::Domain, "Potter parameter Z must be > 0");
  if (Z > list.cap())
    fail(ErrorKind::InvalidArgument, "Potter parameter exceeds list cap");

  Complex powerSum = 0.0;
  double valueSum = 0.0;  // sum of Q over all points, origin adds 0
  double pointCount = 1.0;  // origin
  for (const auto& e : list.entries()) {
    if (e.value > Z) break;
    const double mult = static_cast<double>(e.totalMult);
    powerSum += mult * real_power(e.value, -s);
    valueSum += mult * e.value;
    pointCount += mult;
  }
  const Complex zPow = real_power(Z, -s);  // Z^{-s}
  const double mainTerm = std::numbers::pi / std::sqrt(form.discriminant());
  return powerSum + s * zPow / Z * valueSum - (1.0 + s) * zPow * pointCount +
         mainTerm * s * (s + 1.0) / (s - 1.0) * zPow * Z;
}

Complex potter_f1(const QuadraticForm& form, double Z, Complex s,
                  const EnumerationOptions& opts) {
  check_potter_region(s);
  if (!(Z > 0.0)) fail(ErrorKind::Domain, "Potter parameter Z must be > 0");
  return potter_f1_from(form, enumerate(form, Z, opts), Z, s);
}

F2Bound potter_f2_bound(const QuadraticForm& form, double Z, Complex s) {
  if (!(Z > 0.0)) fail(ErrorKind::Domain, "Potter parameter Z must be > 0");
  const double d = form.discriminant();
  const double value = std::abs(s * (s + 1.0)) * std::pow(d, 0.75) /
                       std::pow(std::numbers::pi, 1.5) *
                       std::pow(kappa(form), -1.25) * zeta_real(1.25) *
                       dirichlet_L(1.25) / Z;
  return {value, s.real() == 0.75};
}

PotterEvaluation potter_evaluate(const QuadraticForm& form, double Z,
                                 Complex s, const EnumerationOptions& opts) {
  const Complex f1 = potter_f1(form, Z, s, opts);
  const F2Bound f2 = potter_f2_bound(form, Z, s);
  return {s, Z, f1, f2.value, f2.certified};
}

Complex functional_factor(const QuadraticForm& form, Complex s) {
  if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0))
    fail(ErrorKind::Domain, "functional equation undefined at s = " + to_string(s));
  const double base = 2.0 * std::numbers::pi / std::sqrt(form.discriminant());
  return std::exp((2.0 * s - 1.0) * std::log(base) + log_gamma(1.0 - s) -
                  log_gamma(s));
}

Complex functional_equation(const QuadraticForm& form, Complex s,
                            Complex zqAt1MinusS) {
  return functional_factor(form, s) * zqAt1MinusS;
}

PotterEvaluation reflected_evaluate(const QuadraticForm& form, double Z,
                                    Complex s, const EnumerationOptions& opts) {
  const PotterEvaluation mirror = potter_evaluate(form, Z, 1.0 - s, opts);
  const Complex chi = functional_factor(form, s);
  return {s, Z, chi * mirror.F1, std::abs(chi) * mirror.F2bound,
          mirror.certified};
}

} // namespace epz
