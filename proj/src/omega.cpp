#include "epz/omega.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "epz/error.hpp"
#include "epz/quadrature.hpp"

namespace epz {

namespace {

constexpr double kPolynomialClosedForm = 143.0 / 32.0;
constexpr double kLorentzClosedForm = 4.0 * std::numbers::pi / 5.0;
constexpr double kWeightBound = 0.33;
constexpr double kClosedFormTolerance = 1e-6;

// Finite-Y inequality for Q0 only; both constants come from the worked
// example for that form and are not known for any other.
constexpr double kQ0Liminf = 4e-4;
constexpr double kQ0Correction = 3.62;

double relative_gap(double computed, double exact) {
  return std::abs(computed - exact) / std::abs(exact);
}

} // namespace

WeightConstantReport weight_constant_check(double relTol, double beta0) {
  const auto polynomial = [](double t) {
    const double t2 = t * t;
    const double denom = 1.0 + t2;
    const double denom2 = denom * denom;
    return (4.0 + t2) * (9.0 + 4.0 * t2) * (0.25 + t2) * t /
           (denom2 * denom2 * denom);
  };
  const auto lorentz = [](double shift) {
    return [shift](double t) {
      const double u = t - shift;
      return 1.0 / (25.0 / 16.0 + u * u);
    };
  };

  WeightConstantReport report{};
  report.integralPolynomial = integrate_to_infinity(polynomial, 0.0, relTol).value;
  report.integralLorentz = integrate_real_line(lorentz(beta0), beta0, relTol).value;
  report.integralLorentzAt0 = integrate_real_line(lorentz(0.0), 0.0, relTol).value;
  report.constant = zeta_real(3.0) / std::pow(std::numbers::pi, 2.5) *
                    std::sqrt(2.0 * report.integralPolynomial *
                              report.integralLorentz);

  if (relative_gap(report.integralPolynomial, kPolynomialClosedForm) >
      kClosedFormTolerance)
    fail(ErrorKind::Verification,
         fmt::format("polynomial weight integral {:.12g} != 143/32",
                     report.integralPolynomial));
  for (double value : {report.integralLorentz, report.integralLorentzAt0}) {
    if (relative_gap(value, kLorentzClosedForm) > kClosedFormTolerance)
      fail(ErrorKind::Verification,
           fmt::format("Lorentz weight integral {:.12g} != 4 pi/5", value));
  }
  if (!(report.constant <= kWeightBound))
    fail(ErrorKind::Verification,
         fmt::format("weight constant {:.12g} exceeds 0.33", report.constant));
  return report;
}

namespace {

BoundReport assemble_bound(const QuadraticForm& form, const ZetaZero& zero,
                           const ValueList& list, double Z) {
  BoundReport r;
  r.form = form;
  r.zero = zero;
  r.Z = Z;
  r.z0 = Complex(0.25, zero.beta0);

  const Complex z0 = r.z0;
  r.gammaRatio = std::exp((log_gamma(1.0 - z0) - log_gamma(z0)).real());
  const Complex ratio = (z0 - 1.0) * (2.0 * z0 - 1.0) / std::pow(z0 + 2.0, 7);
  r.prefactor = 6.0 * std::numbers::pi * std::abs(ratio) /
                std::sqrt(main_coefficient_all(form));

  // Re(1 - z0) = 3/4: the line where the F2 constant holds.
  const Complex s = 1.0 - z0;
  r.F1abs = std::abs(potter_f1_from(form, list, Z, s));
  r.F2bound = potter_f2_bound(form, Z, s).value;
  r.margin = r.F1abs - r.F2bound;
  r.valid = r.margin > 0.0;
  r.K0lower = r.valid ? r.prefactor * r.gammaRatio * r.margin : 0.0;
  return r;
}

void check_z(double Z) {
  if (!(Z > 0.0) || !std::isfinite(Z))
    fail(ErrorKind::Domain, "Potter parameter Z must be finite and > 0");
}

} // namespace

BoundReport k0_lower_bound_at(const QuadraticForm& form, double gamma,
                              double Z, const EnumerationOptions& opts) {
  check_z(Z);
  return assemble_bound(form, {0, gamma, gamma / 2.0}, enumerate(form, Z, opts), Z);
}

BoundReport k0_lower_bound(const QuadraticForm& form, int zeroIndex, double Z,
                           const EnumerationOptions& opts) {
  check_z(Z);
  const ZetaZero zero = zeta_zero(zeroIndex);
  return assemble_bound(form, zero, enumerate(form, Z, opts), Z);
}

BoundReport k0_search(const QuadraticForm& form, double Z,
                      const EnumerationOptions& opts) {
  check_z(Z);
  const ValueList list = enumerate(form, Z, opts);
  BoundReport last;
  for (int index = 1; index <= static_cast<int>(zeta_zero_count()); ++index) {
    last = assemble_bound(form, zeta_zero(index), list, Z);
    if (last.valid) return last;
  }
  return last;
}

std::string to_key_value(const BoundReport& r) {
  std::string out;
  const auto line = [&out](std::string_view key, double value) {
    out += fmt::format("{} = {:.12g}\n", key, value);
  };
  line("a", r.form.a());
  line("b", r.form.b());
  line("c", r.form.c());
  line("D", r.form.discriminant());
  out += fmt::format("zero_index = {}\n", r.zero.index);
  line("gamma", r.zero.gamma);
  line("beta0", r.zero.beta0);
  line("Z", r.Z);
  line("z0_re", r.z0.real());
  line("z0_im", r.z0.imag());
  line("gamma_ratio", r.gammaRatio);
  line("prefactor", r.prefactor);
  line("F1_abs", r.F1abs);
  line("F2_bound", r.F2bound);
  line("margin", r.margin);
  line("K0_lower", r.K0lower);
  out += fmt::format("valid = {}\n", r.valid ? "true" : "false");
  return out;
}

std::string bound_csv_header() {
  return "a,b,c,D,zero_index,gamma,Z,z0_re,z0_im,gamma_ratio,prefactor,"
         "F1_abs,F2_bound,margin,K0_lower,valid";
}

std::string to_csv_row(const BoundReport& r) {
  return fmt::format(
      "{:.17g},{:.17g},{:.17g},{:.17g},{},{:.17g},{:.17g},{:.17g},{:.17g},"
      "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}",
      r.form.a(), r.form.b(), r.form.c(), r.form.discriminant(), r.zero.index,
      r.zero.gamma, r.Z, r.z0.real(), r.z0.imag(), r.gammaRatio, r.prefactor,
      r.F1abs, r.F2bound, r.margin, r.K0lower, r.valid ? 1 : 0);
}

double finite_y_threshold(double Y) {
  return kQ0Liminf - kQ0Correction * std::pow(Y, -1.25);
}

bool finite_y_check(const QuadraticForm& form, double Y, double meanIntegral) {
  if (!is_reference_form_q0(form))
    fail(ErrorKind::Domain,
         "finite-Y constants are only known for m^2 + sqrt2 mn + sqrt3 n^2");
  if (!(Y >= 1.0)) fail(ErrorKind::Domain, "finite-Y check needs Y >= 1");
  return std::pow(Y, -1.25) * meanIntegral > finite_y_threshold(Y);
}

std::vector<ReferenceCheck> verify_reference_example(const EnumerationOptions& opts) {
  std::vector<ReferenceCheck> checks;
  const auto approx = [&](std::string name, double computed, double expected,
                          double tol) {
    checks.push_back({std::move(name), computed, expected, "=", tol,
                      std::abs(computed - expected) <= tol});
  };

  const QuadraticForm q0 = reference_form_q0();
  const BoundReport r = k0_lower_bound(q0, 1, 1000.0, opts);
  approx("beta0", r.zero.beta0, 7.06736, 1e-5);
  approx("|F1(1000, 1-z0)|", r.F1abs, 0.422182, 1e-5);
  approx("F2 bound(1000, 1-z0)", r.F2bound, 0.236529, 1e-5);
  checks.push_back({"|F1| - F2 bound", r.margin, 0.185653, ">=", 2e-5,
                    r.margin >= 0.185653 - 2e-5});
  checks.push_back({"K0 lower bound", r.K0lower, 4e-4, ">", 0.0,
                    r.valid && r.K0lower > 4e-4});

  WeightConstantReport w{};
  bool weightOk = true;
  try {
    w = weight_constant_check();
  } catch (const Error&) {
    weightOk = false;
  }
  approx("weight integral 143/32", w.integralPolynomial, kPolynomialClosedForm,
         kClosedFormTolerance * kPolynomialClosedForm);
  approx("weight integral 4pi/5", w.integralLorentz, kLorentzClosedForm,
         kClosedFormTolerance * kLorentzClosedForm);
  checks.push_back({"weight constant", w.constant, kWeightBound, "<=", 0.0,
                    weightOk && w.constant <= kWeightBound});
  return checks;
}

} // namespace epz
