#pragma once

#include <string>
#include <vector>

#include "epz/counting.hpp"
#include "epz/epstein.hpp"
#include "epz/quadform.hpp"
#include "epz/special.hpp"

namespace epz {

struct WeightConstantReport {
  double integralPolynomial;  // int_0^inf (4+t^2)(9+4t^2)(1/4+t^2) t/(1+t^2)^5
  double integralLorentz;     // int_R dt/(25/16 + (t-beta0)^2)
  double integralLorentzAt0;  // same with beta0 = 0
  double constant;            // zeta(3)/pi^{5/2} sqrt(2 I1 I2)
};

// Bound on |w(eta)| from the weight function of the mean-value argument.
// Both integrals are done numerically and compared with 143/32 and 4 pi/5;
// throws Error(Verification) if either disagrees by more than 1e-6 relative
// or the constant exceeds 0.33.
WeightConstantReport weight_constant_check(double relTol = 1e-10,
                                           double beta0 = 7.0673625708673469);

struct BoundReport {
  QuadraticForm form{1.0, 0.0, 1.0};
  ZetaZero zero{};
  double Z = 0.0;
  Complex z0;            // 1/4 + i beta0
  double gammaRatio = 0; // |Gamma(1-z0)| / |Gamma(z0)|
  double prefactor = 0;  // 6 pi |(z0-1)(2z0-1)/(z0+2)^7| (2 pi/sqrt D)^{-1/2}
  double F1abs = 0;
  double F2bound = 0;
  double margin = 0;     // F1abs - F2bound
  double K0lower = 0;
  bool valid = false;    // margin > 0
};

// Lower bound for liminf Y^{-5/4} int_1^Y |R| through the zero 2 z0 of zeta,
// z0 = 1/4 + i gamma/2. zeta_Q(z0) is never evaluated directly: Potter runs at
// 1 - z0 (real part 3/4) and the functional equation carries it over.
BoundReport k0_lower_bound(const QuadraticForm& form, int zeroIndex, double Z,
                           const EnumerationOptions& opts = {});

// Same with an explicit zero ordinate (index recorded as 0).
BoundReport k0_lower_bound_at(const QuadraticForm& form, double gamma,
                              double Z, const EnumerationOptions& opts = {});

// Walks the zero table from index 1 until a report is valid; returns the
// last report tried (valid == false when every tabulated zero failed).
BoundReport k0_search(const QuadraticForm& form, double Z,
                      const EnumerationOptions& opts = {});

std::string to_key_value(const BoundReport& report);
std::string bound_csv_header();
std::string to_csv_row(const BoundReport& report);

// Y^{-5/4} int_1^Y |R| > 4e-4 - 3.62 Y^{-5/4}, valid for Q0 only.
// Throws Error(Domain) for other forms.
bool finite_y_check(const QuadraticForm& form, double Y, double meanIntegral);

double finite_y_threshold(double Y);

struct ReferenceCheck {
  std::string name;
  double computed;
  double expected;
  std::string relation;  // "=" (with tolerance), ">=", ">", "<="
  double tolerance;
  bool pass;
};

// Reruns the worked example: Q0, Z = 1000, first zeta zero.
std::vector<ReferenceCheck> verify_reference_example(
    const EnumerationOptions& opts = {});

} // namespace epz
