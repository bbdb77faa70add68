#pragma once

#include <cstdint>
#include <string_view>

namespace epz {

// Positive definite binary quadratic form Q(m,n) = a m^2 + b m n + c n^2.
class QuadraticForm {
public:
  // Throws Error(Domain) unless a > 0 and 4ac - b^2 > 0.
  QuadraticForm(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  // 4ac - b^2
  double discriminant() const noexcept { return d_; }

  // a*m^2 + (b*m)*n + c*n^2, evaluated in exactly this order so that every
  // caller sees the same binary64 value for the same lattice point.
  double operator()(std::int64_t m, std::int64_t n) const noexcept {
    const double x = static_cast<double>(m);
    const double y = static_cast<double>(n);
    return a_ * (x * x) + (b_ * x) * y + c_ * (y * y);
  }

  // Real-argument evaluation, used for the kappa closed form.
  double at(double u, double v) const noexcept {
    return a_ * u * u + b_ * u * v + c_ * v * v;
  }

  bool operator==(const QuadraticForm&) const = default;

private:
  double a_;
  double b_;
  double c_;
  double d_;
};

inline QuadraticForm make_form(double a, double b, double c) {
  return QuadraticForm(a, b, c);
}

struct FormConstants {
  double kappa;     // min Q(u,v)/(u^2+v^2) over real (u,v) != 0
  double lambda1;   // smallest nonzero value of Q on Z^2
  double mainAll;   // 2 pi / sqrt(D), area coefficient of A(x)
  double mainPrim;  // 12 / (pi sqrt(D)), coefficient of B(x)
};

double kappa(const QuadraticForm& form);

// Largest eigenvalue of the Gram matrix; max Q(u,v)/(u^2+v^2). Only used to
// size enumeration boxes.
double max_ratio(const QuadraticForm& form);

double lambda1(const QuadraticForm& form);

double main_coefficient_all(const QuadraticForm& form);
double main_coefficient_primitive(const QuadraticForm& form);

FormConstants form_constants(const QuadraticForm& form);

// Parses "a,b,c" where each token is a decimal literal or sqrt(k) for a
// nonnegative integer k, optionally with a leading minus sign ("-sqrt(2)").
// Throws Error(Parse) on malformed input and Error(Domain) when the parsed
// coefficients do not define a positive definite form.
QuadraticForm parse_form(std::string_view text);

// Q0 = m^2 + sqrt(2) m n + sqrt(3) n^2
QuadraticForm reference_form_q0();
bool is_reference_form_q0(const QuadraticForm& form);

} // namespace epz
