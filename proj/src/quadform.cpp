#include "epz/quadform.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "epz/error.hpp"
#include "lattice_rows.hpp"

namespace epz {

QuadraticForm::QuadraticForm(double a, double b, double c)
    : a_(a), b_(b), c_(c), d_(4.0 * a * c - b * b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    fail(ErrorKind::Domain, "form coefficients must be finite");
  if (!(a > 0.0))
    fail(ErrorKind::Domain,
         "form is not positive definite: a = " + std::to_string(a) +
             " violates a > 0");
  if (!(d_ > 0.0))
    fail(ErrorKind::Domain,
         "form is not positive definite: D = 4ac - b^2 = " +
             std::to_string(d_) + " violates D > 0");
}

// Smaller eigenvalue of [[a, b/2], [b/2, c]]. Equal to the minimum of
// Q(tau,1)/(tau^2+1) over the two stationary points
// tau = (a - c +- sqrt((a-c)^2 + b^2)) / b, written without the cancellation
// that form suffers when the ellipse is elongated.
double kappa(const QuadraticForm& form) {
  const double a = form.a(), b = form.b(), c = form.c();
  if (b == 0.0) return std::min(a, c);
  return 0.5 * form.discriminant() / (a + c + std::hypot(a - c, b));
}

double max_ratio(const QuadraticForm& form) {
  return 0.5 * (form.a() + form.c() + std::hypot(form.a() - form.c(), form.b()));
}

double lambda1(const QuadraticForm& form) {
  const double bound = std::min(form.a(), form.c());
  double best = std::numeric_limits<double>::infinity();
  const std::int64_t rows = detail::max_row(form, bound);
  for (std::int64_t n = -rows; n <= rows; ++n) {
    const auto range = detail::row_range(form, n, bound);
    if (!range) continue;
    for (std::int64_t m = range->lo; m <= range->hi; ++m) {
      if (m == 0 && n == 0) continue;
      best = std::min(best, form(m, n));
    }
  }
  return best;
}

double main_coefficient_all(const QuadraticForm& form) {
  return 2.0 * std::numbers::pi / std::sqrt(form.discriminant());
}

double main_coefficient_primitive(const QuadraticForm& form) {
  return 12.0 / (std::numbers::pi * std::sqrt(form.discriminant()));
}

FormConstants form_constants(const QuadraticForm& form) {
  return {kappa(form), lambda1(form), main_coefficient_all(form),
          main_coefficient_primitive(form)};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

double parse_coefficient(std::string_view token) {
  const std::string original(token);
  token = trim(token);
  double sign = 1.0;
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    if (token.front() == '-') sign = -1.0;
    token = trim(token.substr(1));
  }
  if (token.empty()) fail(ErrorKind::Parse, "empty coefficient in form literal");

  if (token.starts_with("sqrt(")) {
    if (!token.ends_with(")"))
      fail(ErrorKind::Parse, "unterminated sqrt( in '" + original + "'");
    const std::string_view inner = trim(token.substr(5, token.size() - 6));
    std::uint64_t k = 0;
    const auto [ptr, ec] =
        std::from_chars(inner.data(), inner.data() + inner.size(), k);
    if (ec != std::errc{} || ptr != inner.data() + inner.size() || inner.empty())
      fail(ErrorKind::Parse,
           "sqrt() takes a nonnegative integer, got '" + original + "'");
    return sign * std::sqrt(static_cast<double>(k));
  }

  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    fail(ErrorKind::Parse, "cannot parse coefficient '" + original + "'");
  return sign * value;
}

} // namespace

QuadraticForm parse_form(std::string_view text) {
  std::vector<double> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? text.npos
                                                           : comma - start);
    coeffs.push_back(parse_coefficient(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coeffs.size() != 3)
    fail(ErrorKind::Parse, "form literal needs three coefficients a,b,c; got " +
                               std::to_string(coeffs.size()));
  return QuadraticForm(coeffs[0], coeffs[1], coeffs[2]);
}

QuadraticForm reference_form_q0() {
  return QuadraticForm(1.0, std::sqrt(2.0), std::sqrt(3.0));
}

bool is_reference_form_q0(const QuadraticForm& form) {
  return form == reference_form_q0();
}

} // namespace epz
