#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "epz/quadform.hpp"

namespace epz::detail {

struct RowRange {
  std::int64_t lo;
  std::int64_t hi;  // inclusive; every m in [lo, hi] has Q(m, n) <= X
};

// Rows with points below X satisfy |n| <= sqrt(4aX/D); one extra row absorbs
// rounding in that bound.
inline std::int64_t max_row(const QuadraticForm& form, double X) {
  return static_cast<std::int64_t>(
             std::floor(std::sqrt(4.0 * form.a() * X / form.discriminant()))) +
         1;
}

// The real solution interval of a m^2 + b n m + c n^2 <= X, snapped to the
// integers whose evaluated value is <= X.
inline std::optional<RowRange> row_range(const QuadraticForm& form,
                                         std::int64_t n, double X) {
  const double nd = static_cast<double>(n);
  const double disc = 4.0 * form.a() * X - form.discriminant() * nd * nd;
  const double centre = -form.b() * nd / (2.0 * form.a());
  const double half = std::sqrt(std::max(disc, 0.0)) / (2.0 * form.a());

  std::int64_t lo = static_cast<std::int64_t>(std::ceil(centre - half));
  std::int64_t hi = static_cast<std::int64_t>(std::floor(centre + half));
  if (lo > hi) {
    // Rounding may have hidden a single boundary point.
    lo = hi = static_cast<std::int64_t>(std::llround(centre));
    if (form(lo, n) > X) return std::nullopt;
  }
  while (form(lo - 1, n) <= X) --lo;
  while (lo <= hi && form(lo, n) > X) ++lo;
  while (form(hi + 1, n) <= X) ++hi;
  while (hi >= lo && form(hi, n) > X) --hi;
  if (lo > hi) return std::nullopt;
  return RowRange{lo, hi};
}

} // namespace epz::detail
