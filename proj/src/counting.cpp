#include "epz/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "epz/error.hpp"
#include "lattice_rows.hpp"
#include "parallel.hpp"

namespace epz {

ValueList::ValueList(double cap, std::vector<ValueEntry> entries)
    : cap_(cap), entries_(std::move(entries)) {
  cumTotal_.reserve(entries_.size());
  cumPrim_.reserve(entries_.size());
  std::int64_t t = 0, p = 0;
  for (const auto& e : entries_) {
    t += e.totalMult;
    p += e.primMult;
    cumTotal_.push_back(t);
    cumPrim_.push_back(p);
  }
}

std::size_t ValueList::upperIndex(double x) const {
  const auto it = std::upper_bound(
      entries_.begin(), entries_.end(), x,
      [](double v, const ValueEntry& e) { return v < e.value; });
  return static_cast<std::size_t>(it - entries_.begin());
}

std::int64_t ValueList::totalUpTo(double x) const {
  const std::size_t i = upperIndex(x);
  return i == 0 ? 0 : cumTotal_[i - 1];
}

std::int64_t ValueList::primitiveUpTo(double x) const {
  const std::size_t i = upperIndex(x);
  return i == 0 ? 0 : cumPrim_[i - 1];
}

std::int64_t ValueList::totalPoints() const noexcept {
  return cumTotal_.empty() ? 0 : cumTotal_.back();
}

std::int64_t ValueList::primitivePoints() const noexcept {
  return cumPrim_.empty() ? 0 : cumPrim_.back();
}

namespace {

void check_threshold(double x, const char* name) {
  if (!(x >= 0.0) || !std::isfinite(x))
    fail(ErrorKind::Domain,
         std::string(name) + " must be finite and >= 0, got " + std::to_string(x));
}

void check_budget(const QuadraticForm& form, double X,
                  const EnumerationOptions& opts) {
  const double predicted = main_coefficient_all(form) * X;
  if (predicted > opts.maxPoints)
    fail(ErrorKind::Resource,
         "enumeration up to " + std::to_string(X) + " needs about " +
             std::to_string(predicted) + " points, budget is " +
             std::to_string(opts.maxPoints));
}

struct Point {
  double value;
  bool primitive;
};

bool coprime(std::int64_t m, std::int64_t n) {
  return std::gcd(m < 0 ? -m : m, n < 0 ? -n : n) == 1;
}

// Points of one half plane: n > 0, or n = 0 and m > 0. The other half is the
// mirror image (m,n) -> (-m,-n), which evaluates to the same binary64 value.
void collect_row(const QuadraticForm& form, std::int64_t n, double X,
                 std::vector<Point>& out) {
  const auto range = detail::row_range(form, n, X);
  if (!range) return;
  const std::int64_t lo = n == 0 ? std::max<std::int64_t>(range->lo, 1) : range->lo;
  for (std::int64_t m = lo; m <= range->hi; ++m)
    out.push_back({form(m, n), coprime(m, n)});
}

constexpr std::size_t kRowsPerChunk = 16;

} // namespace

ValueList enumerate(const QuadraticForm& form, double X,
                    const EnumerationOptions& opts) {
  check_threshold(X, "enumeration bound");
  check_budget(form, X, opts);

  const std::int64_t rows = detail::max_row(form, X);
  const std::size_t rowCount = static_cast<std::size_t>(rows) + 1;  // n = 0..rows
  const std::size_t chunks = (rowCount + kRowsPerChunk - 1) / kRowsPerChunk;
  std::vector<std::vector<Point>> parts(chunks);
  detail::parallel_chunks(chunks, opts.workers, [&](std::size_t chunk) {
    const std::int64_t first = static_cast<std::int64_t>(chunk * kRowsPerChunk);
    const std::int64_t last =
        std::min<std::int64_t>(rows, first + kRowsPerChunk - 1);
    for (std::int64_t n = first; n <= last; ++n)
      collect_row(form, n, X, parts[chunk]);
  });

  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<Point> points;
  points.reserve(total);
  for (auto& p : parts) {
    points.insert(points.end(), p.begin(), p.end());
    std::vector<Point>().swap(p);
  }
  std::sort(points.begin(), points.end(),
            [](const Point& l, const Point& r) { return l.value < r.value; });

  std::vector<ValueEntry> entries;
  for (const Point& p : points) {
    if (entries.empty() || entries.back().value != p.value)
      entries.push_back({p.value, 0, 0});
    entries.back().totalMult += 2;
    if (p.primitive) entries.back().primMult += 2;
  }
  return ValueList(X, std::move(entries));
}

CountResult count_from(const QuadraticForm& form, const ValueList& list,
                       double x) {
  if (x > list.cap())
    fail(ErrorKind::InvalidArgument, "count threshold exceeds list cap");
  CountResult r{};
  r.x = x;
  r.A = 1 + list.totalUpTo(x);
  r.B = list.primitiveUpTo(x);
  r.P = static_cast<double>(r.A) - main_coefficient_all(form) * x;
  r.R = static_cast<double>(r.B) - main_coefficient_primitive(form) * x;
  return r;
}

CountResult count(const QuadraticForm& form, double x,
                  const EnumerationOptions& opts) {
  return count_from(form, enumerate(form, x, opts), x);
}

std::int64_t count_all_rows(const QuadraticForm& form, double x,
                            const EnumerationOptions& opts) {
  check_threshold(x, "count threshold");
  const std::int64_t rows = detail::max_row(form, x);
  const std::size_t rowCount = 2 * static_cast<std::size_t>(rows) + 1;
  const std::size_t chunks = (rowCount + kRowsPerChunk - 1) / kRowsPerChunk;
  std::vector<std::int64_t> partial(chunks, 0);
  detail::parallel_chunks(chunks, opts.workers, [&](std::size_t chunk) {
    const std::int64_t first =
        -rows + static_cast<std::int64_t>(chunk * kRowsPerChunk);
    const std::int64_t last =
        std::min<std::int64_t>(rows, first + kRowsPerChunk - 1);
    for (std::int64_t n = first; n <= last; ++n) {
      if (const auto range = detail::row_range(form, n, x))
        partial[chunk] += range->hi - range->lo + 1;
    }
  });
  return std::accumulate(partial.begin(), partial.end(), std::int64_t{0});
}

std::vector<int> mobius_table(std::size_t n) {
  std::vector<int> mu(n + 1, 0);
  if (n >= 1) mu[1] = 1;
  std::vector<std::size_t> primes;
  std::vector<bool> composite(n + 1, false);
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::size_t p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

std::int64_t count_primitive_moebius(const QuadraticForm& form, double x,
                                     const EnumerationOptions& opts) {
  check_threshold(x, "count threshold");
  const double smallest = lambda1(form);
  if (x < smallest) return 0;
  const auto kMax = static_cast<std::size_t>(std::floor(std::sqrt(x / smallest)));
  const std::vector<int> mu = mobius_table(kMax);
  std::int64_t b = 0;
  for (std::size_t k = 1; k <= kMax; ++k) {
    if (mu[k] == 0) continue;
    const double kk = static_cast<double>(k);
    b += mu[k] * (count_all_rows(form, x / (kk * kk), opts) - 1);
  }
  return b;
}

namespace {

// int_u^w |k - c t| dt
double abs_linear_integral(double k, double c, double u, double w) {
  const double root = k / c;
  if (root > u && root < w)
    return 0.5 * c * ((root - u) * (root - u) + (w - root) * (w - root));
  return std::abs((w - u) * (k - 0.5 * c * (u + w)));
}

} // namespace

double integrate_abs_R(const QuadraticForm& form, const ValueList& list,
                       double Y) {
  if (!(Y >= 1.0) || !std::isfinite(Y))
    fail(ErrorKind::Domain, "mean_abs_R needs Y >= 1, got " + std::to_string(Y));
  if (Y > list.cap())
    fail(ErrorKind::InvalidArgument, "integration bound exceeds list cap");

  const double c = main_coefficient_primitive(form);
  const auto entries = list.entries();

  // Breakpoints: primitive values in (1, Y].
  std::vector<double> jumps;
  std::vector<std::int64_t> levels;  // B on [jumps[i], jumps[i+1])
  jumps.push_back(1.0);
  levels.push_back(list.primitiveUpTo(1.0));
  for (const auto& e : entries) {
    if (e.value <= 1.0 || e.primMult == 0) continue;
    if (e.value > Y) break;
    jumps.push_back(e.value);
    levels.push_back(levels.back() + e.primMult);
  }
  jumps.push_back(Y);

  detail::CompensatedSum total;
  for (std::size_t i = 0; i < levels.size(); ++i)
    total.add(abs_linear_integral(static_cast<double>(levels[i]), c, jumps[i],
                                  jumps[i + 1]));
  return total.value();
}

double mean_abs_R(const QuadraticForm& form, double Y,
                  const EnumerationOptions& opts) {
  if (!(Y >= 1.0) || !std::isfinite(Y))
    fail(ErrorKind::Domain, "mean_abs_R needs Y >= 1, got " + std::to_string(Y));
  return integrate_abs_R(form, enumerate(form, Y, opts), Y);
}

} // namespace epz
