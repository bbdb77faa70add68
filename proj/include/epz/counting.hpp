#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "epz/quadform.hpp"

namespace epz {

struct EnumerationOptions {
  // Number of worker threads splitting the row range; 0 means one per core.
  unsigned workers = 1;
  // Upper limit on the predicted number of lattice points, (2 pi/sqrt D) X.
  double maxPoints = 2.0e8;
};

struct ValueEntry {
  double value;             // Q(m,n)
  std::int64_t totalMult;   // number of (m,n) with this value
  std::int64_t primMult;    // those with gcd(|m|,|n|) = 1

  bool operator==(const ValueEntry&) const = default;
};

// All nonzero lattice points with Q(m,n) <= cap, grouped by value. Values
// are strictly increasing.
class ValueList {
public:
  ValueList() = default;
  ValueList(double cap, std::vector<ValueEntry> entries);

  double cap() const noexcept { return cap_; }
  std::span<const ValueEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  // Number of nonzero points with Q <= x (x <= cap), and the primitive ones.
  std::int64_t totalUpTo(double x) const;
  std::int64_t primitiveUpTo(double x) const;
  std::int64_t totalPoints() const noexcept;
  std::int64_t primitivePoints() const noexcept;

  bool operator==(const ValueList& other) const {
    return cap_ == other.cap_ && entries_ == other.entries_;
  }

private:
  std::size_t upperIndex(double x) const;

  double cap_ = 0.0;
  std::vector<ValueEntry> entries_;
  // prefix sums, one past each entry
  std::vector<std::int64_t> cumTotal_;
  std::vector<std::int64_t> cumPrim_;
};

struct CountResult {
  double x;
  std::int64_t A;  // all points, origin included
  std::int64_t B;  // primitive points
  double P;        // A - (2 pi/sqrt D) x
  double R;        // B - (12/(pi sqrt D)) x
};

ValueList enumerate(const QuadraticForm& form, double X,
                    const EnumerationOptions& opts = {});

CountResult count(const QuadraticForm& form, double x,
                  const EnumerationOptions& opts = {});

// Counts read off an existing list (x <= list.cap()).
CountResult count_from(const QuadraticForm& form, const ValueList& list,
                       double x);

// A(x) by per-row interval counting, without building a value list.
std::int64_t count_all_rows(const QuadraticForm& form, double x,
                            const EnumerationOptions& opts = {});

// Mobius values mu(0..n), linear sieve. mu(0) is unused and set to 0.
std::vector<int> mobius_table(std::size_t n);

// B(x) = sum_{k <= sqrt(x/lambda1)} mu(k) (A(x/k^2) - 1)
std::int64_t count_primitive_moebius(const QuadraticForm& form, double x,
                                     const EnumerationOptions& opts = {});

// Integral of |R(x)| over [1, Y], exact up to rounding: R is linear between
// consecutive primitive values and each piece is integrated in closed form.
double mean_abs_R(const QuadraticForm& form, double Y,
                  const EnumerationOptions& opts = {});

// Same integral from a list with cap >= Y.
double integrate_abs_R(const QuadraticForm& form, const ValueList& list,
                       double Y);

} // namespace epz
