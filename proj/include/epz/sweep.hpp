#pragma once

#include <iosfwd>
#include <vector>

#include "epz/counting.hpp"
#include "epz/quadform.hpp"

namespace epz {

struct SweepConfig {
  double yMax = 1000.0;
  int rows = 100;
  bool logStep = false;
  bool timestamp = true;
};

// Thresholds x_1 < ... < x_rows = yMax; linear x_i = yMax i/rows, or
// geometric from 1 to yMax.
std::vector<double> sweep_points(const SweepConfig& config);

// "x,A,B,P,R" rows and "Y,M" rows with M = Y^{-5/4} int_1^Y |R|. Y rows are
// only written for Y >= 1. One enumeration to yMax backs both tables.
void write_sweep(const QuadraticForm& form, const SweepConfig& config,
                 std::ostream& counts, std::ostream& mean,
                 const EnumerationOptions& opts = {});

} // namespace epz
