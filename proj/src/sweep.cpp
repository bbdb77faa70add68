#include "epz/sweep.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <ostream>

#include <fmt/format.h>

#include "epz/error.hpp"

namespace epz {

std::vector<double> sweep_points(const SweepConfig& config) {
  if (config.rows < 1) fail(ErrorKind::InvalidArgument, "sweep needs rows >= 1");
  if (!(config.yMax > 0.0) || !std::isfinite(config.yMax))
    fail(ErrorKind::Domain, "sweep needs a finite yMax > 0");
  if (config.logStep && config.yMax < 1.0)
    fail(ErrorKind::Domain, "logarithmic sweep needs yMax >= 1");

  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(config.rows));
  for (int i = 1; i <= config.rows; ++i) {
    if (i == config.rows) {
      xs.push_back(config.yMax);
    } else if (config.logStep) {
      const double t = static_cast<double>(i - 1) / (config.rows - 1);
      xs.push_back(std::pow(config.yMax, t));
    } else {
      xs.push_back(config.yMax * i / config.rows);
    }
  }
  return xs;
}

namespace {

void write_stamp(std::ostream& out) {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  out << "# generated " << buf << '\n';
}

} // namespace

void write_sweep(const QuadraticForm& form, const SweepConfig& config,
                 std::ostream& counts, std::ostream& mean,
                 const EnumerationOptions& opts) {
  const std::vector<double> xs = sweep_points(config);
  const ValueList list = enumerate(form, config.yMax, opts);

  if (config.timestamp) {
    write_stamp(counts);
    write_stamp(mean);
  }
  counts << "x,A,B,P,R\n";
  mean << "Y,M\n";
  for (double x : xs) {
    const CountResult r = count_from(form, list, x);
    counts << fmt::format("{:.15g},{},{},{:.15g},{:.15g}\n", r.x, r.A, r.B, r.P,
                          r.R);
    if (x >= 1.0) {
      const double m = std::pow(x, -1.25) * integrate_abs_R(form, list, x);
      mean << fmt::format("{:.15g},{:.15g}\n", x, m);
    }
  }
}

} // namespace epz
