#pragma once

// Growth-rate measurement: runs are summarized as (size, ops) points and
// compared through least-squares slopes in log-log space, so machine speed
// never enters the verdict.

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace redlab {

struct BenchRow {
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::uint64_t calls = 0;
  std::uint64_t word_ops = 0;
  std::uint64_t wall_ns = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  void write_csv(std::ostream& out) const;
};

/// Least-squares slope of log(y) against log(x). Requires at least two
/// points with distinct positive x and positive y.
double fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace redlab
