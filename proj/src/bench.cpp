#include "redlab/bench.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace redlab {

void BenchReport::write_csv(std::ostream& out) const {
  out << "size,seed,calls,word_ops,wall_ns\n";
  for (const BenchRow& row : rows)
    out << row.size << ',' << row.seed << ',' << row.calls << ',' << row.word_ops << ','
        << row.wall_ns << '\n';
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: need at least two points");
  double mean_x = 0, mean_y = 0;
  for (const auto& [x, y] : points) {
    if (x <= 0 || y <= 0)
      throw std::invalid_argument("fit_loglog_slope: points must be positive");
    mean_x += std::log(x);
    mean_y += std::log(y);
  }
  mean_x /= static_cast<double>(points.size());
  mean_y /= static_cast<double>(points.size());

  double cov = 0, var = 0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mean_x;
    cov += dx * (std::log(y) - mean_y);
    var += dx * dx;
  }
  if (var == 0) throw std::invalid_argument("fit_loglog_slope: sizes do not vary");
  return cov / var;
}

}  // namespace redlab
