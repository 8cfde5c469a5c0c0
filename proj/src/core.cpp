#include "redlab/core.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace redlab {

ExtInt ext_affine(ExtInt x, std::int64_t mul, std::int64_t add) {
  if (mul < 1) throw std::invalid_argument("ext_affine: mul must be >= 1");
  if (is_inf(x)) return kInf;
  std::int64_t scaled = 0;
  if (__builtin_mul_overflow(x, mul, &scaled))
    throw std::overflow_error("ext_affine: multiply overflow");
  std::int64_t out = 0;
  if (__builtin_add_overflow(scaled, add, &out))
    throw std::overflow_error("ext_affine: add overflow");
  if (is_inf(out)) throw std::overflow_error("ext_affine: result hits the INF sentinel");
  return out;
}

ExtInt ext_add(ExtInt a, ExtInt b) {
  if (is_inf(a) || is_inf(b)) return kInf;
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out) || is_inf(out))
    throw std::overflow_error("ext_add: finite overflow");
  return out;
}

namespace {

void check_edge_endpoints(const Edge& e, std::size_t n, bool need_ordered,
                          ValidationReport& report) {
  if (e.u >= n || e.v >= n) report.fail("edge endpoint out of range");
  if (e.u == e.v) report.fail("self-loop");
  if (need_ordered && e.u >= e.v) report.fail("edge endpoints not stored as u < v");
}

}  // namespace

ValidationReport validate(const ColoredGraph& g) {
  ValidationReport report;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  const std::int64_t color_bound =
      static_cast<std::int64_t>(g.n) * static_cast<std::int64_t>(g.n);
  for (const Edge& e : g.edges) {
    check_edge_endpoints(e, g.n, /*need_ordered=*/true, report);
    if (e.color < 0 || e.color >= color_bound) report.fail("edge color out of range");
    if (!seen.insert({e.u, e.v}).second) report.fail("duplicate edge");
    if (!report.ok()) break;
  }
  return report;
}

ValidationReport validate(const DirectedGraph& g) {
  ValidationReport report;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const Edge& e : g.edges) {
    check_edge_endpoints(e, g.n, /*need_ordered=*/false, report);
    if (!seen.insert({e.u, e.v}).second) report.fail("duplicate arc");
    if (!report.ok()) break;
  }
  return report;
}

ValidationReport validate(const ExtMatrix& m) {
  ValidationReport report;
  if (m.cells.size() != m.rows * m.cols) report.fail("cell count does not match dimensions");
  return report;
}

ValidationReport validate(const BoolMatrix& m) {
  ValidationReport report;
  if (m.words_per_row != (m.cols + 63) / 64) report.fail("words_per_row mismatch");
  if (m.words.size() != m.rows * m.words_per_row) report.fail("word count mismatch");
  if (m.cols % 64 != 0 && m.words_per_row > 0) {
    const std::uint64_t pad_mask = ~((std::uint64_t{1} << (m.cols % 64)) - 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (m.words[i * m.words_per_row + m.words_per_row - 1] & pad_mask) {
        report.fail("padding bits not zero");
        break;
      }
    }
  }
  return report;
}

ValidationReport validate(const ThreeSumInstance& t) {
  ValidationReport report;
  for (const Sequence* s : {&t.a, &t.b, &t.c}) {
    for (std::int64_t v : *s) {
      if (v >= kThreeSumValueBound || v <= -kThreeSumValueBound) {
        report.fail("value outside half machine-word range");
        return report;
      }
    }
  }
  return report;
}

ValidationReport validate(const CoinChangeInstance& c) {
  ValidationReport report;
  if (c.n < 0) report.fail("negative value bound");
  std::unordered_set<std::int64_t> seen;
  for (std::int64_t coin : c.coins) {
    if (coin < 1 || coin > c.n) report.fail("coin outside [1, n]");
    if (!seen.insert(coin).second) report.fail("duplicate coin");
    if (!report.ok()) break;
  }
  return report;
}

ValidationReport validate_mono_conv(const Sequence& a, const Sequence& b, const Sequence& c) {
  ValidationReport report;
  if (a.size() != b.size() || a.size() != c.size()) {
    report.fail("sequence lengths differ");
    return report;
  }
  struct Part { const Sequence* s; std::int64_t fill; };
  for (const Part part : {Part{&a, kNoneA}, Part{&b, kNoneB}, Part{&c, kNoneC}}) {
    for (std::int64_t v : *part.s) {
      if (v >= 0) continue;
      if (v != part.fill) {
        report.fail("negative entry is not this sequence's fill sentinel");
        return report;
      }
    }
  }
  return report;
}

}  // namespace redlab
