#pragma once

// Typed problem instances shared by every solver in the lab, plus the
// extended-integer arithmetic they all route through.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace redlab {

/// Extended integer: finite values plus a single absorbing infinity.
/// kInf doubles as the largest representable value, so INF > every finite
/// value without special-casing comparisons. Finite arithmetic that lands on
/// kInf is treated as overflow, never as a legitimate result.
using ExtInt = std::int64_t;
inline constexpr ExtInt kInf = std::numeric_limits<ExtInt>::max();

inline constexpr bool is_inf(ExtInt x) { return x == kInf; }

/// mul*x + add over extended integers. Requires mul >= 1; INF maps to INF.
/// Overflow (including hitting the kInf sentinel) throws std::overflow_error.
ExtInt ext_affine(ExtInt x, std::int64_t mul, std::int64_t add);

/// Saturating a+b: INF absorbs, finite overflow is a hard error.
ExtInt ext_add(ExtInt a, ExtInt b);

inline ExtInt ext_min(ExtInt a, ExtInt b) { return a < b ? a : b; }

/// Row-major matrix of extended integers.
struct ExtMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<ExtInt> cells;

  ExtMatrix() = default;
  ExtMatrix(std::size_t r, std::size_t c, ExtInt fill = 0)
      : rows(r), cols(c), cells(r * c, fill) {}

  ExtInt& at(std::size_t i, std::size_t j) { return cells[i * cols + j]; }
  ExtInt at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }

  bool operator==(const ExtMatrix&) const = default;
};

/// Boolean matrix with rows bit-packed into 64-bit words.
/// Invariant: padding bits past `cols` in each row word block stay zero.
struct BoolMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t words_per_row = 0;
  std::vector<std::uint64_t> words;

  BoolMatrix() = default;
  BoolMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), words_per_row((c + 63) / 64), words(r * words_per_row, 0) {}

  bool get(std::size_t i, std::size_t j) const {
    return (words[i * words_per_row + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value) {
    std::uint64_t& w = words[i * words_per_row + (j >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (j & 63);
    if (value) w |= bit; else w &= ~bit;
  }
  const std::uint64_t* row(std::size_t i) const { return words.data() + i * words_per_row; }
  std::uint64_t* row(std::size_t i) { return words.data() + i * words_per_row; }

  bool operator==(const BoolMatrix&) const = default;
};

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::int64_t color = 0;

  bool operator==(const Edge&) const = default;
};

/// Simple undirected graph with integer edge colors.
/// Invariants: endpoints < n, u < v on every edge, no duplicate pairs,
/// 0 <= color < n*n.
struct ColoredGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

/// Arc list with the same layout as ColoredGraph; (u, v) means u -> v and
/// color is ignored. Distinct type so validation and overloads can differ.
struct DirectedGraph : ColoredGraph {};

/// Integer sequence. Slots that carry no payload use one of the fill
/// sentinels below; payload values are >= 0 wherever sentinels may appear.
using Sequence = std::vector<std::int64_t>;

inline constexpr std::int64_t kNoneA = -1;
inline constexpr std::int64_t kNoneB = -2;
inline constexpr std::int64_t kNoneC = -3;

inline constexpr bool is_fill(std::int64_t v) {
  return v == kNoneA || v == kNoneB || v == kNoneC;
}

/// a in A, b in B, c in C with a + b = c. Values stay within half the
/// machine-word range so sums never overflow.
struct ThreeSumInstance {
  Sequence a;
  Sequence b;
  Sequence c;
};

inline constexpr std::int64_t kThreeSumValueBound = std::int64_t{1} << 62;

/// Coin denominations plus the bound n; solvers answer every value 1..n.
struct CoinChangeInstance {
  std::int64_t n = 0;
  std::vector<std::int64_t> coins;
};

/// Per-edge booleans, parallel to ColoredGraph::edges.
struct EdgeAnswers {
  std::vector<std::uint8_t> flags;

  bool operator==(const EdgeAnswers&) const = default;
};

struct ValidationReport {
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
  void fail(std::string what) { issues.push_back(std::move(what)); }
};

ValidationReport validate(const ColoredGraph& g);
ValidationReport validate(const DirectedGraph& g);
ValidationReport validate(const ExtMatrix& m);
ValidationReport validate(const BoolMatrix& m);
ValidationReport validate(const ThreeSumInstance& t);
ValidationReport validate(const CoinChangeInstance& c);
/// Joint check for a MonoConvolution instance: equal lengths, payloads >= 0,
/// fills restricted to the sentinel of their own sequence.
ValidationReport validate_mono_conv(const Sequence& a, const Sequence& b, const Sequence& c);

/// Work counter threaded through oracles, kernels and fast solvers so
/// benchmarks can compare growth rates instead of wall time.
struct OpCounter {
  std::uint64_t ops = 0;
  void add(std::uint64_t k) { ops += k; }
};

inline void count(OpCounter* c, std::uint64_t k) {
  if (c != nullptr) c->ops += k;
}

/// Smallest L with 2^L >= x; ceil_log2(0) == ceil_log2(1) == 0.
inline unsigned ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return static_cast<unsigned>(std::bit_width(x - 1));
}

}  // namespace redlab
