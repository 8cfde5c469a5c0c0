#include "redlab/gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace redlab {

ColoredGraph gen_colored_gnp(std::size_t n, double p, std::int64_t colors, Rng& rng) {
  if (colors < 1) throw std::invalid_argument("gen_colored_gnp: colors must be >= 1");
  ColoredGraph g;
  g.n = n;
  const auto space = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n);
  const std::uint64_t palette =
      static_cast<std::uint64_t>(std::min<std::int64_t>(colors, std::max<std::int64_t>(space, 1)));
  for (std::uint32_t u = 0; u + 1 < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (rand_chance(rng, p))
        g.edges.push_back({u, v, static_cast<std::int64_t>(rand_below(rng, palette))});
  return g;
}

DirectedGraph gen_directed_gnp(std::size_t n, double p, Rng& rng) {
  DirectedGraph g;
  g.n = n;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      if (u != v && rand_chance(rng, p)) g.edges.push_back({u, v, 0});
  return g;
}

BoolMatrix gen_bool_matrix(std::size_t rows, std::size_t cols, double density, Rng& rng) {
  BoolMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rand_chance(rng, density)) m.set(i, j, true);
  return m;
}

ExtMatrix gen_ext_matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi,
                         double inf_chance, Rng& rng) {
  if (lo > hi) throw std::invalid_argument("gen_ext_matrix: empty value range");
  ExtMatrix m(rows, cols);
  for (ExtInt& cell : m.cells)
    cell = rand_chance(rng, inf_chance) ? kInf : rand_range(rng, lo, hi);
  return m;
}

ThreeSumInstance gen_three_sum(std::size_t n, std::int64_t range, Rng& rng) {
  if (range < 1) throw std::invalid_argument("gen_three_sum: range must be >= 1");
  ThreeSumInstance t;
  t.a.reserve(n);
  t.b.reserve(n);
  t.c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.a.push_back(static_cast<std::int64_t>(rand_below(rng, range)));
    t.b.push_back(static_cast<std::int64_t>(rand_below(rng, range)));
    t.c.push_back(static_cast<std::int64_t>(rand_below(rng, 2 * range)));
  }
  return t;
}

ThreeSumInstance gen_three_sum_planted(std::size_t n, std::int64_t range, Rng& rng) {
  if (n == 0) throw std::invalid_argument("gen_three_sum_planted: n must be >= 1");
  ThreeSumInstance t = gen_three_sum(n, range, rng);
  const std::size_t i = rand_below(rng, n);
  const std::size_t j = rand_below(rng, n);
  const std::size_t k = rand_below(rng, n);
  t.c[k] = t.a[i] + t.b[j];
  return t;
}

ThreeSumInstance gen_three_sum_no(std::size_t n, std::int64_t range, Rng& rng) {
  if (range < 1) throw std::invalid_argument("gen_three_sum_no: range must be >= 1");
  ThreeSumInstance t;
  t.a.reserve(n);
  t.b.reserve(n);
  t.c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.a.push_back(static_cast<std::int64_t>(rand_below(rng, range)));
    t.b.push_back(static_cast<std::int64_t>(rand_below(rng, range)));
  }
  std::unordered_set<std::int64_t> sums;
  for (std::int64_t a : t.a)
    for (std::int64_t b : t.b) sums.insert(a + b);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t c = 0;
    bool found = false;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      c = static_cast<std::int64_t>(rand_below(rng, 2 * range));
      if (!sums.count(c)) {
        found = true;
        break;
      }
    }
    if (!found)
      throw std::runtime_error("gen_three_sum_no: value range too dense to avoid sums");
    t.c.push_back(c);
  }
  return t;
}

MonoConvInstance gen_mono_conv(std::size_t n, std::int64_t values, double fill_chance, Rng& rng) {
  if (values < 1) throw std::invalid_argument("gen_mono_conv: values must be >= 1");
  MonoConvInstance inst;
  inst.a.reserve(n);
  inst.b.reserve(n);
  inst.c.reserve(n);
  const auto draw = [&](Sequence& seq, std::int64_t fill) {
    if (rand_chance(rng, fill_chance))
      seq.push_back(fill);
    else
      seq.push_back(static_cast<std::int64_t>(rand_below(rng, values)));
  };
  for (std::size_t i = 0; i < n; ++i) {
    draw(inst.a, kNoneA);
    draw(inst.b, kNoneB);
    draw(inst.c, kNoneC);
  }
  return inst;
}

CoinChangeInstance gen_coin_change(std::int64_t n, std::size_t k, Rng& rng) {
  if (n < 1) throw std::invalid_argument("gen_coin_change: n must be >= 1");
  if (k < 1 || k > static_cast<std::size_t>(n))
    throw std::invalid_argument("gen_coin_change: need 1 <= k <= n");
  CoinChangeInstance inst;
  inst.n = n;
  std::unordered_set<std::int64_t> seen;
  while (seen.size() < k) seen.insert(rand_range(rng, 1, n));
  inst.coins.assign(seen.begin(), seen.end());
  std::sort(inst.coins.begin(), inst.coins.end());
  return inst;
}

}  // namespace redlab
