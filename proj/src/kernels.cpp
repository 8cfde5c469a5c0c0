#include "redlab/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace redlab {

BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b, OpCounter* ops) {
  if (a.cols != b.rows) throw std::invalid_argument("bool_matmul: inner dimensions differ");
  BoolMatrix c(a.rows, b.cols);
  const std::size_t wb = b.words_per_row;
  std::uint64_t word_ops = 0;
  for (std::size_t i = 0; i < a.rows; ++i) {
    std::uint64_t* out = c.row(i);
    const std::uint64_t* ra = a.row(i);
    for (std::size_t w = 0; w < a.words_per_row; ++w) {
      ++word_ops;
      std::uint64_t bits = ra[w];
      while (bits) {
        const std::size_t k = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* rb = b.row(k);
        for (std::size_t t = 0; t < wb; ++t) out[t] |= rb[t];
        word_ops += wb;
      }
    }
  }
  count(ops, word_ops);
  return c;
}

namespace {

// Transform arithmetic lives modulo a prime with a large power-of-two
// subgroup; counts from 0/1 inputs stay far below the modulus, so the
// convolution is exact over the integers.
constexpr std::uint64_t kMod = 998244353;  // 119 * 2^23 + 1
constexpr std::uint64_t kRoot = 3;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  base %= kMod;
  while (exp) {
    if (exp & 1) acc = acc * base % kMod;
    base = base * base % kMod;
    exp >>= 1;
  }
  return acc;
}

void ntt(std::vector<std::uint64_t>& v, bool invert, std::uint64_t& word_ops) {
  const std::size_t n = v.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w_len = pow_mod(kRoot, (kMod - 1) / len);
    if (invert) w_len = pow_mod(w_len, kMod - 2);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t w = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::uint64_t x = v[i + j];
        const std::uint64_t y = v[i + j + len / 2] * w % kMod;
        v[i + j] = x + y < kMod ? x + y : x + y - kMod;
        v[i + j + len / 2] = x >= y ? x - y : x + kMod - y;
        w = w * w_len % kMod;
        ++word_ops;
      }
    }
  }
  if (invert) {
    const std::uint64_t n_inv = pow_mod(n, kMod - 2);
    for (std::uint64_t& x : v) x = x * n_inv % kMod;
    word_ops += n;
  }
}

std::uint64_t to_bit(std::int64_t v) {
  if (v != 0 && v != 1) throw std::invalid_argument("binary_convolution: entries must be 0/1");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::vector<std::uint64_t> binary_convolution(const Sequence& a, const Sequence& b,
                                              OpCounter* ops) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  std::uint64_t word_ops = 0;

  // Tiny inputs skip the transform; counts stay exact either way.
  if (std::min(a.size(), b.size()) <= 16) {
    std::vector<std::uint64_t> out(out_len, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (to_bit(a[i]) == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += to_bit(b[j]);
      word_ops += b.size();
    }
    count(ops, word_ops);
    return out;
  }

  std::size_t size = 1;
  while (size < out_len) size <<= 1;
  std::vector<std::uint64_t> fa(size, 0), fb(size, 0);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = to_bit(a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = to_bit(b[i]);
  ntt(fa, false, word_ops);
  ntt(fb, false, word_ops);
  for (std::size_t i = 0; i < size; ++i) fa[i] = fa[i] * fb[i] % kMod;
  word_ops += size;
  ntt(fa, true, word_ops);
  fa.resize(out_len);
  count(ops, word_ops);

  // Counts are bounded by min(|a|, |b|) < kMod, so no residue wrapped.
  return fa;
}

namespace {

// Bit-set adjacency over n vertices; one matrix reused for membership tests.
struct AdjacencyBits {
  std::size_t n;
  std::size_t words;
  std::vector<std::uint64_t> bits;

  explicit AdjacencyBits(std::size_t n_)
      : n(n_), words((n_ + 63) / 64), bits(n_ * words, 0) {}
  void add(std::size_t u, std::size_t v) {
    bits[u * words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }
  bool has(std::size_t u, std::size_t v) const {
    return (bits[u * words + (v >> 6)] >> (v & 63)) & 1u;
  }
};

std::uint64_t pair_key(std::uint32_t u, std::uint32_t v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

EdgeAnswers ae_sparse_fast(const ColoredGraph& g, std::size_t delta, OpCounter* ops) {
  const std::size_t m = g.edges.size();
  if (delta == 0) delta = std::max<std::size_t>(1, static_cast<std::size_t>(
                              std::ceil(std::sqrt(static_cast<double>(m)))));

  EdgeAnswers answers;
  answers.flags.assign(m, 0);
  if (m == 0) return answers;

  AdjacencyBits adj(g.n);
  std::vector<std::vector<std::uint32_t>> neighbors(g.n);
  std::unordered_map<std::uint64_t, std::size_t> edge_index;
  edge_index.reserve(m * 2);
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& edge = g.edges[e];
    adj.add(edge.u, edge.v);
    adj.add(edge.v, edge.u);
    neighbors[edge.u].push_back(edge.v);
    neighbors[edge.v].push_back(edge.u);
    edge_index.emplace(pair_key(edge.u, edge.v), e);
  }
  const auto mark = [&](std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    answers.flags[edge_index.at(pair_key(u, v))] = 1;
  };

  std::uint64_t probes = 0;

  // Light pass: any triangle with a low-degree vertex shows up as a
  // neighbor pair of that vertex.
  for (std::uint32_t w = 0; w < g.n; ++w) {
    const auto& nb = neighbors[w];
    if (nb.size() >= delta) continue;
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        ++probes;
        if (adj.has(nb[x], nb[y])) {
          mark(nb[x], nb[y]);
          mark(nb[x], w);
          mark(nb[y], w);
        }
      }
  }

  // Heavy pass: triangles whose vertices all have degree >= delta survive in
  // the compacted heavy-only subgraph and fall to one boolean squaring.
  std::vector<std::uint32_t> heavy_id(g.n, UINT32_MAX);
  std::vector<std::uint32_t> heavy;
  for (std::uint32_t v = 0; v < g.n; ++v)
    if (neighbors[v].size() >= delta) {
      heavy_id[v] = static_cast<std::uint32_t>(heavy.size());
      heavy.push_back(v);
    }
  if (!heavy.empty()) {
    BoolMatrix h(heavy.size(), heavy.size());
    std::vector<std::size_t> heavy_edges;
    for (std::size_t e = 0; e < m; ++e) {
      const Edge& edge = g.edges[e];
      if (heavy_id[edge.u] == UINT32_MAX || heavy_id[edge.v] == UINT32_MAX) continue;
      h.set(heavy_id[edge.u], heavy_id[edge.v], true);
      h.set(heavy_id[edge.v], heavy_id[edge.u], true);
      heavy_edges.push_back(e);
    }
    OpCounter mm;
    const BoolMatrix sq = bool_matmul(h, h, &mm);
    probes += mm.ops;
    for (std::size_t e : heavy_edges) {
      const Edge& edge = g.edges[e];
      if (sq.get(heavy_id[edge.u], heavy_id[edge.v])) answers.flags[e] = 1;
    }
  }

  count(ops, probes);
  return answers;
}

std::vector<std::uint8_t> all_integers_3sum(const ThreeSumInstance& t, OpCounter* ops) {
  Sequence a = t.a;
  Sequence b = t.b;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end(), std::greater<>());
  std::vector<std::uint8_t> flags(t.c.size(), 0);
  std::uint64_t steps = a.size() * static_cast<std::uint64_t>(std::log2(std::max<std::size_t>(
                            2, a.size()))) +
                        b.size();
  for (std::size_t q = 0; q < t.c.size(); ++q) {
    const std::int64_t target = t.c[q];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      ++steps;
      const std::int64_t s = a[i] + b[j];
      if (s == target) {
        flags[q] = 1;
        break;
      }
      if (s < target) ++i; else ++j;
    }
  }
  count(ops, steps);
  return flags;
}

std::vector<std::int64_t> FrequencyTable::top_values(std::size_t t) const {
  std::vector<std::pair<std::int64_t, std::size_t>> items(counts.begin(), counts.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  if (items.size() > t) items.resize(t);
  std::vector<std::int64_t> values;
  values.reserve(items.size());
  for (const auto& [v, _] : items) values.push_back(v);
  return values;
}

std::vector<std::int64_t> FrequencyTable::remaining_values(std::size_t t) const {
  const auto top = top_values(t);
  std::vector<std::int64_t> rest;
  rest.reserve(counts.size() - top.size());
  for (const auto& [v, _] : counts)
    if (std::find(top.begin(), top.end(), v) == top.end()) rest.push_back(v);
  std::sort(rest.begin(), rest.end());
  return rest;
}

FrequencyTable freq_table(std::initializer_list<const Sequence*> seqs) {
  FrequencyTable table;
  for (const Sequence* s : seqs)
    for (std::int64_t v : *s)
      if (!is_fill(v)) ++table.counts[v];
  return table;
}

}  // namespace redlab
