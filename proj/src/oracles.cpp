#include "redlab/oracles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace redlab {

namespace {

struct Neighbor {
  std::uint32_t to;
  std::int64_t color;
};

// Sorted-by-neighbor adjacency lists, both directions of every edge.
std::vector<std::vector<Neighbor>> sorted_adjacency(const ColoredGraph& g) {
  std::vector<std::vector<Neighbor>> adj(g.n);
  for (const Edge& e : g.edges) {
    adj[e.u].push_back({e.v, e.color});
    adj[e.v].push_back({e.u, e.color});
  }
  for (auto& list : adj)
    std::sort(list.begin(), list.end(),
              [](const Neighbor& x, const Neighbor& y) { return x.to < y.to; });
  return adj;
}

// Walks adj[u] and adj[v] in lockstep; calls visit(color_uw, color_wv) for
// every common neighbor w. visit returns true to stop early.
template <typename Visit>
void for_common_neighbors(const std::vector<Neighbor>& au, const std::vector<Neighbor>& av,
                          OpCounter* ops, Visit visit) {
  std::size_t i = 0, j = 0;
  std::uint64_t steps = 0;
  while (i < au.size() && j < av.size()) {
    ++steps;
    if (au[i].to < av[j].to) {
      ++i;
    } else if (au[i].to > av[j].to) {
      ++j;
    } else {
      if (visit(au[i].color, av[j].color)) break;
      ++i;
      ++j;
    }
  }
  count(ops, steps);
}

}  // namespace

EdgeAnswers oracle_ae_mono(const ColoredGraph& g, OpCounter* ops) {
  const auto adj = sorted_adjacency(g);
  EdgeAnswers answers;
  answers.flags.assign(g.edges.size(), 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& edge = g.edges[e];
    for_common_neighbors(adj[edge.u], adj[edge.v], ops,
                         [&](std::int64_t cuw, std::int64_t cwv) {
                           if (cuw == edge.color && cwv == edge.color) {
                             answers.flags[e] = 1;
                             return true;
                           }
                           return false;
                         });
  }
  return answers;
}

EdgeAnswers oracle_ae_sparse(const ColoredGraph& g, OpCounter* ops) {
  const auto adj = sorted_adjacency(g);
  EdgeAnswers answers;
  answers.flags.assign(g.edges.size(), 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& edge = g.edges[e];
    for_common_neighbors(adj[edge.u], adj[edge.v], ops, [&](std::int64_t, std::int64_t) {
      answers.flags[e] = 1;
      return true;
    });
  }
  return answers;
}

ExtMatrix oracle_minmax(const ExtMatrix& a, const ExtMatrix& b, OpCounter* ops) {
  if (a.cols != b.rows) throw std::invalid_argument("oracle_minmax: inner dimensions differ");
  ExtMatrix c(a.rows, b.cols, kInf);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) {
      ExtInt best = kInf;
      for (std::size_t k = 0; k < a.cols; ++k)
        best = ext_min(best, std::max(a.at(i, k), b.at(k, j)));
      c.at(i, j) = best;
    }
  count(ops, static_cast<std::uint64_t>(a.rows) * b.cols * a.cols);
  return c;
}

ExtMatrix oracle_minwitness(const BoolMatrix& a, const BoolMatrix& b, OpCounter* ops) {
  if (a.cols != b.rows) throw std::invalid_argument("oracle_minwitness: inner dimensions differ");
  ExtMatrix c(a.rows, b.cols, kInf);
  std::uint64_t probes = 0;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j)
      for (std::size_t k = 0; k < a.cols; ++k) {
        ++probes;
        if (a.get(i, k) && b.get(k, j)) {
          c.at(i, j) = static_cast<ExtInt>(k);
          break;
        }
      }
  count(ops, probes);
  return c;
}

ExtMatrix oracle_apsp(const DirectedGraph& g, OpCounter* ops) {
  std::vector<std::vector<std::uint32_t>> out(g.n);
  for (const Edge& e : g.edges) out[e.u].push_back(e.v);
  ExtMatrix dist(g.n, g.n, kInf);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.n);
  std::uint64_t steps = 0;
  for (std::size_t s = 0; s < g.n; ++s) {
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(s));
    dist.at(s, s) = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      for (std::uint32_t v : out[u]) {
        ++steps;
        if (is_inf(dist.at(s, v))) {
          dist.at(s, v) = dist.at(s, u) + 1;
          queue.push_back(v);
        }
      }
    }
  }
  count(ops, steps);
  return dist;
}

namespace {

std::unordered_set<std::int64_t> pair_sums(const ThreeSumInstance& t, OpCounter* ops) {
  std::unordered_set<std::int64_t> sums;
  sums.reserve(t.a.size() * t.b.size() * 2 + 1);
  for (std::int64_t x : t.a)
    for (std::int64_t y : t.b) sums.insert(x + y);
  count(ops, static_cast<std::uint64_t>(t.a.size()) * t.b.size() + t.c.size());
  return sums;
}

}  // namespace

bool oracle_3sum(const ThreeSumInstance& t, OpCounter* ops) {
  const auto sums = pair_sums(t, ops);
  for (std::int64_t z : t.c)
    if (sums.contains(z)) return true;
  return false;
}

std::vector<std::uint8_t> oracle_allints_3sum(const ThreeSumInstance& t, OpCounter* ops) {
  const auto sums = pair_sums(t, ops);
  std::vector<std::uint8_t> flags(t.c.size(), 0);
  for (std::size_t i = 0; i < t.c.size(); ++i) flags[i] = sums.contains(t.c[i]) ? 1 : 0;
  return flags;
}

std::vector<std::uint8_t> oracle_monoconv(const Sequence& a, const Sequence& b,
                                          const Sequence& c, OpCounter* ops) {
  if (a.size() != b.size() || a.size() != c.size())
    throw std::invalid_argument("oracle_monoconv: sequence lengths differ");
  const std::size_t n = a.size();
  std::vector<std::uint8_t> d(n, 0);
  std::uint64_t probes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_fill(c[i])) continue;
    for (std::size_t j = 0; j <= i; ++j) {
      ++probes;
      if (a[j] == c[i] && b[i - j] == c[i]) {
        d[i] = 1;
        break;
      }
    }
  }
  count(ops, probes);
  return d;
}

std::vector<ExtInt> oracle_coinchange(const CoinChangeInstance& inst, OpCounter* ops) {
  std::vector<ExtInt> best(static_cast<std::size_t>(inst.n) + 1, kInf);
  best[0] = 0;
  std::uint64_t steps = 0;
  for (std::int64_t v = 1; v <= inst.n; ++v) {
    for (std::int64_t coin : inst.coins) {
      ++steps;
      if (coin > v || is_inf(best[v - coin])) continue;
      best[v] = ext_min(best[v], best[v - coin] + 1);
    }
  }
  count(ops, steps);
  return best;
}

}  // namespace redlab
