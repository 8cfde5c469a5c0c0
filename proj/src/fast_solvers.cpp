#include "redlab/fast_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "redlab/kernels.hpp"

namespace redlab {

BucketingParams default_graph_bucketing(std::size_t n) {
  return {static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), 0.25)))};
}

BucketingParams default_value_bucketing(std::size_t n) {
  return {static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))))};
}

EdgeAnswers mono_triangle_fast(const ColoredGraph& g, std::optional<BucketingParams> params,
                               OpCounter* ops) {
  const std::size_t t = params ? params->t : default_graph_bucketing(g.n).t;

  EdgeAnswers answers;
  answers.flags.assign(g.edges.size(), 0);

  std::unordered_map<std::int64_t, std::vector<std::size_t>> by_color;
  for (std::size_t e = 0; e < g.edges.size(); ++e) by_color[g.edges[e].color].push_back(e);
  count(ops, g.edges.size());

  std::vector<const std::vector<std::size_t>*> classes;
  classes.reserve(by_color.size());
  std::vector<std::int64_t> class_color;
  for (const auto& [color, edges] : by_color) {
    classes.push_back(&edges);
    class_color.push_back(color);
  }
  std::vector<std::size_t> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (classes[x]->size() != classes[y]->size()) return classes[x]->size() > classes[y]->size();
    return class_color[x] < class_color[y];
  });

  // Vertex compaction scratch, reset per class via the touched list.
  std::vector<std::uint32_t> local_id(g.n, UINT32_MAX);
  std::vector<std::uint32_t> touched;

  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::vector<std::size_t>& edges = *classes[order[rank]];
    touched.clear();
    for (std::size_t e : edges) {
      for (std::uint32_t v : {g.edges[e].u, g.edges[e].v}) {
        if (local_id[v] == UINT32_MAX) {
          local_id[v] = static_cast<std::uint32_t>(touched.size());
          touched.push_back(v);
        }
      }
    }
    const std::size_t k = touched.size();

    if (rank < t) {
      // Dense path: one boolean squaring over the touched vertices.
      BoolMatrix adj(k, k);
      for (std::size_t e : edges) {
        const std::uint32_t u = local_id[g.edges[e].u];
        const std::uint32_t v = local_id[g.edges[e].v];
        adj.set(u, v, true);
        adj.set(v, u, true);
      }
      const BoolMatrix sq = bool_matmul(adj, adj, ops);
      for (std::size_t e : edges)
        if (sq.get(local_id[g.edges[e].u], local_id[g.edges[e].v])) answers.flags[e] = 1;
    } else {
      ColoredGraph sub;
      sub.n = k;
      sub.edges.reserve(edges.size());
      for (std::size_t e : edges) {
        std::uint32_t u = local_id[g.edges[e].u];
        std::uint32_t v = local_id[g.edges[e].v];
        if (u > v) std::swap(u, v);
        sub.edges.push_back({u, v, 0});
      }
      const EdgeAnswers sub_answers = ae_sparse_fast(sub, 0, ops);
      for (std::size_t i = 0; i < edges.size(); ++i)
        answers.flags[edges[i]] = sub_answers.flags[i];
    }

    for (std::uint32_t v : touched) local_id[v] = UINT32_MAX;
  }
  return answers;
}

std::vector<std::uint8_t> mono_convolution_fast(const Sequence& a, const Sequence& b,
                                                const Sequence& c,
                                                std::optional<BucketingParams> params,
                                                OpCounter* ops) {
  if (a.size() != b.size() || a.size() != c.size())
    throw std::invalid_argument("mono_convolution_fast: sequence lengths differ");
  const std::size_t n = a.size();
  std::vector<std::uint8_t> d(n, 0);
  if (n == 0) return d;

  const std::size_t t = params ? params->t : default_value_bucketing(n).t;
  std::vector<std::int64_t> top;
  if (t > 0) top = freq_table({&a, &b, &c}).top_values(t);

  for (std::int64_t v : top) {
    Sequence ia(n, 0), ib(n, 0);
    bool any_a = false, any_b = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == v) { ia[i] = 1; any_a = true; }
      if (b[i] == v) { ib[i] = 1; any_b = true; }
    }
    count(ops, n);
    if (!any_a || !any_b) continue;
    const auto conv = binary_convolution(ia, ib, ops);
    for (std::size_t i = 0; i < n; ++i)
      if (c[i] == v && conv[i] > 0) d[i] = 1;
  }

  // Index lists per infrequent value, collected in one pass; a[j] = b[i-j]
  // = v means the two indices sum to i, which is a three-sum question in
  // index space.
  const auto solve_group = [&](const ThreeSumInstance& idx) {
    if (idx.a.empty() || idx.b.empty() || idx.c.empty()) return;
    const auto flags = all_integers_3sum(idx, ops);
    for (std::size_t q = 0; q < flags.size(); ++q)
      if (flags[q]) d[static_cast<std::size_t>(idx.c[q])] = 1;
  };

  std::int64_t max_value = -1;
  bool any_negative = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (const std::int64_t v : {a[i], b[i], c[i]}) {
      if (is_fill(v)) continue;
      max_value = std::max(max_value, v);
      any_negative = any_negative || v < 0;
    }
  }
  count(ops, 3 * n);

  const auto dense_bound = static_cast<std::int64_t>(std::max<std::size_t>(512, n));
  if (!any_negative && max_value < dense_bound) {
    // Small value universe: direct-indexed buckets.
    const auto bound = static_cast<std::size_t>(max_value) + 1;
    std::vector<std::uint8_t> frequent(bound, 0);
    for (std::int64_t v : top)
      if (v >= 0 && static_cast<std::size_t>(v) < bound) frequent[static_cast<std::size_t>(v)] = 1;
    std::vector<ThreeSumInstance> groups(bound);
    for (std::size_t i = 0; i < n; ++i) {
      const auto pos = static_cast<std::int64_t>(i);
      if (!is_fill(a[i]) && !frequent[static_cast<std::size_t>(a[i])])
        groups[static_cast<std::size_t>(a[i])].a.push_back(pos);
      if (!is_fill(b[i]) && !frequent[static_cast<std::size_t>(b[i])])
        groups[static_cast<std::size_t>(b[i])].b.push_back(pos);
      if (!is_fill(c[i]) && !frequent[static_cast<std::size_t>(c[i])])
        groups[static_cast<std::size_t>(c[i])].c.push_back(pos);
    }
    count(ops, 3 * n);
    for (const ThreeSumInstance& idx : groups) solve_group(idx);
    return d;
  }

  const std::unordered_set<std::int64_t> frequent(top.begin(), top.end());
  std::unordered_map<std::int64_t, ThreeSumInstance> groups;
  for (std::size_t i = 0; i < n; ++i) {
    const auto pos = static_cast<std::int64_t>(i);
    if (!is_fill(a[i]) && frequent.find(a[i]) == frequent.end()) groups[a[i]].a.push_back(pos);
    if (!is_fill(b[i]) && frequent.find(b[i]) == frequent.end()) groups[b[i]].b.push_back(pos);
    if (!is_fill(c[i]) && frequent.find(c[i]) == frequent.end()) groups[c[i]].c.push_back(pos);
  }
  count(ops, 3 * n);
  for (const auto& [v, idx] : groups) solve_group(idx);
  return d;
}

std::vector<ExtInt> coin_change_fast(const CoinChangeInstance& inst, OpCounter* ops) {
  const auto n = static_cast<std::size_t>(inst.n);
  const auto pivot = static_cast<std::int64_t>(
      std::ceil(std::sqrt(static_cast<double>(inst.n))));

  std::vector<std::int64_t> light;
  Sequence heavy_ind(n + 1, 0);
  bool any_heavy = false;
  for (std::int64_t coin : inst.coins) {
    if (coin >= pivot) {
      heavy_ind[static_cast<std::size_t>(coin)] = 1;
      any_heavy = true;
    } else {
      light.push_back(coin);
    }
  }

  // Heavy rounds: values expressible with exactly <= r big coins. Any sum of
  // more than ceil(sqrt(n)) coins >= pivot would exceed n, so the round cap
  // loses nothing.
  std::vector<ExtInt> best(n + 1, kInf);
  best[0] = 0;
  if (any_heavy) {
    Sequence reach(n + 1, 0);
    reach[0] = 1;
    const auto rounds = static_cast<std::size_t>(pivot);
    for (std::size_t r = 1; r <= rounds; ++r) {
      const auto conv = binary_convolution(reach, heavy_ind, ops);
      bool grew = false;
      for (std::size_t v = 0; v <= n; ++v) {
        if (conv[v] > 0 && is_inf(best[v])) {
          best[v] = static_cast<ExtInt>(r);
          reach[v] = 1;
          grew = true;
        }
      }
      count(ops, n + 1);
      if (!grew) break;  // fixpoint, further rounds cannot add values
    }
  }

  // Small coins: ascending dynamic program over the heavy baseline.
  std::sort(light.begin(), light.end());
  for (std::size_t v = 1; v <= n; ++v) {
    for (std::int64_t coin : light) {
      if (static_cast<std::size_t>(coin) > v) break;
      const ExtInt via = best[v - static_cast<std::size_t>(coin)];
      if (!is_inf(via)) best[v] = ext_min(best[v], via + 1);
    }
  }
  count(ops, (n + 1) * std::max<std::size_t>(light.size(), 1));
  return best;
}

}  // namespace redlab
