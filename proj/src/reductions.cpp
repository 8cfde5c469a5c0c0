#include "redlab/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "redlab/kernels.hpp"
#include "redlab/oracles.hpp"

namespace redlab {

namespace {

// Window color of a finite value x at refinement level l.
// Half-open: x in [2^(l-1) * 2j, 2^(l-1) * (2j+1)); closed adds the right
// endpoint. Level 0 degenerates to exact equality, color = x.
std::optional<std::int64_t> window_color_halfopen(ExtInt x, unsigned level) {
  if (level == 0) return x;
  const ExtInt q = x >> (level - 1);
  if ((q & 1) == 0) return q >> 1;
  return std::nullopt;
}

std::optional<std::int64_t> window_color_closed(ExtInt x, unsigned level) {
  if (level == 0) return x;
  const ExtInt q = x >> (level - 1);
  if ((q & 1) == 0) return q >> 1;
  const ExtInt rem = x & ((ExtInt{1} << (level - 1)) - 1);
  if (rem == 0) return q >> 1;
  return std::nullopt;
}

[[noreturn]] void interval_violation(const char* where, unsigned level, std::size_t slot,
                                     ExtInt truth, ExtInt prefix) {
  std::ostringstream msg;
  msg << where << ": level " << level << " slot " << slot << " holds prefix " << prefix
      << " but the true value is " << truth;
  throw std::logic_error(msg.str());
}

// cap == kInf disables truncation. Prefix must satisfy
// truncated truth in [prefix << level, (prefix + 1) << level).
void check_matrix_level(IntervalAuditMatrix& audit, const ExtMatrix& cur, unsigned level,
                        ExtInt cap, const char* where) {
  for (std::size_t i = 0; i < cur.rows; ++i) {
    for (std::size_t j = 0; j < cur.cols; ++j) {
      ExtInt x = audit.truth.at(i, j);
      if (!is_inf(cap) && !is_inf(x) && x > cap) x = kInf;
      const ExtInt p = cur.at(i, j);
      if (is_inf(x) || is_inf(p)) {
        if (is_inf(x) != is_inf(p)) interval_violation(where, level, i * cur.cols + j, x, p);
        continue;
      }
      if (x < (p << level) || x >= ((p + 1) << level))
        interval_violation(where, level, i * cur.cols + j, x, p);
    }
  }
  ++audit.levels_checked;
}

void check_seq_level(IntervalAuditSeq& audit, const std::vector<ExtInt>& cur, unsigned level,
                     ExtInt cap, const char* where) {
  for (std::size_t i = 0; i < cur.size(); ++i) {
    ExtInt x = audit.truth[i];
    if (!is_inf(cap) && !is_inf(x) && x > cap) x = kInf;
    const ExtInt p = cur[i];
    if (is_inf(x) || is_inf(p)) {
      if (is_inf(x) != is_inf(p)) interval_violation(where, level, i, x, p);
      continue;
    }
    if (x < (p << level) || x >= ((p + 1) << level))
      interval_violation(where, level, i, x, p);
  }
  ++audit.levels_checked;
}

std::uint64_t flag_key(std::uint32_t q, std::uint32_t r) {
  return (std::uint64_t{q} << 32) | r;
}

}  // namespace

MonoDeltaSolver make_oracle_mono_solver(CallLog& log) {
  return MonoDeltaSolver(
      [](const ColoredGraph& g, OpCounter* ops) { return oracle_ae_mono(g, ops); }, log);
}

MonoDeltaSolver make_fast_mono_solver(CallLog& log, std::optional<BucketingParams> params) {
  return MonoDeltaSolver(
      [params](const ColoredGraph& g, OpCounter* ops) { return mono_triangle_fast(g, params, ops); },
      log);
}

MinMaxSolver make_oracle_minmax_solver(CallLog& log) {
  return MinMaxSolver(
      [](const ExtMatrix& a, const ExtMatrix& b, OpCounter* ops) { return oracle_minmax(a, b, ops); },
      log);
}

MonoConvSolver make_oracle_monoconv_solver(CallLog& log) {
  return MonoConvSolver([](const Sequence& a, const Sequence& b, const Sequence& c,
                           OpCounter* ops) { return oracle_monoconv(a, b, c, ops); },
                        log);
}

MonoConvSolver make_fast_monoconv_solver(CallLog& log, std::optional<BucketingParams> params) {
  return MonoConvSolver([params](const Sequence& a, const Sequence& b, const Sequence& c,
                                 OpCounter* ops) { return mono_convolution_fast(a, b, c, params, ops); },
                        log);
}

ExtMatrix minwitness_via_minmax(const BoolMatrix& a, const BoolMatrix& b, MinMaxSolver& solver) {
  if (a.cols != b.rows)
    throw std::invalid_argument("minwitness_via_minmax: inner dimensions differ");
  ExtMatrix lhs(a.rows, a.cols, kInf);
  ExtMatrix rhs(b.rows, b.cols, kInf);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      if (a.get(i, k)) lhs.at(i, k) = static_cast<ExtInt>(k);
  for (std::size_t k = 0; k < b.rows; ++k)
    for (std::size_t j = 0; j < b.cols; ++j)
      if (b.get(k, j)) rhs.at(k, j) = static_cast<ExtInt>(k);
  // max over a feasible index k is k itself, so the min-max picks the
  // smallest feasible k and INF exactly when none exists.
  return solver(lhs, rhs);
}

ExtMatrix apsp_via_minmax(const DirectedGraph& g, MinMaxSolver& solver) {
  const std::size_t n = g.n;
  ExtMatrix dist(n, n, kInf);
  for (std::size_t i = 0; i < n; ++i) dist.at(i, i) = 0;
  for (const Edge& e : g.edges) dist.at(e.u, e.v) = 1;

  const unsigned rounds = ceil_log2(n);
  for (unsigned r = 0; r < rounds; ++r) {
    // dist holds exact distances up to 2^r, INF beyond. An even target
    // distance splits into two equal halves; an odd one into halves
    // differing by one, realized by shifting the second operand.
    const ExtMatrix even = solver(dist, dist);
    ExtMatrix shifted = dist;
    for (ExtInt& x : shifted.cells) x = ext_affine(x, 1, -1);
    const ExtMatrix odd = solver(dist, shifted);
    for (std::size_t i = 0; i < n * n; ++i)
      dist.cells[i] = ext_min(ext_affine(even.cells[i], 2, 0), ext_affine(odd.cells[i], 2, 1));
  }
  return dist;
}

ExtMatrix minwitness_via_mono(const BoolMatrix& a, const BoolMatrix& b, MonoDeltaSolver& solver,
                              IntervalAuditMatrix* audit) {
  if (a.cols != b.rows)
    throw std::invalid_argument("minwitness_via_mono: inner dimensions differ");
  const std::size_t rows = a.rows;
  const std::size_t inner = a.cols;
  const std::size_t cols = b.cols;

  // Extra always-feasible index `inner`, so every pair has a witness and
  // decoding it back to INF is uniform.
  const std::size_t padded = inner + 1;
  const unsigned levels = ceil_log2(padded);

  ExtMatrix padded_truth;
  if (audit != nullptr) {
    padded_truth = audit->truth;
    for (ExtInt& x : padded_truth.cells)
      if (is_inf(x)) x = static_cast<ExtInt>(inner);
  }

  ExtMatrix cur(rows, cols, 0);
  for (unsigned level = levels; level-- > 0;) {
    ColoredGraph gadget;
    gadget.n = rows + padded + cols;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < padded; ++k)
        if (k == inner || a.get(i, k))
          gadget.edges.push_back({static_cast<std::uint32_t>(i),
                                  static_cast<std::uint32_t>(rows + k),
                                  static_cast<std::int64_t>(k >> level)});
    for (std::size_t k = 0; k < padded; ++k)
      for (std::size_t j = 0; j < cols; ++j)
        if (k == inner || b.get(k, j))
          gadget.edges.push_back({static_cast<std::uint32_t>(rows + k),
                                  static_cast<std::uint32_t>(rows + padded + j),
                                  static_cast<std::int64_t>(k >> level)});
    const std::size_t base = gadget.edges.size();
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        gadget.edges.push_back({static_cast<std::uint32_t>(i),
                                static_cast<std::uint32_t>(rows + padded + j),
                                2 * cur.at(i, j)});

    const EdgeAnswers ans = solver(gadget);
    // A flagged pair edge certifies a witness in the lower half of the
    // current interval, so the next prefix bit is 0.
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        cur.at(i, j) = 2 * cur.at(i, j) + (ans.flags[base + i * cols + j] ? 0 : 1);

    if (audit != nullptr) {
      IntervalAuditMatrix probe{padded_truth, audit->levels_checked};
      check_matrix_level(probe, cur, level, kInf, "minwitness_via_mono");
      audit->levels_checked = probe.levels_checked;
    }
  }

  ExtMatrix out(rows, cols, 0);
  for (std::size_t i = 0; i < rows * cols; ++i)
    out.cells[i] = cur.cells[i] == static_cast<ExtInt>(inner) ? kInf : cur.cells[i];
  return out;
}

ExtMatrix apsp_via_mono(const DirectedGraph& g, MonoDeltaSolver& solver,
                        const ApspViaMonoOptions& options, IntervalAuditMatrix* audit) {
  const std::size_t n = g.n;
  ExtMatrix dist(n, n, kInf);
  for (std::size_t i = 0; i < n; ++i) dist.at(i, i) = 0;
  for (const Edge& e : g.edges) dist.at(e.u, e.v) = 1;

  const unsigned rounds = ceil_log2(n);
  for (unsigned r = 0; r < rounds; ++r) {
    const ExtInt cap = ExtInt{1} << (r + 1);

    // Reachability doubling: which pairs connect through a midpoint with
    // both halves visible in dist.
    ExtMatrix cur(n, n, kInf);
    if (options.boolean_step_via_matmul) {
      BoolMatrix fin(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!is_inf(dist.at(i, j))) fin.set(i, j, true);
      const BoolMatrix sq = bool_matmul(fin, fin, &solver.log().kernel_ops);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (sq.get(i, j)) cur.at(i, j) = 0;
    } else {
      ColoredGraph gadget;
      gadget.n = 3 * n;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = 0; w < n; ++w)
          if (!is_inf(dist.at(u, w)))
            gadget.edges.push_back({static_cast<std::uint32_t>(u),
                                    static_cast<std::uint32_t>(n + w), 0});
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
          if (!is_inf(dist.at(w, v)))
            gadget.edges.push_back({static_cast<std::uint32_t>(n + w),
                                    static_cast<std::uint32_t>(2 * n + v), 0});
      const std::size_t base = gadget.edges.size();
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          gadget.edges.push_back({static_cast<std::uint32_t>(u),
                                  static_cast<std::uint32_t>(2 * n + v), 0});
      const EdgeAnswers ans = solver(gadget);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (ans.flags[base + u * n + v]) cur.at(u, v) = 0;
    }
    if (audit != nullptr) check_matrix_level(*audit, cur, r + 2, cap, "apsp_via_mono");

    // Refine one bit per level; the pair edge carries the current prefix
    // and a monochromatic triangle certifies the lower half.
    for (unsigned level = r + 2; level-- > 0;) {
      ColoredGraph gadget;
      gadget.n = 3 * n;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = 0; w < n; ++w) {
          const ExtInt d = dist.at(u, w);
          if (is_inf(d)) continue;
          if (const auto color = window_color_halfopen(d, level))
            gadget.edges.push_back({static_cast<std::uint32_t>(u),
                                    static_cast<std::uint32_t>(n + w), *color});
        }
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v) {
          const ExtInt d = dist.at(w, v);
          if (is_inf(d)) continue;
          if (const auto color = window_color_closed(d, level))
            gadget.edges.push_back({static_cast<std::uint32_t>(n + w),
                                    static_cast<std::uint32_t>(2 * n + v), *color});
        }
      const std::size_t base = gadget.edges.size();
      std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (!is_inf(cur.at(u, v))) {
            gadget.edges.push_back({static_cast<std::uint32_t>(u),
                                    static_cast<std::uint32_t>(2 * n + v), cur.at(u, v)});
            pairs.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
          }
      const EdgeAnswers ans = solver(gadget);
      ExtMatrix next(n, n, kInf);
      for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto [u, v] = pairs[idx];
        next.at(u, v) = 2 * cur.at(u, v) + (ans.flags[base + idx] ? 0 : 1);
      }
      cur = next;
      if (audit != nullptr) check_matrix_level(*audit, cur, level, cap, "apsp_via_mono");
    }
    dist = cur;
  }
  return dist;
}

std::vector<ExtInt> coinchange_via_monoconv(const CoinChangeInstance& inst, MonoConvSolver& solver,
                                            IntervalAuditSeq* audit) {
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<ExtInt> best(n + 1, kInf);
  best[0] = 0;
  for (std::int64_t coin : inst.coins) best[static_cast<std::size_t>(coin)] = 1;

  const unsigned rounds = ceil_log2(n);
  for (unsigned r = 0; r < rounds; ++r) {
    const ExtInt cap = ExtInt{1} << (r + 1);

    // Doubling: value v needs at most 2^(r+1) coins iff it splits into two
    // halves each needing at most 2^r. The split enumeration is exactly a
    // binary convolution of the finiteness indicator with itself.
    Sequence fin(n + 1, 0);
    for (std::size_t v = 0; v <= n; ++v) fin[v] = is_inf(best[v]) ? 0 : 1;
    const auto conv = binary_convolution(fin, fin, &solver.log().kernel_ops);
    std::vector<ExtInt> cur(n + 1, kInf);
    for (std::size_t v = 0; v <= n; ++v)
      if (conv[v] > 0) cur[v] = 0;
    if (audit != nullptr) check_seq_level(*audit, cur, r + 2, cap, "coinchange_via_monoconv");

    for (unsigned level = r + 2; level-- > 0;) {
      Sequence sa(n + 1, kNoneA), sb(n + 1, kNoneB), sc(n + 1, kNoneC);
      for (std::size_t v = 0; v <= n; ++v) {
        if (!is_inf(best[v])) {
          if (const auto color = window_color_halfopen(best[v], level)) sa[v] = *color;
          if (const auto color = window_color_closed(best[v], level)) sb[v] = *color;
        }
        if (!is_inf(cur[v])) sc[v] = cur[v];
      }
      const auto d = solver(sa, sb, sc);
      std::vector<ExtInt> next(n + 1, kInf);
      for (std::size_t v = 0; v <= n; ++v)
        if (!is_inf(cur[v])) next[v] = 2 * cur[v] + (d[v] ? 0 : 1);
      cur = std::move(next);
      if (audit != nullptr) check_seq_level(*audit, cur, level, cap, "coinchange_via_monoconv");
    }
    best = std::move(cur);
  }
  return best;
}

AlmostLinearHash sample_hash(unsigned bits, Rng& rng) {
  if (bits < 1 || bits > 63) throw std::invalid_argument("sample_hash: bits out of range");
  return {rng() | 1, bits};
}

SelfReduceResult threesum_self_reduce(const ThreeSumInstance& t, double alpha, Rng& rng) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("threesum_self_reduce: alpha outside [0, 1]");

  SelfReduceResult out;
  const std::size_t n =
      std::max({t.a.size(), t.b.size(), t.c.size(), static_cast<std::size_t>(1)});
  unsigned bits = 0;
  if (alpha > 0.0 && n > 1)
    bits = static_cast<unsigned>(std::ceil(alpha * std::log2(static_cast<double>(n))));
  out.bucket_bits = bits;
  if (bits == 0) {
    if (!t.a.empty() && !t.b.empty() && !t.c.empty()) out.subs.push_back(t);
    return out;
  }

  const std::size_t r_b = std::size_t{1} << bits;
  const AlmostLinearHash h = sample_hash(bits, rng);
  const auto cap = static_cast<std::size_t>(
      3 * std::ceil(std::pow(static_cast<double>(n), 1.0 - alpha)));

  std::vector<Sequence> bucket_a(r_b), bucket_b(r_b), bucket_c(r_b);
  for (std::int64_t x : t.a) bucket_a[h(x)].push_back(x);
  for (std::int64_t x : t.b) bucket_b[h(x)].push_back(x);
  for (std::int64_t x : t.c) bucket_c[h(x)].push_back(x);

  // Oversized buckets are pulled out and resolved exactly below, so the
  // bucketed remainder has bounded sides and no triple is lost.
  Sequence left_a, left_b, left_c;
  const auto spill = [cap](std::vector<Sequence>& buckets, Sequence& sink) {
    for (Sequence& bucket : buckets) {
      if (bucket.size() > cap) {
        sink.insert(sink.end(), bucket.begin(), bucket.end());
        bucket.clear();
      }
    }
  };
  spill(bucket_a, left_a);
  spill(bucket_b, left_b);
  spill(bucket_c, left_c);
  out.set_aside = left_a.size() + left_b.size() + left_c.size();

  if (!left_a.empty() || !left_b.empty() || !left_c.empty()) {
    const std::unordered_set<std::int64_t> all_a(t.a.begin(), t.a.end());
    const std::unordered_set<std::int64_t> all_c(t.c.begin(), t.c.end());
    for (std::int64_t a : left_a)
      for (std::int64_t b : t.b)
        if (all_c.count(a + b)) out.leftover_hit = true;
    for (std::int64_t b : left_b)
      for (std::int64_t a : t.a)
        if (all_c.count(a + b)) out.leftover_hit = true;
    for (std::int64_t c : left_c)
      for (std::int64_t b : t.b)
        if (all_a.count(c - b)) out.leftover_hit = true;
  }

  const std::uint64_t mask = r_b - 1;
  for (std::size_t i = 0; i < r_b; ++i) {
    if (bucket_a[i].empty()) continue;
    for (std::size_t j = 0; j < r_b; ++j) {
      if (bucket_b[j].empty()) continue;
      ThreeSumInstance sub;
      sub.a = bucket_a[i];
      sub.b = bucket_b[j];
      // The hash is additive up to a -1/0/+1 slack modulo the bucket count.
      std::uint64_t prev = ~std::uint64_t{0};
      for (std::uint64_t delta : {std::uint64_t{0}, std::uint64_t{1}, mask}) {
        const std::uint64_t res = (i + j + delta) & mask;
        if (res == prev) continue;
        prev = res;
        sub.c.insert(sub.c.end(), bucket_c[res].begin(), bucket_c[res].end());
      }
      if (sub.c.empty()) continue;
      out.subs.push_back(std::move(sub));
    }
  }
  return out;
}

namespace {

// Hashed positions of one sub-instance under one copy's hash and shift.
struct SubPositions {
  std::vector<std::uint32_t> a, b, c;  // sorted distinct positions in [0, R)
};

std::vector<std::uint32_t> hashed_positions(const Sequence& values, const AlmostLinearHash& h,
                                            std::uint64_t shift, std::uint64_t mask) {
  std::vector<std::uint32_t> out;
  out.reserve(values.size());
  for (std::int64_t x : values)
    out.push_back(static_cast<std::uint32_t>((h(x) + shift) & mask));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool threesum_via_monoconv(const ThreeSumInstance& t, MonoConvSolver& solver, Rng& rng,
                           const MonoConvPipelineOptions& options,
                           MonoConvPipelineStats* stats) {
  const SelfReduceResult sr = threesum_self_reduce(t, 1.0 / 3.0, rng);
  if (stats != nullptr) {
    *stats = MonoConvPipelineStats{};
    stats->sub_instances = sr.subs.size();
    stats->leftover_hit = sr.leftover_hit;
  }
  if (sr.subs.empty()) return sr.leftover_hit;

  const std::size_t q_count = sr.subs.size();
  std::size_t kappa = 1;
  for (const ThreeSumInstance& sub : sr.subs)
    kappa = std::max({kappa, sub.a.size(), sub.b.size(), sub.c.size()});

  // Position range 2^bits with collision probability ~1/kappa per pair.
  const unsigned bits = std::min(63u, ceil_log2(kappa * kappa) + 1);
  if (bits > 26)
    throw std::invalid_argument("threesum_via_monoconv: sub-instances too large to pack");
  const std::uint64_t r_range = std::uint64_t{1} << bits;
  const std::uint64_t mask = r_range - 1;
  const std::size_t len = 2 * r_range;

  const std::size_t n =
      std::max({t.a.size(), t.b.size(), t.c.size(), static_cast<std::size_t>(2)});
  const auto occupancy_cap = static_cast<std::size_t>(
      std::ceil(4.0 * std::log2(static_cast<double>(n))));

  if (stats != nullptr) stats->position_bits = bits;

  // Candidate set: (sub-instance, c-element) pairs still consistent with a
  // solution. True solutions survive every copy by construction.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> alive;
  for (std::uint32_t q = 0; q < q_count; ++q)
    for (std::uint32_t ci = 0; ci < sr.subs[q].c.size(); ++ci) alive.emplace_back(q, ci);
  if (stats != nullptr) stats->candidate_elements = alive.size();

  // The shifted positions of a solution triple satisfy
  // pos_a + pos_b - pos_c in {-1, 0, R-1, R}, so four placements of the
  // c-side cover every case.
  const std::array<std::int64_t, 4> variants = {
      -1, 0, static_cast<std::int64_t>(r_range) - 1, static_cast<std::int64_t>(r_range)};

  for (int copy = 0; copy < options.hash_copies && !alive.empty(); ++copy) {
    std::vector<AlmostLinearHash> hashes(q_count);
    for (auto& h : hashes) h = sample_hash(bits, rng);

    // Only candidates still alive need a place on the c side; dead ones
    // cannot come back, so dropping them keeps later copies cheap.
    std::vector<Sequence> alive_c(q_count);
    for (const auto& [q, ci] : alive) alive_c[q].push_back(sr.subs[q].c[ci]);

    std::vector<std::uint64_t> shifts(q_count);
    std::vector<SubPositions> pos(q_count);
    CollisionTable in_a, in_b, in_c;
    bool placed = false;
    for (int attempt = 0; attempt < options.shift_retry_limit && !placed; ++attempt) {
      for (auto& s : shifts) s = rand_below(rng, r_range);
      in_a.at.assign(r_range, {});
      in_b.at.assign(r_range, {});
      in_c.at.assign(r_range, {});
      for (std::uint32_t q = 0; q < q_count; ++q) {
        pos[q].a = hashed_positions(sr.subs[q].a, hashes[q], shifts[q], mask);
        pos[q].b = hashed_positions(sr.subs[q].b, hashes[q], shifts[q], mask);
        pos[q].c = hashed_positions(alive_c[q], hashes[q], 2 * shifts[q], mask);
        for (std::uint32_t r : pos[q].a) in_a.at[r].push_back(q);
        for (std::uint32_t r : pos[q].b) in_b.at[r].push_back(q);
        for (std::uint32_t r : pos[q].c) in_c.at[r].push_back(q);
      }
      const std::size_t occ = std::max(
          {in_a.max_occupancy(), in_b.max_occupancy(), in_c.max_occupancy()});
      placed = occ <= occupancy_cap;
    }
    if (!placed)
      throw std::runtime_error("threesum_via_monoconv: shift retry budget exhausted");

    const std::size_t occ_a = in_a.max_occupancy();
    const std::size_t occ_b = in_b.max_occupancy();
    const std::size_t occ_c = in_c.max_occupancy();

    const auto slot_sequence = [len](const CollisionTable& table, std::size_t slot,
                                     std::int64_t fill, std::int64_t offset, bool& any) {
      Sequence seq(len, fill);
      any = false;
      for (std::size_t r = 0; r < table.at.size(); ++r) {
        if (table.at[r].size() <= slot) continue;
        const std::int64_t pos = static_cast<std::int64_t>(r) + offset;
        if (pos < 0 || pos >= static_cast<std::int64_t>(len)) continue;
        seq[static_cast<std::size_t>(pos)] = table.at[r][slot];
        any = true;
      }
      return seq;
    };

    std::vector<Sequence> a_seqs(occ_a), b_seqs(occ_b);
    bool any = false;
    for (std::size_t x = 0; x < occ_a; ++x) a_seqs[x] = slot_sequence(in_a, x, kNoneA, 0, any);
    for (std::size_t y = 0; y < occ_b; ++y) b_seqs[y] = slot_sequence(in_b, y, kNoneB, 0, any);

    std::unordered_set<std::uint64_t> flagged;
    for (std::size_t z = 0; z < occ_c; ++z) {
      for (std::int64_t variant : variants) {
        bool c_any = false;
        const Sequence c_seq = slot_sequence(in_c, z, kNoneC, variant, c_any);
        if (!c_any) continue;
        for (std::size_t x = 0; x < occ_a; ++x) {
          for (std::size_t y = 0; y < occ_b; ++y) {
            const auto d = solver(a_seqs[x], b_seqs[y], c_seq);
            for (std::size_t i = 0; i < d.size() && i < len; ++i) {
              if (!d[i]) continue;
              const auto q = static_cast<std::uint32_t>(c_seq[i]);
              const auto base = static_cast<std::uint32_t>(
                  static_cast<std::int64_t>(i) - variant);
              flagged.insert(flag_key(q, base));
            }
          }
        }
      }
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> still;
    still.reserve(alive.size());
    for (const auto& [q, ci] : alive) {
      const std::int64_t value = sr.subs[q].c[ci];
      const auto base =
          static_cast<std::uint32_t>((hashes[q](value) + 2 * shifts[q]) & mask);
      if (flagged.count(flag_key(q, base))) still.emplace_back(q, ci);
    }
    alive = std::move(still);
    if (stats != nullptr) {
      stats->alive_after_copy.push_back(alive.size());
      ++stats->copies_run;
    }
  }

  return sr.leftover_hit || !alive.empty();
}

std::vector<std::uint8_t> monoconv_via_3sum(const Sequence& a, const Sequence& b,
                                            const Sequence& c, OpCounter* ops) {
  return mono_convolution_fast(a, b, c, std::nullopt, ops);
}

CombinedMono combine_sparse_into_mono(const std::vector<ColoredGraph>& instances, Rng& rng,
                                      const CombineOptions& options) {
  CombinedMono out;
  if (instances.empty()) return out;

  const std::size_t n = instances[0].n;
  for (const ColoredGraph& g : instances)
    if (g.n != n)
      throw std::invalid_argument("combine_sparse_into_mono: vertex counts differ");
  if (n == 0) throw std::invalid_argument("combine_sparse_into_mono: empty vertex set");
  if (instances.size() > 9 * n * n)
    throw std::invalid_argument("combine_sparse_into_mono: too many instances for the color space");

  out.source_edge_counts.reserve(instances.size());
  for (const ColoredGraph& g : instances) out.source_edge_counts.push_back(g.edges.size());

  const auto cap = static_cast<std::size_t>(
      std::ceil(4.0 * std::log2(std::max<double>(static_cast<double>(n), 2.0))));
  out.cap = cap;

  struct Entry {
    std::uint64_t pair;
    std::uint32_t q;
    std::uint32_t e;
  };

  for (int attempt = 0; attempt <= options.resample_limit; ++attempt) {
    std::vector<Entry> entries;
    for (std::uint32_t q = 0; q < instances.size(); ++q) {
      const auto perm = random_permutation(n, rng);
      for (std::uint32_t e = 0; e < instances[q].edges.size(); ++e) {
        std::uint32_t u = perm[instances[q].edges[e].u];
        std::uint32_t v = perm[instances[q].edges[e].v];
        if (u > v) std::swap(u, v);
        entries.push_back({(std::uint64_t{u} << 32) | v, q, e});
      }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
      return std::tie(x.pair, x.q, x.e) < std::tie(y.pair, y.q, y.e);
    });

    // Parallel edges on one renamed pair get consecutive slots; if any pair
    // overflows the slot cap, every permutation is redrawn.
    std::size_t occ = 0;
    bool overflow = false;
    for (std::size_t lo = 0; lo < entries.size() && !overflow;) {
      std::size_t hi = lo;
      while (hi < entries.size() && entries[hi].pair == entries[lo].pair) ++hi;
      occ = std::max(occ, hi - lo);
      overflow = hi - lo > cap;
      lo = hi;
    }
    if (overflow) {
      ++out.resamples;
      continue;
    }

    out.graphs.reserve(occ * occ * occ);
    out.origins.reserve(occ * occ * occ);
    for (std::size_t x = 0; x < occ; ++x) {
      for (std::size_t y = 0; y < occ; ++y) {
        for (std::size_t z = 0; z < occ; ++z) {
          ColoredGraph g;
          g.n = 3 * n;
          std::vector<EdgeOrigin> origin;
          for (std::size_t lo = 0; lo < entries.size();) {
            std::size_t hi = lo;
            while (hi < entries.size() && entries[hi].pair == entries[lo].pair) ++hi;
            const auto u = static_cast<std::uint32_t>(entries[lo].pair >> 32);
            const auto v = static_cast<std::uint32_t>(entries[lo].pair & 0xffffffffu);
            const auto place = [&](std::size_t slot, std::uint32_t lo_add,
                                   std::uint32_t hi_add) {
              if (lo + slot >= hi) return;
              const Entry& ent = entries[lo + slot];
              const auto color = static_cast<std::int64_t>(ent.q);
              g.edges.push_back({u + lo_add, v + hi_add, color});
              origin.push_back({ent.q, ent.e});
              g.edges.push_back({std::min(v + lo_add, u + hi_add),
                                 std::max(v + lo_add, u + hi_add), color});
              origin.push_back({ent.q, ent.e});
            };
            const auto nn = static_cast<std::uint32_t>(n);
            place(x, 0, nn);        // part 1 to part 2, both orientations
            place(y, nn, 2 * nn);   // part 2 to part 3
            place(z, 0, 2 * nn);    // part 1 to part 3
            lo = hi;
          }
          out.graphs.push_back(std::move(g));
          out.origins.push_back(std::move(origin));
        }
      }
    }
    return out;
  }
  throw std::runtime_error("combine_sparse_into_mono: resample budget exhausted");
}

std::vector<EdgeAnswers> decode_combined(const CombinedMono& combined,
                                         const std::vector<EdgeAnswers>& per_graph) {
  if (per_graph.size() != combined.graphs.size())
    throw std::invalid_argument("decode_combined: answer count mismatch");
  std::vector<EdgeAnswers> out(combined.source_edge_counts.size());
  for (std::size_t q = 0; q < out.size(); ++q)
    out[q].flags.assign(combined.source_edge_counts[q], 0);
  for (std::size_t g = 0; g < per_graph.size(); ++g) {
    if (per_graph[g].flags.size() != combined.origins[g].size())
      throw std::invalid_argument("decode_combined: flag count mismatch");
    for (std::size_t e = 0; e < combined.origins[g].size(); ++e) {
      if (!per_graph[g].flags[e]) continue;
      const EdgeOrigin& origin = combined.origins[g][e];
      out[origin.instance].flags[origin.edge_index] = 1;
    }
  }
  return out;
}

SparseReduction value_graph_reducer(const ThreeSumInstance& sub) {
  SparseReduction out;
  out.graph.n = 1;
  out.decide = [](const EdgeAnswers&) { return false; };
  if (sub.a.empty() || sub.b.empty() || sub.c.empty()) return out;

  const std::int64_t amin = *std::min_element(sub.a.begin(), sub.a.end());
  const std::int64_t bmin = *std::min_element(sub.b.begin(), sub.b.end());
  const std::int64_t amax = *std::max_element(sub.a.begin(), sub.a.end());
  const std::int64_t bmax = *std::max_element(sub.b.begin(), sub.b.end());
  const std::int64_t ua = amax - amin + 1;
  const std::int64_t us = ua + (bmax - bmin + 1) - 1;
  if (ua + us + 1 > 200000)
    throw std::invalid_argument("value_graph_reducer: value range too wide");

  const auto sorted_unique = [](const Sequence& seq) {
    Sequence v = seq;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const Sequence avals = sorted_unique(sub.a);
  const Sequence bvals = sorted_unique(sub.b);
  Sequence cvals;
  for (std::int64_t c : sorted_unique(sub.c)) {
    const std::int64_t shifted = c - amin - bmin;
    if (shifted >= 0 && shifted < us) cvals.push_back(shifted);
  }
  if (cvals.empty()) return out;

  // One vertex per shifted a-value, one per reachable pair sum, one apex.
  // Triangles are exactly (a, a+b, apex) with a+b present in C.
  ColoredGraph g;
  g.n = static_cast<std::size_t>(ua + us + 1);
  const auto apex = static_cast<std::uint32_t>(ua + us);
  for (std::int64_t a : avals)
    for (std::int64_t b : bvals)
      g.edges.push_back({static_cast<std::uint32_t>(a - amin),
                         static_cast<std::uint32_t>(ua + (a - amin) + (b - bmin)), 0});
  for (std::int64_t c : cvals)
    g.edges.push_back({static_cast<std::uint32_t>(ua + c), apex, 0});
  for (std::int64_t a : avals)
    g.edges.push_back({static_cast<std::uint32_t>(a - amin), apex, 0});

  out.graph = std::move(g);
  out.decide = [](const EdgeAnswers& ans) {
    return std::any_of(ans.flags.begin(), ans.flags.end(),
                       [](std::uint8_t f) { return f != 0; });
  };
  return out;
}

bool threesum_via_mono(const ThreeSumInstance& t, const SparseReducer& reducer,
                       MonoDeltaSolver& solver, Rng& rng, ThreeSumViaMonoStats* stats) {
  const SelfReduceResult sr = threesum_self_reduce(t, 1.0 / 5.0, rng);
  if (stats != nullptr) {
    *stats = ThreeSumViaMonoStats{};
    stats->sub_instances = sr.subs.size();
    stats->leftover_hit = sr.leftover_hit;
  }
  if (sr.subs.empty()) return sr.leftover_hit;

  std::vector<SparseReduction> reduced;
  reduced.reserve(sr.subs.size());
  std::size_t max_n = 1;
  for (const ThreeSumInstance& sub : sr.subs) {
    reduced.push_back(reducer(sub));
    max_n = std::max(max_n, reduced.back().graph.n);
  }

  std::vector<ColoredGraph> graphs;
  graphs.reserve(reduced.size());
  for (const SparseReduction& red : reduced) {
    ColoredGraph g = red.graph;
    g.n = max_n;  // isolated padding vertices change no triangle
    graphs.push_back(std::move(g));
  }

  const CombinedMono combined = combine_sparse_into_mono(graphs, rng);
  if (stats != nullptr) {
    stats->combined_instances = combined.graphs.size();
    stats->cap = combined.cap;
    stats->resamples = combined.resamples;
  }

  std::vector<EdgeAnswers> answers;
  answers.reserve(combined.graphs.size());
  for (const ColoredGraph& g : combined.graphs) answers.push_back(solver(g));
  const std::vector<EdgeAnswers> decoded = decode_combined(combined, answers);

  bool yes = sr.leftover_hit;
  for (std::size_t q = 0; q < reduced.size(); ++q)
    if (reduced[q].decide(decoded[q])) yes = true;
  return yes;
}

}  // namespace redlab
