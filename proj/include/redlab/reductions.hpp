#pragma once

// Executable instance-level reductions between the lab's problems. Every
// reduction drives a pluggable target solver through a counting handle, so
// tests can swap brute-force and fast backends and assert exact call counts.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "redlab/core.hpp"
#include "redlab/fast_solvers.hpp"
#include "redlab/rng.hpp"

namespace redlab {

/// Invocation record kept by every solver handle: one entry per call plus
/// the op counters reported by the backend.
struct CallLog {
  std::uint64_t calls = 0;
  std::vector<std::size_t> call_sizes;  // primary dimension of each instance
  OpCounter kernel_ops;

  void record(std::size_t size) {
    ++calls;
    call_sizes.push_back(size);
  }
};

/// Counting wrapper around a monochromatic-triangle solver.
class MonoDeltaSolver {
 public:
  using Fn = std::function<EdgeAnswers(const ColoredGraph&, OpCounter*)>;
  MonoDeltaSolver(Fn fn, CallLog& log) : fn_(std::move(fn)), log_(&log) {}
  EdgeAnswers operator()(const ColoredGraph& g) {
    log_->record(g.n);
    return fn_(g, &log_->kernel_ops);
  }
  CallLog& log() { return *log_; }

 private:
  Fn fn_;
  CallLog* log_;
};

/// Counting wrapper around a min-max matrix product solver.
class MinMaxSolver {
 public:
  using Fn = std::function<ExtMatrix(const ExtMatrix&, const ExtMatrix&, OpCounter*)>;
  MinMaxSolver(Fn fn, CallLog& log) : fn_(std::move(fn)), log_(&log) {}
  ExtMatrix operator()(const ExtMatrix& a, const ExtMatrix& b) {
    log_->record(std::max(a.rows, b.cols));
    return fn_(a, b, &log_->kernel_ops);
  }
  CallLog& log() { return *log_; }

 private:
  Fn fn_;
  CallLog* log_;
};

/// Counting wrapper around a mono-convolution solver.
class MonoConvSolver {
 public:
  using Fn = std::function<std::vector<std::uint8_t>(const Sequence&, const Sequence&,
                                                     const Sequence&, OpCounter*)>;
  MonoConvSolver(Fn fn, CallLog& log) : fn_(std::move(fn)), log_(&log) {}
  std::vector<std::uint8_t> operator()(const Sequence& a, const Sequence& b, const Sequence& c) {
    log_->record(a.size());
    return fn_(a, b, c, &log_->kernel_ops);
  }
  CallLog& log() { return *log_; }

 private:
  Fn fn_;
  CallLog* log_;
};

MonoDeltaSolver make_oracle_mono_solver(CallLog& log);
MonoDeltaSolver make_fast_mono_solver(CallLog& log,
                                      std::optional<BucketingParams> params = std::nullopt);
MinMaxSolver make_oracle_minmax_solver(CallLog& log);
MonoConvSolver make_oracle_monoconv_solver(CallLog& log);
MonoConvSolver make_fast_monoconv_solver(CallLog& log,
                                         std::optional<BucketingParams> params = std::nullopt);

/// Debug probe for the parallel binary searches over matrices: `truth` holds
/// the reference answers, and after every refinement level the reduction
/// checks that each true value X lies in [X_level << level, (X_level+1) <<
/// level). Violations throw std::logic_error.
struct IntervalAuditMatrix {
  ExtMatrix truth;
  std::uint64_t levels_checked = 0;
};

/// Same probe for sequence-valued searches.
struct IntervalAuditSeq {
  std::vector<ExtInt> truth;
  std::uint64_t levels_checked = 0;
};

/// Min-witness product through one min-max product: encode the witness index
/// into the operands and read the cheapest feasible index back.
/// Exactly 1 solver call.
ExtMatrix minwitness_via_minmax(const BoolMatrix& a, const BoolMatrix& b, MinMaxSolver& solver);

/// Unweighted directed APSP by repeated squaring over the min-max product;
/// each doubling round combines an even and an odd path split.
/// Exactly 2 * ceil(log2 n) solver calls.
ExtMatrix apsp_via_minmax(const DirectedGraph& g, MinMaxSolver& solver);

/// Min-witness product through monochromatic-triangle instances: a parallel
/// binary search descends one witness bit per call. The witness dimension is
/// padded with an always-on index so "no witness" decodes uniformly.
/// Exactly ceil(log2(inner+1)) solver calls.
ExtMatrix minwitness_via_mono(const BoolMatrix& a, const BoolMatrix& b, MonoDeltaSolver& solver,
                              IntervalAuditMatrix* audit = nullptr);

struct ApspViaMonoOptions {
  /// Route the per-round boolean reachability squaring to bool_matmul
  /// instead of a two-color solver call. Answers are identical; only the
  /// call log changes.
  bool boolean_step_via_matmul = false;
};

/// Unweighted directed APSP through monochromatic-triangle instances:
/// distance doubling where each round re-derives exact distances from
/// range-colored gadgets, one level per call.
/// At most (ceil(log2 n) + 3) * ceil(log2 n) solver calls.
ExtMatrix apsp_via_mono(const DirectedGraph& g, MonoDeltaSolver& solver,
                        const ApspViaMonoOptions& options = {},
                        IntervalAuditMatrix* audit = nullptr);

/// Coin change through mono-convolution instances: the one-dimensional
/// mirror of the APSP search. The per-round reachability doubling uses
/// binary_convolution directly.
/// At most (ceil(log2 n) + 3) * ceil(log2 n) solver calls.
std::vector<ExtInt> coinchange_via_monoconv(const CoinChangeInstance& inst, MonoConvSolver& solver,
                                            IntervalAuditSeq* audit = nullptr);

/// Multiply-shift bucket hash: h(x) = (mult * x mod 2^64) >> (64 - bits).
/// Near-additive: whenever a + b = c, h(a) + h(b) lands in h(c) + {-1, 0, +1}
/// modulo 2^bits.
struct AlmostLinearHash {
  std::uint64_t multiplier = 1;  // odd
  unsigned bits = 1;             // output range [0, 2^bits)

  std::uint64_t operator()(std::int64_t x) const {
    return (multiplier * static_cast<std::uint64_t>(x)) >> (64 - bits);
  }
};

/// Draw a hash with an odd multiplier. Requires 1 <= bits < 64.
AlmostLinearHash sample_hash(unsigned bits, Rng& rng);

inline std::uint64_t hash_apply(const AlmostLinearHash& h, std::int64_t x) { return h(x); }

/// Bucket decomposition of a three-sum instance. A and B are hashed into
/// 2^bucket_bits buckets with one shared hash; every bucket pair keeps the
/// C elements whose hash is sum-compatible. Buckets above the size cap are
/// set aside and resolved exactly by scanning, so no triple is ever lost.
struct SelfReduceResult {
  std::vector<ThreeSumInstance> subs;
  bool leftover_hit = false;      // exact answer over the set-aside elements
  std::size_t set_aside = 0;      // elements resolved by scanning
  unsigned bucket_bits = 0;
};

SelfReduceResult threesum_self_reduce(const ThreeSumInstance& t, double alpha, Rng& rng);

/// Per-position occupancy lists used when many hashed sub-instances share
/// one index space: at(r) lists the sub-instances occupying position r.
struct CollisionTable {
  std::vector<std::vector<std::uint32_t>> at;

  std::size_t max_occupancy() const {
    std::size_t best = 0;
    for (const auto& list : at) best = std::max(best, list.size());
    return best;
  }
};

struct MonoConvPipelineOptions {
  int hash_copies = 10;
  int shift_retry_limit = 64;
};

struct MonoConvPipelineStats {
  std::size_t sub_instances = 0;
  std::size_t candidate_elements = 0;        // (sub-instance, c-element) pairs
  std::vector<std::size_t> alive_after_copy; // survivors after each hash copy
  int copies_run = 0;
  bool leftover_hit = false;
  unsigned position_bits = 0;
};

/// Three-sum decision through mono-convolution instances: self-reduce with
/// alpha = 1/3, pack all sub-instances into a shared hashed index space per
/// copy, and let instance-id matches certify candidate triples. Candidates
/// must survive every hash copy; true triples always do.
bool threesum_via_monoconv(const ThreeSumInstance& t, MonoConvSolver& solver, Rng& rng,
                           const MonoConvPipelineOptions& options = {},
                           MonoConvPipelineStats* stats = nullptr);

/// Mono convolution through the all-integers three-sum kernel; this is the
/// fast solver re-exported under its reduction name.
std::vector<std::uint8_t> monoconv_via_3sum(const Sequence& a, const Sequence& b,
                                            const Sequence& c, OpCounter* ops = nullptr);

struct CombineOptions {
  int resample_limit = 256;
};

struct EdgeOrigin {
  std::uint32_t instance = 0;
  std::uint32_t edge_index = 0;
};

/// Batch of triangle instances packed into tripartite monochromatic-triangle
/// instances. Each source instance is vertex-permuted, parallel edges on a
/// renamed pair are numbered into slots, and one output graph exists per
/// slot triple (x, y, z).
struct CombinedMono {
  std::vector<ColoredGraph> graphs;
  std::vector<std::vector<EdgeOrigin>> origins;  // parallel to graphs[i].edges
  std::vector<std::size_t> source_edge_counts;
  std::size_t cap = 0;
  int resamples = 0;
};

/// Requires all instances to share the vertex count. Colors are ignored; the
/// output colors are source-instance ids. Re-draws all permutations whenever
/// some pair collects more than ceil(4 * log2 n) parallel edges; exhausting
/// the retry budget throws instead of guessing.
CombinedMono combine_sparse_into_mono(const std::vector<ColoredGraph>& instances, Rng& rng,
                                      const CombineOptions& options = {});

/// Map per-graph answers back to per-source-instance answers: an edge is
/// flagged iff any of its placed copies is.
std::vector<EdgeAnswers> decode_combined(const CombinedMono& combined,
                                         const std::vector<EdgeAnswers>& per_graph);

/// One three-sum sub-instance rewritten as a triangle instance plus its
/// decision decoder.
struct SparseReduction {
  ColoredGraph graph;
  std::function<bool(const EdgeAnswers&)> decide;
};

using SparseReducer = std::function<SparseReduction(const ThreeSumInstance&)>;

/// Exact test reducer: one vertex per value of the sub-instance's own small
/// universe, one per reachable pair sum, and a single apex; triangles then
/// coincide with solutions. Only usable when the value range is modest.
SparseReduction value_graph_reducer(const ThreeSumInstance& sub);

struct ThreeSumViaMonoStats {
  std::size_t sub_instances = 0;
  std::size_t combined_instances = 0;
  std::size_t cap = 0;
  int resamples = 0;
  bool leftover_hit = false;
};

/// Three-sum decision through monochromatic triangles: self-reduce with
/// alpha = 1/5, rewrite each sub-instance via the pluggable sparse reducer,
/// pack everything with combine_sparse_into_mono, solve, and decode.
bool threesum_via_mono(const ThreeSumInstance& t, const SparseReducer& reducer,
                       MonoDeltaSolver& solver, Rng& rng,
                       ThreeSumViaMonoStats* stats = nullptr);

}  // namespace redlab
