#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "redlab/gen.hpp"
#include "redlab/oracles.hpp"
#include "redlab/reductions.hpp"
#include "redlab/rng.hpp"

using namespace redlab;

namespace {

BoolMatrix bool_identity(std::size_t n) {
  BoolMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BoolMatrix bool_from(std::initializer_list<std::initializer_list<int>> rows) {
  BoolMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int v : row) m.set(i, j++, v != 0);
    ++i;
  }
  return m;
}

ExtMatrix ext_from(std::initializer_list<std::initializer_list<ExtInt>> rows) {
  ExtMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (ExtInt v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("min-witness through one min-max product, identity operands") {
  const BoolMatrix id = bool_identity(4);
  CallLog log;
  MinMaxSolver solver = make_oracle_minmax_solver(log);
  const ExtMatrix got = minwitness_via_minmax(id, id, solver);
  CHECK(log.calls == 1);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j)
        CHECK(got.at(i, j) == static_cast<ExtInt>(i));
      else
        CHECK(is_inf(got.at(i, j)));
    }
}

TEST_CASE("min-witness through min-max, worked example") {
  const BoolMatrix a = bool_from({{1, 1}, {0, 1}});
  const BoolMatrix b = bool_from({{1, 0}, {1, 1}});
  CallLog log;
  MinMaxSolver solver = make_oracle_minmax_solver(log);
  CHECK(minwitness_via_minmax(a, b, solver) == ext_from({{0, 1}, {1, 1}}));
}

TEST_CASE("min-witness through min-max matches the scan") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rand_below(rng, 14);
    const BoolMatrix a = gen_bool_matrix(n, n, 0.25, rng);
    const BoolMatrix b = gen_bool_matrix(n, n, 0.25, rng);
    CallLog log;
    MinMaxSolver solver = make_oracle_minmax_solver(log);
    CHECK(minwitness_via_minmax(a, b, solver) == oracle_minwitness(a, b));
    CHECK(log.calls == 1);
  }
}

TEST_CASE("apsp through min-max doubling, call count and answers") {
  Rng rng(32);
  const DirectedGraph g = gen_directed_gnp(8, 0.25, rng);
  CallLog log;
  MinMaxSolver solver = make_oracle_minmax_solver(log);
  CHECK(apsp_via_minmax(g, solver) == oracle_apsp(g));
  CHECK(log.calls == 6);  // two calls per doubling round, three rounds for n = 8
}

TEST_CASE("apsp through min-max matches the scan") {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rand_below(rng, 14);
    const DirectedGraph g = gen_directed_gnp(n, 0.2, rng);
    CallLog log;
    MinMaxSolver solver = make_oracle_minmax_solver(log);
    CHECK(apsp_via_minmax(g, solver) == oracle_apsp(g));
    CHECK(log.calls == 2 * ceil_log2(n));
  }
}

TEST_CASE("min-witness through triangle instances, call count and gadget size") {
  Rng rng(34);
  const BoolMatrix a = gen_bool_matrix(8, 8, 0.3, rng);
  const BoolMatrix b = gen_bool_matrix(8, 8, 0.3, rng);
  CallLog log;
  MonoDeltaSolver solver = make_oracle_mono_solver(log);
  CHECK(minwitness_via_mono(a, b, solver) == oracle_minwitness(a, b));
  CHECK(log.calls == 4);  // ceil(log2(8 + 1)) prefix bits
  for (const std::size_t size : log.call_sizes) CHECK(size == 25);  // 8 + 9 + 8 vertices
}

TEST_CASE("min-witness through triangle instances matches the scan on both backends") {
  Rng rng(35);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 1 + rand_below(rng, 11);
    const BoolMatrix a = gen_bool_matrix(n, n, 0.3, rng);
    const BoolMatrix b = gen_bool_matrix(n, n, 0.3, rng);
    const ExtMatrix want = oracle_minwitness(a, b);
    CallLog log1, log2;
    MonoDeltaSolver oracle_backend = make_oracle_mono_solver(log1);
    MonoDeltaSolver fast_backend = make_fast_mono_solver(log2);
    CHECK(minwitness_via_mono(a, b, oracle_backend) == want);
    CHECK(minwitness_via_mono(a, b, fast_backend) == want);
    CHECK(log1.calls == log2.calls);
  }
}

TEST_CASE("min-witness rectangular operands") {
  Rng rng(36);
  const BoolMatrix a = gen_bool_matrix(3, 7, 0.4, rng);
  const BoolMatrix b = gen_bool_matrix(7, 5, 0.4, rng);
  CallLog log1, log2;
  MinMaxSolver s1 = make_oracle_minmax_solver(log1);
  MonoDeltaSolver s2 = make_oracle_mono_solver(log2);
  const ExtMatrix want = oracle_minwitness(a, b);
  CHECK(minwitness_via_minmax(a, b, s1) == want);
  CHECK(minwitness_via_mono(a, b, s2) == want);
}

TEST_CASE("min-witness on the all-zero matrix decodes to all INF") {
  const BoolMatrix zero(5, 5);
  CallLog log;
  MonoDeltaSolver solver = make_oracle_mono_solver(log);
  const ExtMatrix got = minwitness_via_mono(zero, zero, solver);
  CHECK(std::all_of(got.cells.begin(), got.cells.end(), [](ExtInt x) { return is_inf(x); }));
}

TEST_CASE("the interval audit accepts the true min-witness answers") {
  Rng rng(37);
  const BoolMatrix a = gen_bool_matrix(8, 8, 0.3, rng);
  const BoolMatrix b = gen_bool_matrix(8, 8, 0.3, rng);
  CallLog log;
  MonoDeltaSolver solver = make_oracle_mono_solver(log);
  IntervalAuditMatrix audit{oracle_minwitness(a, b), 0};
  minwitness_via_mono(a, b, solver, &audit);
  CHECK(audit.levels_checked == log.calls);
}

TEST_CASE("the interval audit rejects a corrupted reference") {
  const BoolMatrix id = bool_identity(4);
  CallLog log;
  MonoDeltaSolver solver = make_oracle_mono_solver(log);
  IntervalAuditMatrix audit{oracle_minwitness(id, id), 0};
  audit.truth.at(0, 0) = 2;  // true witness is 0
  CHECK_THROWS_AS(minwitness_via_mono(id, id, solver, &audit), std::logic_error);
}

TEST_CASE("apsp through triangle instances on a directed path") {
  DirectedGraph g;
  g.n = 4;
  g.edges = {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}};
  CallLog log;
  MonoDeltaSolver solver = make_oracle_mono_solver(log);
  const ExtMatrix got = apsp_via_mono(g, solver);
  CHECK(got.at(0, 3) == 3);
  CHECK(got.at(0, 0) == 0);
  CHECK(is_inf(got.at(3, 0)));
  CHECK(got == oracle_apsp(g));
}

TEST_CASE("apsp through triangle instances matches the scan on both backends") {
  Rng rng(38);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + rand_below(rng, 11);
    const DirectedGraph g = gen_directed_gnp(n, 0.25, rng);
    const ExtMatrix want = oracle_apsp(g);
    CallLog log1, log2;
    MonoDeltaSolver oracle_backend = make_oracle_mono_solver(log1);
    MonoDeltaSolver fast_backend = make_fast_mono_solver(log2);
    CHECK(apsp_via_mono(g, oracle_backend) == want);
    CHECK(apsp_via_mono(g, fast_backend) == want);
    const std::uint64_t r = ceil_log2(n);
    CHECK(log1.calls <= (r + 3) * r);
  }
}

TEST_CASE("apsp reach step through the word-parallel product changes only the call log") {
  Rng rng(39);
  const DirectedGraph g = gen_directed_gnp(12, 0.2, rng);
  CallLog log_gadget, log_matmul;
  MonoDeltaSolver s1 = make_oracle_mono_solver(log_gadget);
  MonoDeltaSolver s2 = make_oracle_mono_solver(log_matmul);
  const ExtMatrix via_gadget = apsp_via_mono(g, s1);
  ApspViaMonoOptions options;
  options.boolean_step_via_matmul = true;
  const ExtMatrix via_matmul = apsp_via_mono(g, s2, options);
  CHECK(via_gadget == via_matmul);
  CHECK(log_matmul.calls + ceil_log2(g.n) == log_gadget.calls);
}

TEST_CASE("the interval audit follows the apsp search") {
  Rng rng(40);
  const DirectedGraph g = gen_directed_gnp(9, 0.3, rng);
  CallLog log;
  MonoDeltaSolver solver = make_oracle_mono_solver(log);
  IntervalAuditMatrix audit{oracle_apsp(g), 0};
  apsp_via_mono(g, solver, {}, &audit);
  CHECK(audit.levels_checked > 0);
}

TEST_CASE("coin change through convolution instances, worked example") {
  CoinChangeInstance inst;
  inst.n = 7;
  inst.coins = {2, 3};
  CallLog log;
  MonoConvSolver solver = make_oracle_monoconv_solver(log);
  const std::vector<ExtInt> want = {0, kInf, 1, 1, 2, 2, 2, 3};
  CHECK(coinchange_via_monoconv(inst, solver) == want);
  const std::uint64_t r = ceil_log2(static_cast<std::uint64_t>(inst.n));
  CHECK(log.calls == r * (r + 3) / 2);
}

TEST_CASE("coin change through convolution instances matches the dynamic program") {
  Rng rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const std::int64_t n = 1 + rand_below(rng, 120);
    const std::size_t k = 1 + rand_below(rng, static_cast<std::uint64_t>(n));
    const CoinChangeInstance inst = gen_coin_change(n, k, rng);
    const auto want = oracle_coinchange(inst);
    CallLog log1, log2;
    MonoConvSolver oracle_backend = make_oracle_monoconv_solver(log1);
    MonoConvSolver fast_backend = make_fast_monoconv_solver(log2);
    CHECK(coinchange_via_monoconv(inst, oracle_backend) == want);
    CHECK(coinchange_via_monoconv(inst, fast_backend) == want);
  }
}

TEST_CASE("the interval audit follows the coin change search") {
  Rng rng(42);
  const CoinChangeInstance inst = gen_coin_change(60, 5, rng);
  CallLog log;
  MonoConvSolver solver = make_oracle_monoconv_solver(log);
  IntervalAuditSeq audit{oracle_coinchange(inst), 0};
  coinchange_via_monoconv(inst, solver, &audit);
  CHECK(audit.levels_checked > 0);
}

TEST_CASE("the sequence audit rejects a corrupted reference") {
  CoinChangeInstance inst;
  inst.n = 7;
  inst.coins = {2, 3};
  CallLog log;
  MonoConvSolver solver = make_oracle_monoconv_solver(log);
  IntervalAuditSeq audit{oracle_coinchange(inst), 0};
  audit.truth[2] = 3;  // really needs 1 coin
  CHECK_THROWS_AS(coinchange_via_monoconv(inst, solver, &audit), std::logic_error);
}

TEST_CASE("near-additive hash offsets stay within one step") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned bits = 1 + static_cast<unsigned>(rand_below(rng, 20));
    const AlmostLinearHash h = sample_hash(bits, rng);
    CHECK((h.multiplier & 1) == 1);
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    for (int probe = 0; probe < 200; ++probe) {
      const auto a = static_cast<std::int64_t>(rand_below(rng, std::uint64_t{1} << 40));
      const auto b = static_cast<std::int64_t>(rand_below(rng, std::uint64_t{1} << 40));
      const std::uint64_t d = (h(a) + h(b) - h(a + b)) & mask;
      const bool near = d == 0 || d == 1 || d == mask;
      CHECK(near);
    }
  }
}

TEST_CASE("hash sampling rejects out-of-range widths") {
  Rng rng(44);
  CHECK_THROWS_AS(sample_hash(0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_hash(64, rng), std::invalid_argument);
}

TEST_CASE("bucket self-reduction preserves the decision") {
  Rng rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rand_below(rng, 40);
    const ThreeSumInstance t = trial % 2 == 0 ? gen_three_sum_planted(n, 60, rng)
                                              : gen_three_sum(n, 60, rng);
    const SelfReduceResult r = threesum_self_reduce(t, 1.0 / 3.0, rng);
    bool found = r.leftover_hit;
    for (const ThreeSumInstance& sub : r.subs) found = found || oracle_3sum(sub);
    CHECK(found == oracle_3sum(t));
  }
}

TEST_CASE("bucket self-reduction respects the size cap") {
  Rng rng(46);
  const ThreeSumInstance t = gen_three_sum(120, 40, rng);  // heavy duplication
  const SelfReduceResult r = threesum_self_reduce(t, 1.0 / 3.0, rng);
  const auto cap = static_cast<std::size_t>(
      3 * std::ceil(std::pow(120.0, 2.0 / 3.0)));
  for (const ThreeSumInstance& sub : r.subs) {
    CHECK(sub.a.size() <= cap);
    CHECK(sub.b.size() <= cap);
  }
}

TEST_CASE("three-sum through convolution instances, exact backend on tiny inputs") {
  Rng rng(47);
  for (int trial = 0; trial < 4; ++trial) {
    const ThreeSumInstance t = trial % 2 == 0 ? gen_three_sum_planted(9, 25, rng)
                                              : gen_three_sum_no(9, 25, rng);
    CallLog log;
    MonoConvSolver solver = make_oracle_monoconv_solver(log);
    CHECK(threesum_via_monoconv(t, solver, rng) == oracle_3sum(t));
  }
}

TEST_CASE("three-sum through convolution instances matches the scan") {
  Rng rng(48);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 8 + rand_below(rng, 40);
    ThreeSumInstance t;
    switch (trial % 3) {
      case 0: t = gen_three_sum_planted(n, 200, rng); break;
      case 1: t = gen_three_sum_no(n, 200, rng); break;
      default: t = gen_three_sum(n, 200, rng); break;
    }
    CallLog log;
    MonoConvSolver solver = make_fast_monoconv_solver(log, BucketingParams{0});
    MonoConvPipelineStats stats;
    CHECK(threesum_via_monoconv(t, solver, rng, {}, &stats) == oracle_3sum(t));
    CHECK(stats.position_bits > 0);
    CHECK(stats.copies_run >= 1);
    CHECK(stats.alive_after_copy.size() == static_cast<std::size_t>(stats.copies_run));
  }
}

TEST_CASE("three-sum through convolution instances on an empty instance") {
  ThreeSumInstance t;
  CallLog log;
  MonoConvSolver solver = make_oracle_monoconv_solver(log);
  Rng rng(49);
  CHECK(threesum_via_monoconv(t, solver, rng) == false);
}

TEST_CASE("convolution through the sweep kernel matches the scan") {
  Rng rng(50);
  for (int trial = 0; trial < 15; ++trial) {
    const MonoConvInstance inst = gen_mono_conv(1 + rand_below(rng, 70), 8, 0.2, rng);
    CHECK(monoconv_via_3sum(inst.a, inst.b, inst.c) == oracle_monoconv(inst.a, inst.b, inst.c));
  }
}

TEST_CASE("instance combiner produces valid graphs and a faithful decode") {
  Rng rng(51);
  std::vector<ColoredGraph> sources;
  sources.push_back(gen_colored_gnp(10, 0.4, 1, rng));
  sources.push_back(gen_colored_gnp(10, 0.5, 1, rng));
  sources.push_back(ColoredGraph{10, {}});  // an empty instance rides along
  sources.push_back(gen_colored_gnp(10, 0.3, 1, rng));
  const CombinedMono combined = combine_sparse_into_mono(sources, rng);
  CHECK(combined.graphs.size() >= 1);
  CHECK(combined.origins.size() == combined.graphs.size());
  for (std::size_t i = 0; i < combined.graphs.size(); ++i) {
    CHECK(validate(combined.graphs[i]).ok());
    CHECK(combined.graphs[i].n == 30);
    CHECK(combined.origins[i].size() == combined.graphs[i].edges.size());
  }
  std::vector<EdgeAnswers> per_graph;
  for (const ColoredGraph& g : combined.graphs) per_graph.push_back(oracle_ae_mono(g));
  const std::vector<EdgeAnswers> decoded = decode_combined(combined, per_graph);
  REQUIRE(decoded.size() == sources.size());
  for (std::size_t q = 0; q < sources.size(); ++q)
    CHECK(decoded[q] == oracle_ae_sparse(sources[q]));
}

TEST_CASE("instance combiner round-trips across many shapes") {
  Rng rng(52);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 4 + rand_below(rng, 8);
    std::vector<ColoredGraph> sources;
    const std::size_t q = 1 + rand_below(rng, 5);
    for (std::size_t i = 0; i < q; ++i)
      sources.push_back(gen_colored_gnp(n, 0.5, 1, rng));
    const CombinedMono combined = combine_sparse_into_mono(sources, rng);
    std::vector<EdgeAnswers> per_graph;
    for (const ColoredGraph& g : combined.graphs) per_graph.push_back(oracle_ae_mono(g));
    const std::vector<EdgeAnswers> decoded = decode_combined(combined, per_graph);
    for (std::size_t i = 0; i < sources.size(); ++i)
      CHECK(decoded[i] == oracle_ae_sparse(sources[i]));
  }
}

TEST_CASE("value graph reducer turns solutions into triangles") {
  Rng rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rand_below(rng, 12);
    const ThreeSumInstance sub = trial % 2 == 0 ? gen_three_sum_planted(n, 25, rng)
                                                : gen_three_sum(n, 25, rng);
    const SparseReduction r = value_graph_reducer(sub);
    CHECK(validate(r.graph).ok());
    CHECK(r.decide(oracle_ae_sparse(r.graph)) == oracle_3sum(sub));
  }
}

TEST_CASE("value graph reducer on an empty sub-instance") {
  const SparseReduction r = value_graph_reducer(ThreeSumInstance{});
  CHECK(r.decide(EdgeAnswers{}) == false);
}

TEST_CASE("three-sum through triangle instances matches the scan") {
  Rng rng(54);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 4 + rand_below(rng, 16);
    ThreeSumInstance t;
    switch (trial % 3) {
      case 0: t = gen_three_sum_planted(n, 30, rng); break;
      case 1: t = gen_three_sum_no(n, 30, rng); break;
      default: t = gen_three_sum(n, 30, rng); break;
    }
    CallLog log;
    MonoDeltaSolver solver = make_fast_mono_solver(log);
    ThreeSumViaMonoStats stats;
    CHECK(threesum_via_mono(t, value_graph_reducer, solver, rng, &stats) == oracle_3sum(t));
    CHECK(stats.sub_instances >= 1);
    CHECK(stats.combined_instances == log.calls);
  }
}
