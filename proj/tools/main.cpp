// Command-line harness: generate instances, solve them through any direct
// solver or reduction route, verify outputs against brute force, and measure
// operation-count growth.
//
// Exit codes: 0 success, 1 verification or selftest failure, 2 bad usage or
// malformed input.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "redlab/bench.hpp"
#include "redlab/core.hpp"
#include "redlab/fast_solvers.hpp"
#include "redlab/gen.hpp"
#include "redlab/io.hpp"
#include "redlab/kernels.hpp"
#include "redlab/oracles.hpp"
#include "redlab/reductions.hpp"
#include "redlab/rng.hpp"

namespace {

using namespace redlab;

enum class Algo { Oracle, Fast };
enum class Via { None, MinMax, Mono, MonoConv, ThreeSum };

Algo parse_algo(const std::string& name) {
  if (name == "oracle") return Algo::Oracle;
  if (name == "fast") return Algo::Fast;
  throw CLI::ValidationError("--algo", "expected 'oracle' or 'fast'");
}

Via parse_via(const std::string& name) {
  if (name.empty() || name == "none") return Via::None;
  if (name == "minmax") return Via::MinMax;
  if (name == "mono") return Via::Mono;
  if (name == "monoconv") return Via::MonoConv;
  if (name == "3sum") return Via::ThreeSum;
  throw CLI::ValidationError("--via", "expected one of minmax, mono, monoconv, 3sum");
}

[[noreturn]] void usage_error(const std::string& what) {
  throw std::invalid_argument(what);
}

struct GenParams {
  std::size_t n = 32;
  double p = 0.25;
  std::int64_t colors = 0;      // 0 = one color per vertex
  std::int64_t range = 100;
  double inf_chance = 0.2;
  double density = 0.3;
  std::int64_t values = 0;      // 0 = about sqrt(n)
  double fill_chance = 0.1;
  std::size_t coins = 0;        // 0 = about sqrt(n)
  bool plant = false;
  bool forced_no = false;
};

ParsedInstance generate(Problem problem, const GenParams& params, Rng& rng) {
  ParsedInstance inst;
  inst.problem = problem;
  const auto auto_sqrt = [](std::size_t n) {
    return std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n)))));
  };
  switch (problem) {
    case Problem::AeMono:
    case Problem::AeSparse: {
      const std::int64_t colors =
          params.colors > 0 ? params.colors : std::max<std::int64_t>(1, params.n);
      inst.payload = gen_colored_gnp(params.n, params.p, colors, rng);
      break;
    }
    case Problem::Apsp:
      inst.payload = gen_directed_gnp(params.n, params.p, rng);
      break;
    case Problem::MinMax: {
      MinMaxInstance mm;
      mm.a = gen_ext_matrix(params.n, params.n, 0, params.range, params.inf_chance, rng);
      mm.b = gen_ext_matrix(params.n, params.n, 0, params.range, params.inf_chance, rng);
      inst.payload = std::move(mm);
      break;
    }
    case Problem::MinWitness: {
      MinWitnessInstance mw;
      mw.a = gen_bool_matrix(params.n, params.n, params.density, rng);
      mw.b = gen_bool_matrix(params.n, params.n, params.density, rng);
      inst.payload = std::move(mw);
      break;
    }
    case Problem::ThreeSum: {
      if (params.plant && params.forced_no)
        usage_error("--plant and --forced-no are mutually exclusive");
      if (params.plant)
        inst.payload = gen_three_sum_planted(params.n, params.range, rng);
      else if (params.forced_no)
        inst.payload = gen_three_sum_no(params.n, params.range, rng);
      else
        inst.payload = gen_three_sum(params.n, params.range, rng);
      break;
    }
    case Problem::MonoConv: {
      const std::int64_t values = params.values > 0 ? params.values : auto_sqrt(params.n);
      inst.payload = gen_mono_conv(params.n, values, params.fill_chance, rng);
      break;
    }
    case Problem::CoinChange: {
      const auto n = static_cast<std::int64_t>(params.n);
      const std::size_t coins =
          params.coins > 0 ? params.coins : static_cast<std::size_t>(auto_sqrt(params.n));
      inst.payload = gen_coin_change(n, std::min<std::size_t>(coins, params.n), rng);
      break;
    }
  }
  return inst;
}

struct RunResult {
  OutputDoc output;
  std::uint64_t calls = 0;
  std::uint64_t word_ops = 0;
  std::uint64_t wall_ns = 0;
};

std::optional<BucketingParams> bucketing_from(std::int64_t t) {
  if (t < 0) return std::nullopt;
  return BucketingParams{static_cast<std::size_t>(t)};
}

/// Runs one instance through the selected route. For direct solvers the call
/// count is 1; for reductions it is the number of target-solver invocations.
RunResult run_route(const ParsedInstance& inst, Algo algo, Via via, std::uint64_t seed,
                    std::int64_t t_override) {
  RunResult result;
  OpCounter direct_ops;
  CallLog log;
  Rng rng(seed);
  const std::optional<BucketingParams> bucketing = bucketing_from(t_override);

  const auto started = std::chrono::steady_clock::now();
  switch (inst.problem) {
    case Problem::AeMono: {
      const auto& g = std::get<ColoredGraph>(inst.payload);
      if (via != Via::None) usage_error("ae-mono has no reduction route");
      EdgeAnswers ans = algo == Algo::Oracle ? oracle_ae_mono(g, &direct_ops)
                                             : mono_triangle_fast(g, bucketing, &direct_ops);
      result.output = make_edge_flags(g, ans);
      result.calls = 1;
      break;
    }
    case Problem::AeSparse: {
      const auto& g = std::get<ColoredGraph>(inst.payload);
      if (via != Via::None) usage_error("ae-sparse has no reduction route");
      EdgeAnswers ans = algo == Algo::Oracle ? oracle_ae_sparse(g, &direct_ops)
                                             : ae_sparse_fast(g, 0, &direct_ops);
      result.output = make_edge_flags(g, ans);
      result.calls = 1;
      break;
    }
    case Problem::MinMax: {
      const auto& mm = std::get<MinMaxInstance>(inst.payload);
      if (via != Via::None) usage_error("minmax has no reduction route");
      if (algo == Algo::Fast) usage_error("minmax has only the brute-force solver");
      result.output = make_matrix_output(oracle_minmax(mm.a, mm.b, &direct_ops));
      result.calls = 1;
      break;
    }
    case Problem::MinWitness: {
      const auto& mw = std::get<MinWitnessInstance>(inst.payload);
      if (via == Via::None) {
        if (algo == Algo::Fast) usage_error("minwitness has only oracle and reduction routes");
        result.output = make_matrix_output(oracle_minwitness(mw.a, mw.b, &direct_ops));
        result.calls = 1;
      } else if (via == Via::MinMax) {
        if (algo == Algo::Fast) usage_error("the minmax target has only a brute-force solver");
        MinMaxSolver solver = make_oracle_minmax_solver(log);
        result.output = make_matrix_output(minwitness_via_minmax(mw.a, mw.b, solver));
      } else if (via == Via::Mono) {
        MonoDeltaSolver solver = algo == Algo::Oracle ? make_oracle_mono_solver(log)
                                                      : make_fast_mono_solver(log, bucketing);
        result.output = make_matrix_output(minwitness_via_mono(mw.a, mw.b, solver));
      } else {
        usage_error("minwitness routes: --via minmax or --via mono");
      }
      break;
    }
    case Problem::Apsp: {
      const auto& g = std::get<DirectedGraph>(inst.payload);
      if (via == Via::None) {
        if (algo == Algo::Fast) usage_error("apsp has only oracle and reduction routes");
        result.output = make_matrix_output(oracle_apsp(g, &direct_ops));
        result.calls = 1;
      } else if (via == Via::MinMax) {
        if (algo == Algo::Fast) usage_error("the minmax target has only a brute-force solver");
        MinMaxSolver solver = make_oracle_minmax_solver(log);
        result.output = make_matrix_output(apsp_via_minmax(g, solver));
      } else if (via == Via::Mono) {
        MonoDeltaSolver solver = algo == Algo::Oracle ? make_oracle_mono_solver(log)
                                                      : make_fast_mono_solver(log, bucketing);
        result.output = make_matrix_output(apsp_via_mono(g, solver));
      } else {
        usage_error("apsp routes: --via minmax or --via mono");
      }
      break;
    }
    case Problem::ThreeSum: {
      const auto& t = std::get<ThreeSumInstance>(inst.payload);
      if (via == Via::None) {
        if (algo == Algo::Fast) usage_error("3sum has only oracle and reduction routes");
        result.output = make_decision_output(oracle_3sum(t, &direct_ops));
        result.calls = 1;
      } else if (via == Via::MonoConv) {
        // Values in the packed instances are ids, never frequent, so the
        // all-light split is the right default here.
        const std::optional<BucketingParams> packed =
            t_override >= 0 ? bucketing : std::optional<BucketingParams>(BucketingParams{0});
        MonoConvSolver solver = algo == Algo::Oracle ? make_oracle_monoconv_solver(log)
                                                     : make_fast_monoconv_solver(log, packed);
        result.output = make_decision_output(threesum_via_monoconv(t, solver, rng));
      } else if (via == Via::Mono) {
        MonoDeltaSolver solver = algo == Algo::Oracle ? make_oracle_mono_solver(log)
                                                      : make_fast_mono_solver(log, bucketing);
        result.output =
            make_decision_output(threesum_via_mono(t, value_graph_reducer, solver, rng));
      } else {
        usage_error("3sum routes: --via monoconv or --via mono");
      }
      break;
    }
    case Problem::MonoConv: {
      const auto& mc = std::get<MonoConvInstance>(inst.payload);
      if (via == Via::None) {
        result.output = make_bits_output(
            algo == Algo::Oracle ? oracle_monoconv(mc.a, mc.b, mc.c, &direct_ops)
                                 : mono_convolution_fast(mc.a, mc.b, mc.c, bucketing, &direct_ops));
        result.calls = 1;
      } else if (via == Via::ThreeSum) {
        result.output = make_bits_output(monoconv_via_3sum(mc.a, mc.b, mc.c, &direct_ops));
        result.calls = 1;
      } else {
        usage_error("monoconv routes: --via 3sum");
      }
      break;
    }
    case Problem::CoinChange: {
      const auto& cc = std::get<CoinChangeInstance>(inst.payload);
      if (via == Via::None) {
        result.output = make_vector_output(algo == Algo::Oracle
                                               ? oracle_coinchange(cc, &direct_ops)
                                               : coin_change_fast(cc, &direct_ops));
        result.calls = 1;
      } else if (via == Via::MonoConv) {
        MonoConvSolver solver = algo == Algo::Oracle ? make_oracle_monoconv_solver(log)
                                                     : make_fast_monoconv_solver(log, bucketing);
        result.output = make_vector_output(coinchange_via_monoconv(cc, solver));
      } else {
        usage_error("coinchange routes: --via monoconv");
      }
      break;
    }
  }
  const auto finished = std::chrono::steady_clock::now();

  result.wall_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(finished - started).count());
  if (result.calls == 0) result.calls = log.calls;
  result.word_ops = direct_ops.ops + log.kernel_ops.ops;
  return result;
}

OutputDoc reference_output(const ParsedInstance& inst) {
  switch (inst.problem) {
    case Problem::AeMono: {
      const auto& g = std::get<ColoredGraph>(inst.payload);
      return make_edge_flags(g, oracle_ae_mono(g));
    }
    case Problem::AeSparse: {
      const auto& g = std::get<ColoredGraph>(inst.payload);
      return make_edge_flags(g, oracle_ae_sparse(g));
    }
    case Problem::MinMax: {
      const auto& mm = std::get<MinMaxInstance>(inst.payload);
      return make_matrix_output(oracle_minmax(mm.a, mm.b));
    }
    case Problem::MinWitness: {
      const auto& mw = std::get<MinWitnessInstance>(inst.payload);
      return make_matrix_output(oracle_minwitness(mw.a, mw.b));
    }
    case Problem::Apsp:
      return make_matrix_output(oracle_apsp(std::get<DirectedGraph>(inst.payload)));
    case Problem::ThreeSum:
      return make_decision_output(oracle_3sum(std::get<ThreeSumInstance>(inst.payload)));
    case Problem::MonoConv: {
      const auto& mc = std::get<MonoConvInstance>(inst.payload);
      return make_bits_output(oracle_monoconv(mc.a, mc.b, mc.c));
    }
    case Problem::CoinChange:
      return make_vector_output(oracle_coinchange(std::get<CoinChangeInstance>(inst.payload)));
  }
  usage_error("unknown problem");
}

/// Compares a solver output against the reference, filling `issues` with
/// human-readable differences.
bool outputs_match(const OutputDoc& expected, const OutputDoc& actual,
                   std::vector<std::string>& issues) {
  if (expected.kind != actual.kind) {
    issues.push_back("output kind does not fit the instance");
    return false;
  }
  switch (expected.kind) {
    case OutputDoc::Kind::EdgeFlags: {
      if (expected.edges.size() != actual.edges.size()) {
        issues.push_back("edge count differs");
        return false;
      }
      std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint8_t> want;
      for (const EdgeFlag& ef : expected.edges) want[{ef.u, ef.v}] = ef.flag;
      bool ok = true;
      for (const EdgeFlag& ef : actual.edges) {
        const auto it = want.find({ef.u, ef.v});
        if (it == want.end()) {
          std::ostringstream msg;
          msg << "edge (" << ef.u << ", " << ef.v << ") is not in the instance";
          issues.push_back(msg.str());
          ok = false;
        } else if (it->second != ef.flag) {
          std::ostringstream msg;
          msg << "edge (" << ef.u << ", " << ef.v << "): expected " << int{it->second}
              << ", found " << int{ef.flag};
          issues.push_back(msg.str());
          ok = false;
        }
      }
      return ok;
    }
    case OutputDoc::Kind::Matrix:
      if (expected.matrix == actual.matrix) return true;
      issues.push_back("matrix differs");
      return false;
    case OutputDoc::Kind::Vector:
      if (expected.values == actual.values) return true;
      issues.push_back("vector differs");
      return false;
    case OutputDoc::Kind::Bits:
      if (expected.bits == actual.bits) return true;
      issues.push_back("bit vector differs");
      return false;
    case OutputDoc::Kind::Decision:
      if (expected.decision == actual.decision) return true;
      issues.push_back("decision differs");
      return false;
  }
  issues.push_back("unknown output kind");
  return false;
}

void write_doc(const std::string& path, const OutputDoc& doc) {
  if (path.empty())
    serialize_output(std::cout, doc);
  else
    save_output(path, doc);
}

int run_selftest(std::uint64_t seed) {
  int failures = 0;
  const auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  };
  Rng rng(seed);

  {
    const ColoredGraph g = gen_colored_gnp(48, 0.3, 16, rng);
    report("ae-mono fast matches oracle",
           mono_triangle_fast(g) == oracle_ae_mono(g));
    report("ae-sparse fast matches oracle",
           ae_sparse_fast(g) == oracle_ae_sparse(g));
  }
  {
    MinWitnessInstance mw;
    mw.a = gen_bool_matrix(24, 24, 0.2, rng);
    mw.b = gen_bool_matrix(24, 24, 0.2, rng);
    const ExtMatrix want = oracle_minwitness(mw.a, mw.b);
    CallLog log1, log2;
    MinMaxSolver s1 = make_oracle_minmax_solver(log1);
    MonoDeltaSolver s2 = make_fast_mono_solver(log2);
    report("minwitness via minmax", minwitness_via_minmax(mw.a, mw.b, s1) == want);
    report("minwitness via mono", minwitness_via_mono(mw.a, mw.b, s2) == want);
  }
  {
    const DirectedGraph g = gen_directed_gnp(24, 0.12, rng);
    const ExtMatrix want = oracle_apsp(g);
    CallLog log1, log2;
    MinMaxSolver s1 = make_oracle_minmax_solver(log1);
    MonoDeltaSolver s2 = make_fast_mono_solver(log2);
    report("apsp via minmax", apsp_via_minmax(g, s1) == want);
    report("apsp via mono", apsp_via_mono(g, s2) == want);
  }
  {
    const ThreeSumInstance yes = gen_three_sum_planted(48, 600, rng);
    const ThreeSumInstance no = gen_three_sum_no(48, 600, rng);
    CallLog log;
    MonoConvSolver solver = make_fast_monoconv_solver(log, BucketingParams{0});
    report("3sum via monoconv on a planted instance",
           threesum_via_monoconv(yes, solver, rng) == oracle_3sum(yes));
    report("3sum via monoconv on a no instance",
           threesum_via_monoconv(no, solver, rng) == false);
    CallLog log2;
    MonoDeltaSolver mono = make_fast_mono_solver(log2);
    report("3sum via mono on a planted instance",
           threesum_via_mono(yes, value_graph_reducer, mono, rng) == oracle_3sum(yes));
    report("3sum via mono on a no instance",
           threesum_via_mono(no, value_graph_reducer, mono, rng) == false);
  }
  {
    const MonoConvInstance mc = gen_mono_conv(96, 10, 0.15, rng);
    report("monoconv fast matches oracle",
           mono_convolution_fast(mc.a, mc.b, mc.c) == oracle_monoconv(mc.a, mc.b, mc.c));
  }
  {
    const CoinChangeInstance cc = gen_coin_change(200, 9, rng);
    const auto want = oracle_coinchange(cc);
    report("coinchange fast matches oracle", coin_change_fast(cc) == want);
    CallLog log;
    MonoConvSolver solver = make_fast_monoconv_solver(log);
    report("coinchange via monoconv", coinchange_via_monoconv(cc, solver) == want);
  }

  if (failures != 0) {
    std::cout << failures << " checks failed\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algorithms and reductions laboratory"};
  app.require_subcommand(1);

  std::string problem_name;
  std::string in_path, out_path;
  std::string algo_name = "oracle", via_name = "none";
  std::uint64_t seed = 1;
  std::int64_t t_override = -1;
  bool json_report = false;
  GenParams gen_params;

  CLI::App* cmd_gen = app.add_subcommand("gen", "generate a random instance");
  cmd_gen->add_option("--problem", problem_name, "instance kind")->required();
  cmd_gen->add_option("--n", gen_params.n, "instance size");
  cmd_gen->add_option("--seed", seed, "rng seed");
  cmd_gen->add_option("--out", out_path, "output path (default stdout)");
  cmd_gen->add_option("--p", gen_params.p, "edge probability");
  cmd_gen->add_option("--colors", gen_params.colors, "color count (0 = n)");
  cmd_gen->add_option("--range", gen_params.range, "value range");
  cmd_gen->add_option("--inf-chance", gen_params.inf_chance, "INF cell probability");
  cmd_gen->add_option("--density", gen_params.density, "one-bit probability");
  cmd_gen->add_option("--values", gen_params.values, "distinct values (0 = sqrt(n))");
  cmd_gen->add_option("--fill-chance", gen_params.fill_chance, "fill slot probability");
  cmd_gen->add_option("--coins", gen_params.coins, "coin count (0 = sqrt(n))");
  cmd_gen->add_flag("--plant", gen_params.plant, "force a YES three-sum instance");
  cmd_gen->add_flag("--forced-no", gen_params.forced_no, "force a NO three-sum instance");

  CLI::App* cmd_solve = app.add_subcommand("solve", "solve an instance file");
  cmd_solve->add_option("--in", in_path, "instance path")->required();
  cmd_solve->add_option("--out", out_path, "output path (default stdout)");
  cmd_solve->add_option("--algo", algo_name, "oracle or fast");
  cmd_solve->add_option("--via", via_name, "reduction route");
  cmd_solve->add_option("--seed", seed, "rng seed for randomized reductions");
  cmd_solve->add_option("--t", t_override, "bucketing override for fast solvers");

  CLI::App* cmd_verify = app.add_subcommand("verify", "check an output against brute force");
  cmd_verify->add_option("--in", in_path, "instance path")->required();
  cmd_verify->add_option("--out", out_path, "output path to check")->required();
  cmd_verify->add_flag("--json", json_report, "print a JSON report");

  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  CLI::App* cmd_bench = app.add_subcommand("bench", "measure op-count growth");
  cmd_bench->add_option("--problem", problem_name, "instance kind")->required();
  cmd_bench->add_option("--sizes", sizes, "instance sizes")->required()->delimiter(',');
  cmd_bench->add_option("--trials", trials, "instances per size");
  cmd_bench->add_option("--algo", algo_name, "oracle or fast");
  cmd_bench->add_option("--via", via_name, "reduction route");
  cmd_bench->add_option("--seed", seed, "rng seed");
  cmd_bench->add_option("--out", out_path, "csv path (default stdout)");
  cmd_bench->add_option("--t", t_override, "bucketing override for fast solvers");
  cmd_bench->add_option("--p", gen_params.p, "edge probability");
  cmd_bench->add_option("--colors", gen_params.colors, "color count (0 = n)");
  cmd_bench->add_option("--range", gen_params.range, "value range");

  CLI::App* cmd_selftest = app.add_subcommand("selftest", "run the built-in smoke suite");
  cmd_selftest->add_option("--seed", seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_gen->parsed()) {
      const auto problem = problem_from_tag(problem_name);
      if (!problem) usage_error("unknown problem '" + problem_name + "'");
      Rng rng(seed);
      const ParsedInstance inst = generate(*problem, gen_params, rng);
      const ValidationReport report = validate_instance(inst);
      if (!report.ok()) usage_error("generated instance failed validation: " + report.issues[0]);
      if (out_path.empty())
        serialize_instance(std::cout, inst);
      else
        save_instance(out_path, inst);
      return 0;
    }

    if (cmd_solve->parsed()) {
      const ParsedInstance inst = load_instance(in_path);
      const ValidationReport report = validate_instance(inst);
      if (!report.ok()) usage_error("invalid instance: " + report.issues[0]);
      const RunResult result =
          run_route(inst, parse_algo(algo_name), parse_via(via_name), seed, t_override);
      write_doc(out_path, result.output);
      std::cerr << "calls=" << result.calls << " word_ops=" << result.word_ops
                << " wall_ns=" << result.wall_ns << '\n';
      return 0;
    }

    if (cmd_verify->parsed()) {
      const ParsedInstance inst = load_instance(in_path);
      const ValidationReport report = validate_instance(inst);
      if (!report.ok()) usage_error("invalid instance: " + report.issues[0]);
      const OutputDoc actual = load_output(out_path);
      const OutputDoc expected = reference_output(inst);
      std::vector<std::string> issues;
      const bool match = outputs_match(expected, actual, issues);
      if (json_report) {
        nlohmann::json doc;
        doc["problem"] = problem_tag(inst.problem);
        doc["match"] = match;
        doc["issues"] = issues;
        std::cout << doc.dump(2) << '\n';
      } else if (match) {
        std::cout << "match\n";
      } else {
        std::cout << "MISMATCH\n";
        for (const std::string& issue : issues) std::cout << "  " << issue << '\n';
      }
      return match ? 0 : 1;
    }

    if (cmd_bench->parsed()) {
      const auto problem = problem_from_tag(problem_name);
      if (!problem) usage_error("unknown problem '" + problem_name + "'");
      const Algo algo = parse_algo(algo_name);
      const Via via = parse_via(via_name);
      BenchReport bench;
      for (const std::size_t size : sizes) {
        for (std::size_t trial = 0; trial < trials; ++trial) {
          const std::uint64_t run_seed = seed + 1000003 * trial + 17 * size;
          Rng rng(run_seed);
          GenParams params = gen_params;
          params.n = size;
          const ParsedInstance inst = generate(*problem, params, rng);
          const RunResult result = run_route(inst, algo, via, run_seed, t_override);
          bench.rows.push_back({size, run_seed, result.calls, result.word_ops, result.wall_ns});
        }
      }
      if (out_path.empty()) {
        bench.write_csv(std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) usage_error("cannot open " + out_path + " for writing");
        bench.write_csv(out);
      }
      std::vector<std::pair<double, double>> points;
      for (const BenchRow& row : bench.rows)
        points.emplace_back(static_cast<double>(row.size), static_cast<double>(row.word_ops));
      if (sizes.size() >= 2) {
        try {
          std::cerr << "loglog_slope=" << fit_loglog_slope(points) << '\n';
        } catch (const std::exception&) {
          // degenerate measurements, slope omitted
        }
      }
      return 0;
    }

    if (cmd_selftest->parsed()) return run_selftest(seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
