#include "doctest.h"

#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "redlab/gen.hpp"
#include "redlab/io.hpp"
#include "redlab/rng.hpp"

using namespace redlab;

namespace {

std::string dump(const ParsedInstance& inst) {
  std::ostringstream out;
  serialize_instance(out, inst);
  return out.str();
}

std::string dump(const OutputDoc& doc) {
  std::ostringstream out;
  serialize_output(out, doc);
  return out.str();
}

/// Serialization is canonical, so one round trip must be byte-stable.
void check_instance_roundtrip(const ParsedInstance& inst) {
  const std::string text = dump(inst);
  std::istringstream in(text);
  const ParsedInstance back = parse_instance(in);
  CHECK(back.problem == inst.problem);
  CHECK(dump(back) == text);
  CHECK(validate_instance(back).ok());
}

void check_output_roundtrip(const OutputDoc& doc) {
  const std::string text = dump(doc);
  std::istringstream in(text);
  const OutputDoc back = parse_output(in);
  CHECK(back.kind == doc.kind);
  CHECK(dump(back) == text);
}

ParsedInstance wrap(Problem problem, InstancePayload payload) {
  ParsedInstance inst;
  inst.problem = problem;
  inst.payload = std::move(payload);
  return inst;
}

}  // namespace

TEST_CASE("every instance kind survives a byte-stable round trip") {
  Rng rng(61);
  check_instance_roundtrip(wrap(Problem::AeMono, gen_colored_gnp(9, 0.4, 5, rng)));
  check_instance_roundtrip(wrap(Problem::AeSparse, gen_colored_gnp(7, 0.5, 1, rng)));
  check_instance_roundtrip(wrap(Problem::Apsp, gen_directed_gnp(8, 0.3, rng)));
  MinMaxInstance mm;
  mm.a = gen_ext_matrix(4, 4, 0, 50, 0.25, rng);
  mm.b = gen_ext_matrix(4, 4, 0, 50, 0.25, rng);
  check_instance_roundtrip(wrap(Problem::MinMax, std::move(mm)));
  MinWitnessInstance mw;
  mw.a = gen_bool_matrix(5, 5, 0.4, rng);
  mw.b = gen_bool_matrix(5, 5, 0.4, rng);
  check_instance_roundtrip(wrap(Problem::MinWitness, std::move(mw)));
  check_instance_roundtrip(wrap(Problem::ThreeSum, gen_three_sum(12, 40, rng)));
  check_instance_roundtrip(wrap(Problem::MonoConv, gen_mono_conv(15, 6, 0.3, rng)));
  check_instance_roundtrip(wrap(Problem::CoinChange, gen_coin_change(30, 4, rng)));
}

TEST_CASE("every output kind survives a byte-stable round trip") {
  Rng rng(62);
  const ColoredGraph g = gen_colored_gnp(6, 0.6, 2, rng);
  EdgeAnswers ans;
  ans.flags.assign(g.edges.size(), 0);
  for (std::size_t i = 0; i < ans.flags.size(); i += 2) ans.flags[i] = 1;
  check_output_roundtrip(make_edge_flags(g, ans));
  check_output_roundtrip(make_matrix_output(gen_ext_matrix(3, 5, 0, 9, 0.3, rng)));
  check_output_roundtrip(make_vector_output({0, kInf, 4, 7}));
  check_output_roundtrip(make_bits_output({1, 0, 0, 1, 1}));
  check_output_roundtrip(make_decision_output(true));
  check_output_roundtrip(make_decision_output(false));
}

TEST_CASE("infinities and fill slots have stable spellings") {
  MinMaxInstance mm;
  mm.a = ExtMatrix(1, 2, kInf);
  mm.b = ExtMatrix(2, 1, 3);
  const std::string text = dump(wrap(Problem::MinMax, std::move(mm)));
  CHECK(text.find("inf") != std::string::npos);

  MonoConvInstance mc;
  mc.a = {kNoneA, 2};
  mc.b = {1, kNoneB};
  mc.c = {kNoneC, 0};
  const std::string conv_text = dump(wrap(Problem::MonoConv, std::move(mc)));
  CHECK(conv_text.find('_') != std::string::npos);
  std::istringstream in(conv_text);
  const ParsedInstance back = parse_instance(in);
  const auto& parsed = std::get<MonoConvInstance>(back.payload);
  CHECK(parsed.a == Sequence{kNoneA, 2});
  CHECK(parsed.b == Sequence{1, kNoneB});
  CHECK(parsed.c == Sequence{kNoneC, 0});
}

TEST_CASE("directed instances serialize without colors") {
  DirectedGraph g;
  g.n = 3;
  g.edges = {{0, 2, 0}, {2, 1, 0}};
  const std::string text = dump(wrap(Problem::Apsp, g));
  std::istringstream in(text);
  const ParsedInstance back = parse_instance(in);
  const auto& parsed = std::get<DirectedGraph>(back.payload);
  CHECK(parsed.n == 3);
  CHECK(parsed.edges == g.edges);
}

TEST_CASE("malformed instance files are rejected with a parse error") {
  const std::vector<std::string> bad = {
      "",                                  // empty
      "nonsense 1\n",                      // unknown tag
      "ae-mono 2\n0 0\n",                  // unsupported version
      "ae-mono 1\n2\n",                    // missing edge count
      "ae-mono 1\n2 1\n0\n",               // truncated edge
      "ae-mono 1\n2 1\n0 x 0\n",           // non-numeric token
      "minmax 1\n1 1\n5\n",                // second matrix missing
      "3sum 1\n1 1\n5\n6\n",               // third sequence missing
      "coinchange 1\n10\n",                // coin count missing
      "monoconv 1\n2\n0 1\n1 ?\n0 0\n",    // bad token inside a sequence
  };
  for (const std::string& text : bad) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_instance(in), std::runtime_error);
  }
}

TEST_CASE("malformed output files are rejected with a parse error") {
  const std::vector<std::string> bad = {
      "",
      "edge-flags 1\n1\n0 1\n",     // flag missing
      "ext-matrix 1\n2 2\n1 2 3\n", // cell missing
      "decision 1\n2\n",            // not a boolean
      "bit-vector 1\n2\n1 2\n",     // not a bit
  };
  for (const std::string& text : bad) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_output(in), std::runtime_error);
  }
}

TEST_CASE("instance validation catches structural damage") {
  Rng rng(63);
  ParsedInstance inst = wrap(Problem::AeMono, gen_colored_gnp(5, 0.9, 3, rng));
  auto& g = std::get<ColoredGraph>(inst.payload);
  REQUIRE(!g.edges.empty());
  g.edges[0].color = -4;
  CHECK(!validate_instance(inst).ok());

  ParsedInstance mm = wrap(Problem::MinMax, MinMaxInstance{ExtMatrix(2, 3), ExtMatrix(2, 3)});
  CHECK(!validate_instance(mm).ok());  // inner dimensions differ

  MonoConvInstance mc;
  mc.a = {kNoneB};  // wrong sentinel for this sequence
  mc.b = {1};
  mc.c = {0};
  CHECK(!validate_instance(wrap(Problem::MonoConv, std::move(mc))).ok());

  CoinChangeInstance cc;
  cc.n = 5;
  cc.coins = {0};
  CHECK(!validate_instance(wrap(Problem::CoinChange, cc)).ok());
}

TEST_CASE("generators are deterministic per seed") {
  for (const std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{999}}) {
    Rng r1(seed), r2(seed);
    CHECK(dump(wrap(Problem::AeMono, gen_colored_gnp(12, 0.35, 6, r1))) ==
          dump(wrap(Problem::AeMono, gen_colored_gnp(12, 0.35, 6, r2))));
    CHECK(dump(wrap(Problem::ThreeSum, gen_three_sum(20, 50, r1))) ==
          dump(wrap(Problem::ThreeSum, gen_three_sum(20, 50, r2))));
    CHECK(dump(wrap(Problem::CoinChange, gen_coin_change(40, 6, r1))) ==
          dump(wrap(Problem::CoinChange, gen_coin_change(40, 6, r2))));
  }
}

TEST_CASE("generated instances always validate") {
  Rng rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(validate(gen_colored_gnp(1 + rand_below(rng, 20), 0.5, 1 + rand_below(rng, 30), rng)).ok());
    CHECK(validate(gen_directed_gnp(1 + rand_below(rng, 20), 0.5, rng)).ok());
    CHECK(validate(gen_three_sum(1 + rand_below(rng, 30), 25, rng)).ok());
    const auto planted = gen_three_sum_planted(2 + rand_below(rng, 30), 25, rng);
    CHECK(validate(planted).ok());
    const std::int64_t n = 2 + static_cast<std::int64_t>(rand_below(rng, 60));
    CHECK(validate(gen_coin_change(n, 1 + rand_below(rng, static_cast<std::uint64_t>(n)), rng)).ok());
    const MonoConvInstance mc = gen_mono_conv(1 + rand_below(rng, 40), 5, 0.25, rng);
    CHECK(validate_mono_conv(mc.a, mc.b, mc.c).ok());
  }
}

TEST_CASE("problem tags round-trip") {
  for (const Problem p : {Problem::AeMono, Problem::AeSparse, Problem::MinMax,
                          Problem::MinWitness, Problem::Apsp, Problem::ThreeSum,
                          Problem::MonoConv, Problem::CoinChange}) {
    const auto back = problem_from_tag(problem_tag(p));
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  CHECK(!problem_from_tag("sorting").has_value());
}
