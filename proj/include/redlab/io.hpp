#pragma once

// Plain-text instance and result files. Tokens are whitespace-separated; the
// first line names the payload kind and a format version. Serialization is
// canonical, so parse-then-serialize is byte-stable.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "redlab/core.hpp"

namespace redlab {

enum class Problem {
  AeMono,
  AeSparse,
  MinMax,
  MinWitness,
  Apsp,
  ThreeSum,
  MonoConv,
  CoinChange,
};

const char* problem_tag(Problem p);
std::optional<Problem> problem_from_tag(std::string_view tag);

struct MinMaxInstance {
  ExtMatrix a, b;
};

struct MinWitnessInstance {
  BoolMatrix a, b;
};

struct MonoConvInstance {
  Sequence a, b, c;
};

using InstancePayload = std::variant<ColoredGraph, DirectedGraph, MinMaxInstance,
                                     MinWitnessInstance, ThreeSumInstance, MonoConvInstance,
                                     CoinChangeInstance>;

struct ParsedInstance {
  Problem problem = Problem::AeMono;
  InstancePayload payload;
};

/// Throws std::runtime_error with a description on malformed input.
ParsedInstance parse_instance(std::istream& in);
void serialize_instance(std::ostream& out, const ParsedInstance& inst);
ParsedInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const ParsedInstance& inst);

ValidationReport validate_instance(const ParsedInstance& inst);

struct EdgeFlag {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::uint8_t flag = 0;
};

/// Solver results. Edge answers carry their endpoint keys so the file stands
/// on its own.
struct OutputDoc {
  enum class Kind { EdgeFlags, Matrix, Vector, Bits, Decision };

  Kind kind = Kind::Decision;
  std::vector<EdgeFlag> edges;
  ExtMatrix matrix;
  std::vector<ExtInt> values;
  std::vector<std::uint8_t> bits;
  bool decision = false;
};

OutputDoc parse_output(std::istream& in);
void serialize_output(std::ostream& out, const OutputDoc& doc);
OutputDoc load_output(const std::string& path);
void save_output(const std::string& path, const OutputDoc& doc);

OutputDoc make_edge_flags(const ColoredGraph& g, const EdgeAnswers& answers);
OutputDoc make_matrix_output(ExtMatrix m);
OutputDoc make_vector_output(std::vector<ExtInt> v);
OutputDoc make_bits_output(std::vector<std::uint8_t> bits);
OutputDoc make_decision_output(bool yes);

}  // namespace redlab
