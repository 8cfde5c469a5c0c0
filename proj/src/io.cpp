#include "redlab/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace redlab {

namespace {

constexpr int kFormatVersion = 1;

[[noreturn]] void bad_input(const std::string& what) {
  throw std::runtime_error("parse error: " + what);
}

std::string read_token(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) bad_input(std::string("missing ") + what);
  return token;
}

std::int64_t read_int(std::istream& in, const char* what) {
  const std::string token = read_token(in, what);
  try {
    std::size_t used = 0;
    const std::int64_t value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    bad_input(std::string(what) + " is not an integer: '" + token + "'");
  }
}

std::size_t read_size(std::istream& in, const char* what) {
  const std::int64_t value = read_int(in, what);
  if (value < 0) bad_input(std::string(what) + " is negative");
  return static_cast<std::size_t>(value);
}

ExtInt read_ext(std::istream& in, const char* what) {
  const std::string token = read_token(in, what);
  if (token == "inf") return kInf;
  try {
    std::size_t used = 0;
    const std::int64_t value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    bad_input(std::string(what) + " is not an integer or inf: '" + token + "'");
  }
}

void write_ext(std::ostream& out, ExtInt x) {
  if (is_inf(x))
    out << "inf";
  else
    out << x;
}

ColoredGraph read_graph_body(std::istream& in, bool with_colors) {
  ColoredGraph g;
  g.n = read_size(in, "vertex count");
  const std::size_t m = read_size(in, "edge count");
  g.edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Edge e;
    e.u = static_cast<std::uint32_t>(read_size(in, "edge endpoint"));
    e.v = static_cast<std::uint32_t>(read_size(in, "edge endpoint"));
    e.color = with_colors ? read_int(in, "edge color") : 0;
    g.edges.push_back(e);
  }
  return g;
}

void write_graph_body(std::ostream& out, const ColoredGraph& g, bool with_colors) {
  out << g.n << ' ' << g.edges.size() << '\n';
  for (const Edge& e : g.edges) {
    out << e.u << ' ' << e.v;
    if (with_colors) out << ' ' << e.color;
    out << '\n';
  }
}

ExtMatrix read_ext_matrix(std::istream& in) {
  const std::size_t rows = read_size(in, "matrix rows");
  const std::size_t cols = read_size(in, "matrix cols");
  ExtMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = read_ext(in, "matrix cell");
  return m;
}

void write_ext_matrix(std::ostream& out, const ExtMatrix& m) {
  out << m.rows << ' ' << m.cols << '\n';
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j != 0) out << ' ';
      write_ext(out, m.at(i, j));
    }
    out << '\n';
  }
}

BoolMatrix read_bool_matrix(std::istream& in) {
  const std::size_t rows = read_size(in, "matrix rows");
  const std::size_t cols = read_size(in, "matrix cols");
  BoolMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t bit = read_int(in, "matrix bit");
      if (bit != 0 && bit != 1) bad_input("matrix bit is not 0 or 1");
      if (bit != 0) m.set(i, j, true);
    }
  return m;
}

void write_bool_matrix(std::ostream& out, const BoolMatrix& m) {
  out << m.rows << ' ' << m.cols << '\n';
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j != 0) out << ' ';
      out << (m.get(i, j) ? 1 : 0);
    }
    out << '\n';
  }
}

Sequence read_plain_sequence(std::istream& in, std::size_t len) {
  Sequence seq;
  seq.reserve(len);
  for (std::size_t i = 0; i < len; ++i) seq.push_back(read_int(in, "sequence value"));
  return seq;
}

void write_plain_sequence(std::ostream& out, const Sequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i != 0) out << ' ';
    out << seq[i];
  }
  out << '\n';
}

Sequence read_fill_sequence(std::istream& in, std::size_t len, std::int64_t fill) {
  Sequence seq;
  seq.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::string token = read_token(in, "sequence value");
    if (token == "_") {
      seq.push_back(fill);
      continue;
    }
    try {
      std::size_t used = 0;
      const std::int64_t value = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      seq.push_back(value);
    } catch (const std::exception&) {
      bad_input("sequence value is not an integer or '_': '" + token + "'");
    }
  }
  return seq;
}

void write_fill_sequence(std::ostream& out, const Sequence& seq, std::int64_t fill) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i != 0) out << ' ';
    if (seq[i] == fill)
      out << '_';
    else
      out << seq[i];
  }
  out << '\n';
}

}  // namespace

const char* problem_tag(Problem p) {
  switch (p) {
    case Problem::AeMono: return "ae-mono";
    case Problem::AeSparse: return "ae-sparse";
    case Problem::MinMax: return "minmax";
    case Problem::MinWitness: return "minwitness";
    case Problem::Apsp: return "apsp";
    case Problem::ThreeSum: return "3sum";
    case Problem::MonoConv: return "monoconv";
    case Problem::CoinChange: return "coinchange";
  }
  return "unknown";
}

std::optional<Problem> problem_from_tag(std::string_view tag) {
  for (Problem p : {Problem::AeMono, Problem::AeSparse, Problem::MinMax, Problem::MinWitness,
                    Problem::Apsp, Problem::ThreeSum, Problem::MonoConv, Problem::CoinChange})
    if (tag == problem_tag(p)) return p;
  return std::nullopt;
}

ParsedInstance parse_instance(std::istream& in) {
  const std::string tag = read_token(in, "instance tag");
  const auto problem = problem_from_tag(tag);
  if (!problem) bad_input("unknown instance tag '" + tag + "'");
  const std::int64_t version = read_int(in, "format version");
  if (version != kFormatVersion) bad_input("unsupported format version");

  ParsedInstance inst;
  inst.problem = *problem;
  switch (*problem) {
    case Problem::AeMono:
    case Problem::AeSparse:
      inst.payload = read_graph_body(in, true);
      break;
    case Problem::Apsp: {
      DirectedGraph g;
      static_cast<ColoredGraph&>(g) = read_graph_body(in, false);
      inst.payload = std::move(g);
      break;
    }
    case Problem::MinMax: {
      MinMaxInstance mm;
      mm.a = read_ext_matrix(in);
      mm.b = read_ext_matrix(in);
      inst.payload = std::move(mm);
      break;
    }
    case Problem::MinWitness: {
      MinWitnessInstance mw;
      mw.a = read_bool_matrix(in);
      mw.b = read_bool_matrix(in);
      inst.payload = std::move(mw);
      break;
    }
    case Problem::ThreeSum: {
      ThreeSumInstance t;
      const std::size_t na = read_size(in, "size of A");
      const std::size_t nb = read_size(in, "size of B");
      const std::size_t nc = read_size(in, "size of C");
      t.a = read_plain_sequence(in, na);
      t.b = read_plain_sequence(in, nb);
      t.c = read_plain_sequence(in, nc);
      inst.payload = std::move(t);
      break;
    }
    case Problem::MonoConv: {
      MonoConvInstance mc;
      const std::size_t n = read_size(in, "sequence length");
      mc.a = read_fill_sequence(in, n, kNoneA);
      mc.b = read_fill_sequence(in, n, kNoneB);
      mc.c = read_fill_sequence(in, n, kNoneC);
      inst.payload = std::move(mc);
      break;
    }
    case Problem::CoinChange: {
      CoinChangeInstance c;
      c.n = read_int(in, "value bound");
      const std::size_t k = read_size(in, "coin count");
      c.coins = read_plain_sequence(in, k);
      inst.payload = std::move(c);
      break;
    }
  }
  return inst;
}

void serialize_instance(std::ostream& out, const ParsedInstance& inst) {
  out << problem_tag(inst.problem) << ' ' << kFormatVersion << '\n';
  switch (inst.problem) {
    case Problem::AeMono:
    case Problem::AeSparse:
      write_graph_body(out, std::get<ColoredGraph>(inst.payload), true);
      break;
    case Problem::Apsp:
      write_graph_body(out, std::get<DirectedGraph>(inst.payload), false);
      break;
    case Problem::MinMax: {
      const auto& mm = std::get<MinMaxInstance>(inst.payload);
      write_ext_matrix(out, mm.a);
      write_ext_matrix(out, mm.b);
      break;
    }
    case Problem::MinWitness: {
      const auto& mw = std::get<MinWitnessInstance>(inst.payload);
      write_bool_matrix(out, mw.a);
      write_bool_matrix(out, mw.b);
      break;
    }
    case Problem::ThreeSum: {
      const auto& t = std::get<ThreeSumInstance>(inst.payload);
      out << t.a.size() << ' ' << t.b.size() << ' ' << t.c.size() << '\n';
      write_plain_sequence(out, t.a);
      write_plain_sequence(out, t.b);
      write_plain_sequence(out, t.c);
      break;
    }
    case Problem::MonoConv: {
      const auto& mc = std::get<MonoConvInstance>(inst.payload);
      out << mc.a.size() << '\n';
      write_fill_sequence(out, mc.a, kNoneA);
      write_fill_sequence(out, mc.b, kNoneB);
      write_fill_sequence(out, mc.c, kNoneC);
      break;
    }
    case Problem::CoinChange: {
      const auto& c = std::get<CoinChangeInstance>(inst.payload);
      out << c.n << ' ' << c.coins.size() << '\n';
      write_plain_sequence(out, c.coins);
      break;
    }
  }
}

ParsedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

void save_instance(const std::string& path, const ParsedInstance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  serialize_instance(out, inst);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

ValidationReport validate_instance(const ParsedInstance& inst) {
  switch (inst.problem) {
    case Problem::AeMono:
    case Problem::AeSparse:
      return validate(std::get<ColoredGraph>(inst.payload));
    case Problem::Apsp:
      return validate(std::get<DirectedGraph>(inst.payload));
    case Problem::MinMax: {
      const auto& mm = std::get<MinMaxInstance>(inst.payload);
      ValidationReport report = validate(mm.a);
      for (std::string& issue : validate(mm.b).issues) report.fail(std::move(issue));
      if (mm.a.cols != mm.b.rows) report.fail("inner dimensions differ");
      return report;
    }
    case Problem::MinWitness: {
      const auto& mw = std::get<MinWitnessInstance>(inst.payload);
      ValidationReport report = validate(mw.a);
      for (std::string& issue : validate(mw.b).issues) report.fail(std::move(issue));
      if (mw.a.cols != mw.b.rows) report.fail("inner dimensions differ");
      return report;
    }
    case Problem::ThreeSum:
      return validate(std::get<ThreeSumInstance>(inst.payload));
    case Problem::MonoConv: {
      const auto& mc = std::get<MonoConvInstance>(inst.payload);
      return validate_mono_conv(mc.a, mc.b, mc.c);
    }
    case Problem::CoinChange:
      return validate(std::get<CoinChangeInstance>(inst.payload));
  }
  ValidationReport report;
  report.fail("unknown problem");
  return report;
}

OutputDoc parse_output(std::istream& in) {
  const std::string tag = read_token(in, "output tag");
  const std::int64_t version = read_int(in, "format version");
  if (version != kFormatVersion) bad_input("unsupported format version");

  OutputDoc doc;
  if (tag == "edge-flags") {
    doc.kind = OutputDoc::Kind::EdgeFlags;
    const std::size_t m = read_size(in, "edge count");
    doc.edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      EdgeFlag ef;
      ef.u = static_cast<std::uint32_t>(read_size(in, "edge endpoint"));
      ef.v = static_cast<std::uint32_t>(read_size(in, "edge endpoint"));
      const std::int64_t flag = read_int(in, "edge flag");
      if (flag != 0 && flag != 1) bad_input("edge flag is not 0 or 1");
      ef.flag = static_cast<std::uint8_t>(flag);
      doc.edges.push_back(ef);
    }
  } else if (tag == "ext-matrix") {
    doc.kind = OutputDoc::Kind::Matrix;
    doc.matrix = read_ext_matrix(in);
  } else if (tag == "ext-vector") {
    doc.kind = OutputDoc::Kind::Vector;
    const std::size_t n = read_size(in, "vector length");
    doc.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) doc.values.push_back(read_ext(in, "vector value"));
  } else if (tag == "bit-vector") {
    doc.kind = OutputDoc::Kind::Bits;
    const std::size_t n = read_size(in, "vector length");
    doc.bits.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t bit = read_int(in, "bit");
      if (bit != 0 && bit != 1) bad_input("bit is not 0 or 1");
      doc.bits.push_back(static_cast<std::uint8_t>(bit));
    }
  } else if (tag == "decision") {
    doc.kind = OutputDoc::Kind::Decision;
    const std::int64_t value = read_int(in, "decision");
    if (value != 0 && value != 1) bad_input("decision is not 0 or 1");
    doc.decision = value != 0;
  } else {
    bad_input("unknown output tag '" + tag + "'");
  }
  return doc;
}

void serialize_output(std::ostream& out, const OutputDoc& doc) {
  switch (doc.kind) {
    case OutputDoc::Kind::EdgeFlags:
      out << "edge-flags " << kFormatVersion << '\n' << doc.edges.size() << '\n';
      for (const EdgeFlag& ef : doc.edges)
        out << ef.u << ' ' << ef.v << ' ' << int{ef.flag} << '\n';
      break;
    case OutputDoc::Kind::Matrix:
      out << "ext-matrix " << kFormatVersion << '\n';
      write_ext_matrix(out, doc.matrix);
      break;
    case OutputDoc::Kind::Vector: {
      out << "ext-vector " << kFormatVersion << '\n' << doc.values.size() << '\n';
      for (std::size_t i = 0; i < doc.values.size(); ++i) {
        if (i != 0) out << ' ';
        write_ext(out, doc.values[i]);
      }
      out << '\n';
      break;
    }
    case OutputDoc::Kind::Bits: {
      out << "bit-vector " << kFormatVersion << '\n' << doc.bits.size() << '\n';
      for (std::size_t i = 0; i < doc.bits.size(); ++i) {
        if (i != 0) out << ' ';
        out << int{doc.bits[i]};
      }
      out << '\n';
      break;
    }
    case OutputDoc::Kind::Decision:
      out << "decision " << kFormatVersion << '\n' << (doc.decision ? 1 : 0) << '\n';
      break;
  }
}

OutputDoc load_output(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_output(in);
}

void save_output(const std::string& path, const OutputDoc& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  serialize_output(out, doc);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

OutputDoc make_edge_flags(const ColoredGraph& g, const EdgeAnswers& answers) {
  if (g.edges.size() != answers.flags.size())
    throw std::invalid_argument("make_edge_flags: flag count mismatch");
  OutputDoc doc;
  doc.kind = OutputDoc::Kind::EdgeFlags;
  doc.edges.reserve(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    doc.edges.push_back({g.edges[i].u, g.edges[i].v, answers.flags[i]});
  return doc;
}

OutputDoc make_matrix_output(ExtMatrix m) {
  OutputDoc doc;
  doc.kind = OutputDoc::Kind::Matrix;
  doc.matrix = std::move(m);
  return doc;
}

OutputDoc make_vector_output(std::vector<ExtInt> v) {
  OutputDoc doc;
  doc.kind = OutputDoc::Kind::Vector;
  doc.values = std::move(v);
  return doc;
}

OutputDoc make_bits_output(std::vector<std::uint8_t> bits) {
  OutputDoc doc;
  doc.kind = OutputDoc::Kind::Bits;
  doc.bits = std::move(bits);
  return doc;
}

OutputDoc make_decision_output(bool yes) {
  OutputDoc doc;
  doc.kind = OutputDoc::Kind::Decision;
  doc.decision = yes;
  return doc;
}

}  // namespace redlab
