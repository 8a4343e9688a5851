#include "sparsef2/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "sparsef2/errors.hpp"

namespace sparsef2::io {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

// Splits text into non-blank, non-comment lines; comments become provenance.
class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      std::string_view raw = text.substr(pos, end - pos);
      ++number;
      pos = end + 1;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (!raw.empty() && raw.front() == '#') {
        raw.remove_prefix(1);
        if (!raw.empty() && raw.front() == ' ') raw.remove_prefix(1);
        provenance_.emplace_back(raw);
        continue;
      }
      Line line{number, split(raw)};
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
      if (end == text.size()) break;
    }
    last_line_ = number;
  }

  bool done() const { return next_ == lines_.size(); }
  const Line& next(const char* expecting) {
    if (done()) throw ParseError(std::string("unexpected end of input, expected ") + expecting, last_line_);
    return lines_[next_++];
  }
  const Line* peek() const { return done() ? nullptr : &lines_[next_]; }
  void expect_end() const {
    if (!done()) throw ParseError("unexpected trailing content", lines_[next_].number);
  }
  Provenance take_provenance() { return std::move(provenance_); }

 private:
  static std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
      if (j > i) out.push_back(s.substr(i, j - i));
      i = j;
    }
    return out;
  }

  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 0;
  Provenance provenance_;
};

std::size_t to_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + std::string(tok) + "'",
                     line);
  }
  return value;
}

double to_real(std::string_view tok, std::size_t line, const char* what) {
  const std::string s(tok);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ParseError(std::string("expected a number for ") + what + ", got '" + s + "'", line);
  }
  return v;
}

BitVec to_bits(std::string_view tok, std::size_t expected, std::size_t line, const char* what) {
  if (tok.size() != expected) {
    throw ParseError(std::string(what) + " has " + std::to_string(tok.size()) + " bits, expected " +
                         std::to_string(expected),
                     line);
  }
  for (char c : tok) {
    if (c != '0' && c != '1') throw ParseError(std::string(what) + " contains a character other than 0/1", line);
  }
  return BitVec::from_string(tok);
}

void expect_tokens(const Line& line, std::size_t n, const char* what) {
  if (line.tokens.size() != n) {
    throw ParseError(std::string("expected ") + std::to_string(n) + " field(s) for " + what + ", got " +
                         std::to_string(line.tokens.size()),
                     line.number);
  }
}

BitMat read_matrix(Reader& in) {
  const Line& header = in.next("matrix header 'rows cols'");
  expect_tokens(header, 2, "matrix header");
  const std::size_t rows = to_count(header.tokens[0], header.number, "rows");
  const std::size_t cols = to_count(header.tokens[1], header.number, "cols");
  if (rows > 0 && cols == 0) throw ParseError("a matrix with rows needs at least one column", header.number);
  BitMat m(0, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = in.next("matrix row");
    expect_tokens(line, 1, "matrix row");
    m.append_row(to_bits(line.tokens[0], cols, line.number, "matrix row"));
  }
  return m;
}

// "key value" lines after the body.
std::optional<std::string_view> read_key(Reader& in, std::string_view key, std::size_t& line_no) {
  const Line* line = in.peek();
  if (!line || line->tokens.front() != key) return std::nullopt;
  line_no = line->number;
  if (line->tokens.size() > 2) throw ParseError(std::string(key) + " line has extra fields", line->number);
  const std::string_view value = line->tokens.size() == 2 ? line->tokens[1] : std::string_view();
  in.next("key");
  return value;
}

std::string bits(const BitVec& v) { return v.to_string(); }

std::string real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void put_provenance(std::ostringstream& out, const Provenance& p) {
  for (const auto& line : p) out << "# " << line << '\n';
}

void put_matrix(std::ostringstream& out, const BitMat& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& row : m.row_list()) out << bits(row) << '\n';
}

}  // namespace

Kind parse_kind(std::string_view name) {
  if (name == "graph") return Kind::kGraph;
  if (name == "matrix") return Kind::kMatrix;
  if (name == "code") return Kind::kCode;
  if (name == "vectorsum") return Kind::kVectorSum;
  if (name == "evenset") return Kind::kEvenSet;
  if (name == "pointvalues") return Kind::kPointValues;
  if (name == "points") return Kind::kPoints;
  throw InputError("unknown instance kind '" + std::string(name) + "'");
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::kGraph: return "graph";
    case Kind::kMatrix: return "matrix";
    case Kind::kCode: return "code";
    case Kind::kVectorSum: return "vectorsum";
    case Kind::kEvenSet: return "evenset";
    case Kind::kPointValues: return "pointvalues";
    case Kind::kPoints: return "points";
  }
  return "?";
}

LinearCode CodeFile::to_code() const {
  return is_generator ? LinearCode::from_generator(m) : LinearCode::from_parity_check(m);
}

GraphFile parse_graph(std::string_view text) {
  Reader in(text);
  const Line& header = in.next("graph header 'n m'");
  expect_tokens(header, 2, "graph header");
  const std::size_t n = to_count(header.tokens[0], header.number, "n");
  const std::size_t m = to_count(header.tokens[1], header.number, "m");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const Line& line = in.next("edge 'u v'");
    expect_tokens(line, 2, "edge");
    const std::size_t u = to_count(line.tokens[0], line.number, "u");
    const std::size_t v = to_count(line.tokens[1], line.number, "v");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError("edge endpoint outside [1," + std::to_string(n) + "]", line.number);
    }
    edges.emplace_back(u, v);
  }
  in.expect_end();
  return GraphFile{Graph(n, edges), in.take_provenance()};
}

Matrix parse_matrix(std::string_view text) {
  Reader in(text);
  BitMat m = read_matrix(in);
  in.expect_end();
  return Matrix{std::move(m), in.take_provenance()};
}

CodeFile parse_code(std::string_view text) {
  Reader in(text);
  const Line& header = in.next("'generator' or 'parity_check'");
  expect_tokens(header, 1, "code header");
  CodeFile c;
  if (header.tokens[0] == "generator") {
    c.is_generator = true;
  } else if (header.tokens[0] == "parity_check") {
    c.is_generator = false;
  } else {
    throw ParseError("code header must be 'generator' or 'parity_check'", header.number);
  }
  c.m = read_matrix(in);
  in.expect_end();
  c.provenance = in.take_provenance();
  return c;
}

VectorSumInstance parse_vectorsum(std::string_view text) {
  Reader in(text);
  VectorSumInstance v;
  v.m = read_matrix(in);
  std::size_t line_no = 0;
  const auto b = read_key(in, "b", line_no);
  if (!b) {
    const Line* next = in.peek();
    throw ParseError("expected 'b <bits>'", next ? next->number : 0);
  }
  v.b = to_bits(*b, v.m.rows(), line_no, "b");
  const auto k = read_key(in, "k", line_no);
  if (!k) {
    const Line* next = in.peek();
    throw ParseError("expected 'k <int>'", next ? next->number : 0);
  }
  v.k = to_count(*k, line_no, "k");
  in.expect_end();
  v.provenance = in.take_provenance();
  v.validate();
  return v;
}

EvenSetInstance parse_evenset(std::string_view text) {
  Reader in(text);
  EvenSetInstance e;
  e.m = read_matrix(in);
  std::size_t line_no = 0;
  const auto k = read_key(in, "k", line_no);
  if (!k) {
    const Line* next = in.peek();
    throw ParseError("expected 'k <int>'", next ? next->number : 0);
  }
  e.k = to_count(*k, line_no, "k");
  in.expect_end();
  e.provenance = in.take_provenance();
  e.validate();
  return e;
}

PointValueSet parse_pointvalues(std::string_view text) {
  Reader in(text);
  const Line& header = in.next("header 'm n'");
  expect_tokens(header, 2, "point-value header");
  const std::size_t m = to_count(header.tokens[0], header.number, "m");
  PointValueSet pv;
  pv.dim = to_count(header.tokens[1], header.number, "n");
  for (std::size_t i = 0; i < m; ++i) {
    const Line& line = in.next("'<bits> <bit>'");
    std::string_view point;
    std::string_view value;
    if (pv.dim == 0 && line.tokens.size() == 1) {
      value = line.tokens[0];
    } else {
      expect_tokens(line, 2, "point-value pair");
      point = line.tokens[0];
      value = line.tokens[1];
    }
    pv.points.push_back(to_bits(point, pv.dim, line.number, "point"));
    if (value != "0" && value != "1") throw ParseError("value must be 0 or 1", line.number);
    pv.values.push_back(value == "1" ? 1 : 0);
  }
  while (!in.done()) {
    const Line& line = in.next("metadata");
    expect_tokens(line, 2, "metadata");
    const auto key = line.tokens[0];
    if (key == "k" && !pv.k) {
      pv.k = to_count(line.tokens[1], line.number, "k");
    } else if (key == "eps" && !pv.eps) {
      pv.eps = to_real(line.tokens[1], line.number, "eps");
    } else if (key == "delta" && !pv.delta) {
      pv.delta = to_real(line.tokens[1], line.number, "delta");
    } else {
      throw ParseError("unexpected metadata key '" + std::string(key) + "'", line.number);
    }
  }
  pv.provenance = in.take_provenance();
  pv.validate();
  return pv;
}

PointsFile parse_points(std::string_view text) {
  Reader in(text);
  const Line& header = in.next("header 'm n'");
  expect_tokens(header, 2, "points header");
  const std::size_t m = to_count(header.tokens[0], header.number, "m");
  PointsFile p;
  p.dim = to_count(header.tokens[1], header.number, "n");
  if (m > 0 && p.dim == 0) throw ParseError("points need at least one coordinate", header.number);
  for (std::size_t i = 0; i < m; ++i) {
    const Line& line = in.next("point");
    expect_tokens(line, 1, "point");
    p.points.push_back(to_bits(line.tokens[0], p.dim, line.number, "point"));
  }
  in.expect_end();
  p.provenance = in.take_provenance();
  return p;
}

Instance parse_instance(std::string_view text, Kind kind) {
  switch (kind) {
    case Kind::kGraph: return parse_graph(text);
    case Kind::kMatrix: return parse_matrix(text);
    case Kind::kCode: return parse_code(text);
    case Kind::kVectorSum: return parse_vectorsum(text);
    case Kind::kEvenSet: return parse_evenset(text);
    case Kind::kPointValues: return parse_pointvalues(text);
    case Kind::kPoints: return parse_points(text);
  }
  throw InputError("unknown instance kind");
}

std::string emit(const GraphFile& g) {
  std::ostringstream out;
  put_provenance(out, g.provenance);
  out << g.graph.vertex_count() << ' ' << g.graph.edge_count() << '\n';
  for (const auto& [u, v] : g.graph.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string emit(const Matrix& m) {
  std::ostringstream out;
  put_provenance(out, m.provenance);
  put_matrix(out, m.m);
  return out.str();
}

std::string emit(const CodeFile& c) {
  std::ostringstream out;
  put_provenance(out, c.provenance);
  out << (c.is_generator ? "generator" : "parity_check") << '\n';
  put_matrix(out, c.m);
  return out.str();
}

std::string emit(const VectorSumInstance& v) {
  std::ostringstream out;
  put_provenance(out, v.provenance);
  put_matrix(out, v.m);
  out << "b " << bits(v.b) << '\n' << "k " << v.k << '\n';
  return out.str();
}

std::string emit(const EvenSetInstance& e) {
  std::ostringstream out;
  put_provenance(out, e.provenance);
  put_matrix(out, e.m);
  out << "k " << e.k << '\n';
  return out.str();
}

std::string emit(const PointValueSet& pv) {
  std::ostringstream out;
  put_provenance(out, pv.provenance);
  out << pv.size() << ' ' << pv.dim << '\n';
  for (std::size_t i = 0; i < pv.size(); ++i) {
    out << bits(pv.points[i]) << ' ' << static_cast<int>(pv.values[i]) << '\n';
  }
  if (pv.k) out << "k " << *pv.k << '\n';
  if (pv.eps) out << "eps " << real(*pv.eps) << '\n';
  if (pv.delta) out << "delta " << real(*pv.delta) << '\n';
  return out.str();
}

std::string emit(const PointsFile& p) {
  std::ostringstream out;
  put_provenance(out, p.provenance);
  out << p.points.size() << ' ' << p.dim << '\n';
  for (const auto& z : p.points) out << bits(z) << '\n';
  return out.str();
}

std::string emit_instance(const Instance& inst) {
  return std::visit([](const auto& x) { return emit(x); }, inst);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("write to '" + path + "' failed");
}

}  // namespace sparsef2::io
