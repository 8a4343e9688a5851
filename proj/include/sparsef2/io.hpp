#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sparsef2/bitmat.hpp"
#include "sparsef2/codes.hpp"
#include "sparsef2/graph.hpp"
#include "sparsef2/instances.hpp"

namespace sparsef2::io {

// Text formats. Lines starting with '#' are provenance: parsers collect them,
// emitters write them first. Blank lines are ignored.
//
//   graph        "n m", then m lines "u v" (1-based)
//   matrix       "rows cols", then one line of cols '0'/'1' characters per row
//   code         "generator" or "parity_check", then a matrix
//   vectorsum    matrix, then "b <bits>" and "k <int>"
//   evenset      matrix, then "k <int>"
//   pointvalues  "m n", then m lines "<n bits> <bit>"; optional "k", "eps", "delta" lines
//   points       "m n", then m lines of n bits
enum class Kind { kGraph, kMatrix, kCode, kVectorSum, kEvenSet, kPointValues, kPoints };

Kind parse_kind(std::string_view name);
std::string kind_name(Kind kind);

struct Matrix {
  BitMat m;
  Provenance provenance;
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.m == b.m; }
};
struct GraphFile {
  Graph graph;
  Provenance provenance;
  friend bool operator==(const GraphFile& a, const GraphFile& b) { return a.graph == b.graph; }
};
struct CodeFile {
  bool is_generator = true;
  BitMat m;
  Provenance provenance;
  friend bool operator==(const CodeFile& a, const CodeFile& b) {
    return a.is_generator == b.is_generator && a.m == b.m;
  }
  LinearCode to_code() const;
};
struct PointsFile {
  std::size_t dim = 0;
  std::vector<BitVec> points;
  Provenance provenance;
  friend bool operator==(const PointsFile& a, const PointsFile& b) { return a.dim == b.dim && a.points == b.points; }
};

using Instance = std::variant<GraphFile, Matrix, CodeFile, VectorSumInstance, EvenSetInstance, PointValueSet, PointsFile>;

GraphFile parse_graph(std::string_view text);
Matrix parse_matrix(std::string_view text);
CodeFile parse_code(std::string_view text);
VectorSumInstance parse_vectorsum(std::string_view text);
EvenSetInstance parse_evenset(std::string_view text);
PointValueSet parse_pointvalues(std::string_view text);
PointsFile parse_points(std::string_view text);
Instance parse_instance(std::string_view text, Kind kind);

std::string emit(const GraphFile& g);
std::string emit(const Matrix& m);
std::string emit(const CodeFile& c);
std::string emit(const VectorSumInstance& v);
std::string emit(const EvenSetInstance& e);
std::string emit(const PointValueSet& pv);
std::string emit(const PointsFile& p);
std::string emit_instance(const Instance& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace sparsef2::io
