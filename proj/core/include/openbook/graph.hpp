#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "openbook/numeric.hpp"

namespace openbook {

/*
 * PlumbingGraph: a vertex-weighted graph describing a resolution of a normal
 * surface singularity. Vertices are the exceptional curves, the weight is the
 * self-intersection number, edges are transverse intersections.
 *
 * Parsing and validation are separate steps. A graph is *valid* when it is a
 * tree and its intersection matrix is negative definite; everything outside
 * this header assumes a validated graph. Vertex order is declaration order
 * and fixes the indexing of all vectors and matrices derived from the graph.
 */
class PlumbingGraph {
 public:
  PlumbingGraph() = default;

  // Throws std::invalid_argument on a malformed or duplicate name.
  int add_vertex(const std::string& name, Int euler);
  // Throws std::invalid_argument on self-loops, duplicates, bad indices.
  void add_edge(int a, int b);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  // -1 when the name is not declared.
  int index_of(std::string_view name) const;
  const Int& euler(int i) const { return euler_.at(i); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int i) const { return adj_.at(i); }
  // Number of incident edges.
  int valence(int i) const { return static_cast<int>(adj_.at(i).size()); }
  bool has_edge(int a, int b) const;

  bool operator==(const PlumbingGraph& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<Int> euler_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::string, int> index_;
};

// Line grammar: blank lines and lines starting with '#' are ignored;
//   vertex <name> <int>
//   edge <name> <name>
// with names matching [A-Za-z0-9_]+ and endpoints declared before use.
// Throws ParseError with the offending 1-based line number.
PlumbingGraph parse_graph(std::string_view text);

// Vertices in declaration order, then edges sorted lexicographically by
// (smaller endpoint, larger endpoint). parse_graph(serialize_graph(g)) == g
// and the emitted text is a fixed point of parse-then-serialize.
std::string serialize_graph(const PlumbingGraph& g);

// Symmetric integer matrix: diagonal = Euler numbers, off-diagonal = 1 for
// an edge, 0 otherwise, rows/columns in vertex declaration order.
struct IntersectionMatrix {
  int n = 0;
  std::vector<Int> entries;  // row-major, n*n

  const Int& operator()(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
  Int& operator()(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
};

IntersectionMatrix intersection_matrix(const PlumbingGraph& g);

// Connected and |edges| == |vertices| - 1. False for the empty graph.
bool is_tree(const PlumbingGraph& g);

// Sylvester criterion outcome for the intersection matrix M: M is negative
// definite iff every leading principal minor of -M is positive. Minors are
// the pivots of a fraction-free (Bareiss) elimination of -M, so the whole
// check runs in exact integer arithmetic. On failure, failing_order is the
// 1-based order of the first nonpositive minor and failing_minor its value.
struct DefinitenessCheck {
  bool negative_definite = false;
  int failing_order = 0;
  Int failing_minor = 0;
};

DefinitenessCheck check_negative_definite(const PlumbingGraph& g);

struct GraphValidation {
  bool tree = false;
  DefinitenessCheck definiteness;

  bool ok() const { return tree && definiteness.negative_definite; }
};

GraphValidation validate_graph(const PlumbingGraph& g);

}  // namespace openbook
