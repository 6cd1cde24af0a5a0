#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "openbook/graph.hpp"

namespace openbook {

/*
 * Cycles are elements of the lattice generated by the exceptional curves:
 * vertex-indexed integer coefficient vectors bound to their graph. The graph
 * must outlive every cycle bound to it; arithmetic between cycles of
 * different graph instances throws GraphMismatchError.
 *
 * The partial order (leq) is componentwise; cycles also carry a total
 * lexicographic order (lex_less) used only to make enumerations and scan
 * orders deterministic.
 */
class Cycle {
 public:
  Cycle() = default;
  Cycle(const PlumbingGraph& g, std::vector<Int> coefficients);

  static Cycle zero(const PlumbingGraph& g);
  // The reduced cycle E: every coefficient 1.
  static Cycle reduced(const PlumbingGraph& g);
  // The basis cycle E_i.
  static Cycle unit(const PlumbingGraph& g, int vertex);

  const PlumbingGraph& graph() const { return *graph_; }
  bool bound() const { return graph_ != nullptr; }
  int size() const { return static_cast<int>(m_.size()); }
  const Int& operator[](int i) const { return m_[i]; }
  Int& operator[](int i) { return m_[i]; }
  const std::vector<Int>& coefficients() const { return m_; }

  bool is_zero() const;
  bool is_effective() const;  // every coefficient >= 0

  Cycle& operator+=(const Cycle& o);
  Cycle& operator-=(const Cycle& o);
  Cycle& operator*=(const Int& s);
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  friend Cycle operator*(const Int& s, Cycle a) { return a *= s; }
  Cycle operator-() const;

  bool operator==(const Cycle& o) const;

  // Same graph instance; throws GraphMismatchError otherwise.
  void require_same_graph(const Cycle& o) const;

 private:
  const PlumbingGraph* graph_ = nullptr;
  std::vector<Int> m_;
};

// Rational coefficients, exact and reduced. Holds the canonical cycle K.
class RationalCycle {
 public:
  RationalCycle() = default;
  RationalCycle(const PlumbingGraph& g, std::vector<Rational> coefficients);

  static RationalCycle zero(const PlumbingGraph& g);

  const PlumbingGraph& graph() const { return *graph_; }
  int size() const { return static_cast<int>(m_.size()); }
  const Rational& operator[](int i) const { return m_[i]; }
  Rational& operator[](int i) { return m_[i]; }
  const std::vector<Rational>& coefficients() const { return m_; }

  RationalCycle& operator+=(const RationalCycle& o);
  friend RationalCycle operator+(RationalCycle a, const RationalCycle& b) { return a += b; }
  RationalCycle operator-() const;

  bool operator==(const RationalCycle& o) const;

  void require_same_graph(const RationalCycle& o) const;

 private:
  const PlumbingGraph* graph_ = nullptr;
  std::vector<Rational> m_;
};

RationalCycle to_rational(const Cycle& d);

// The intersection pairing a^T M b, exact. Integer for integral operands.
Int pairing(const Cycle& a, const Cycle& b);
Rational pairing(const RationalCycle& a, const RationalCycle& b);
Rational pairing(const Cycle& a, const RationalCycle& b);
Rational pairing(const RationalCycle& a, const Cycle& b);

// (d, E_i) for a single basis cycle; O(valence) per call.
Int vertex_pairing(const Cycle& d, int vertex);

// Componentwise partial order a <= b.
bool leq(const Cycle& a, const Cycle& b);

// Total lexicographic order on coefficient vectors (declaration order).
bool lex_less(const Cycle& a, const Cycle& b);

// Vertices with nonzero coefficient, ascending.
std::vector<int> support(const Cycle& d);

// |D|: the reduced cycle of the support (coefficient 1 on the support).
Cycle support_cycle(const Cycle& d);

// Connected components of the subgraph induced on the support; 0 for the
// zero cycle.
int component_count(const Cycle& d);

// The canonical cycle K: the unique rational solution of
// (K, E_i) = -E_i^2 - 2 for every i, by exact rational elimination.
// Requires a validated graph (negative definite => invertible).
RationalCycle canonical_cycle(const PlumbingGraph& g);

// chi(d) = -1/2 (d, d + K). Integral cycles give integers; a non-integer
// there raises InternalCheckError. The K-taking overloads skip recomputing
// the canonical cycle in hot loops.
Rational euler_char(const RationalCycle& d, const RationalCycle& K);
Int euler_char(const Cycle& d, const RationalCycle& K);
Rational euler_char(const RationalCycle& d);
Int euler_char(const Cycle& d);

// Cycle literal: comma-separated name=integer pairs ("a=2,b=3"); omitted
// vertices get coefficient 0. Throws ParseError on bad syntax or unknown
// names. to_literal emits every vertex in declaration order, so the output
// of one command round-trips as the input of another.
Cycle parse_cycle_literal(const PlumbingGraph& g, std::string_view text);
std::string to_literal(const Cycle& d);
std::string to_literal(const RationalCycle& d);

}  // namespace openbook
