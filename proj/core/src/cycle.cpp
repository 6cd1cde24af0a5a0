#include "openbook/cycle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "openbook/errors.hpp"

namespace openbook {

Cycle::Cycle(const PlumbingGraph& g, std::vector<Int> coefficients)
    : graph_(&g), m_(std::move(coefficients)) {
  if (static_cast<int>(m_.size()) != g.size())
    throw std::invalid_argument("coefficient count does not match vertex count");
}

Cycle Cycle::zero(const PlumbingGraph& g) {
  return Cycle(g, std::vector<Int>(g.size(), Int(0)));
}

Cycle Cycle::reduced(const PlumbingGraph& g) {
  return Cycle(g, std::vector<Int>(g.size(), Int(1)));
}

Cycle Cycle::unit(const PlumbingGraph& g, int vertex) {
  Cycle c = zero(g);
  c.m_.at(vertex) = 1;
  return c;
}

bool Cycle::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](const Int& v) { return v == 0; });
}

bool Cycle::is_effective() const {
  return std::all_of(m_.begin(), m_.end(), [](const Int& v) { return v >= 0; });
}

void Cycle::require_same_graph(const Cycle& o) const {
  if (graph_ != o.graph_)
    throw GraphMismatchError("cycles belong to different graphs");
}

Cycle& Cycle::operator+=(const Cycle& o) {
  require_same_graph(o);
  for (size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

Cycle& Cycle::operator-=(const Cycle& o) {
  require_same_graph(o);
  for (size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
  return *this;
}

Cycle& Cycle::operator*=(const Int& s) {
  for (Int& v : m_) v *= s;
  return *this;
}

Cycle Cycle::operator-() const {
  Cycle c = *this;
  for (Int& v : c.m_) v = -v;
  return c;
}

bool Cycle::operator==(const Cycle& o) const {
  return graph_ == o.graph_ && m_ == o.m_;
}

RationalCycle::RationalCycle(const PlumbingGraph& g, std::vector<Rational> coefficients)
    : graph_(&g), m_(std::move(coefficients)) {
  if (static_cast<int>(m_.size()) != g.size())
    throw std::invalid_argument("coefficient count does not match vertex count");
}

RationalCycle RationalCycle::zero(const PlumbingGraph& g) {
  return RationalCycle(g, std::vector<Rational>(g.size(), Rational(0)));
}

void RationalCycle::require_same_graph(const RationalCycle& o) const {
  if (graph_ != o.graph_)
    throw GraphMismatchError("cycles belong to different graphs");
}

RationalCycle& RationalCycle::operator+=(const RationalCycle& o) {
  require_same_graph(o);
  for (size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

RationalCycle RationalCycle::operator-() const {
  RationalCycle c = *this;
  for (Rational& v : c.m_) v = -v;
  return c;
}

bool RationalCycle::operator==(const RationalCycle& o) const {
  return graph_ == o.graph_ && m_ == o.m_;
}

RationalCycle to_rational(const Cycle& d) {
  std::vector<Rational> coeffs;
  coeffs.reserve(d.size());
  for (const Int& v : d.coefficients()) coeffs.emplace_back(v);
  return RationalCycle(d.graph(), std::move(coeffs));
}

namespace {

// a^T M b over the edge list: diagonal terms plus one cross term per edge.
template <typename A, typename B, typename R>
R pairing_impl(const A& a, const B& b) {
  const PlumbingGraph& g = a.graph();
  R total = 0;
  for (int i = 0; i < g.size(); ++i) total += R(g.euler(i)) * R(a[i]) * R(b[i]);
  for (auto [i, j] : g.edges()) total += R(a[i]) * R(b[j]) + R(a[j]) * R(b[i]);
  return total;
}

}  // namespace

Int pairing(const Cycle& a, const Cycle& b) {
  a.require_same_graph(b);
  return pairing_impl<Cycle, Cycle, Int>(a, b);
}

Rational pairing(const RationalCycle& a, const RationalCycle& b) {
  a.require_same_graph(b);
  return pairing_impl<RationalCycle, RationalCycle, Rational>(a, b);
}

Rational pairing(const Cycle& a, const RationalCycle& b) {
  return pairing(to_rational(a), b);
}

Rational pairing(const RationalCycle& a, const Cycle& b) {
  return pairing(a, to_rational(b));
}

Int vertex_pairing(const Cycle& d, int vertex) {
  const PlumbingGraph& g = d.graph();
  Int total = g.euler(vertex) * d[vertex];
  for (int j : g.neighbors(vertex)) total += d[j];
  return total;
}

bool leq(const Cycle& a, const Cycle& b) {
  a.require_same_graph(b);
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool lex_less(const Cycle& a, const Cycle& b) {
  a.require_same_graph(b);
  return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(),
                                      b.coefficients().begin(), b.coefficients().end());
}

std::vector<int> support(const Cycle& d) {
  std::vector<int> out;
  for (int i = 0; i < d.size(); ++i)
    if (d[i] != 0) out.push_back(i);
  return out;
}

Cycle support_cycle(const Cycle& d) {
  Cycle s = Cycle::zero(d.graph());
  for (int i = 0; i < d.size(); ++i)
    if (d[i] != 0) s[i] = 1;
  return s;
}

int component_count(const Cycle& d) {
  const PlumbingGraph& g = d.graph();
  std::vector<char> in_support(g.size(), 0);
  for (int i = 0; i < d.size(); ++i) in_support[i] = d[i] != 0;
  std::vector<char> seen(g.size(), 0);
  int components = 0;
  std::vector<int> stack;
  for (int i = 0; i < g.size(); ++i) {
    if (!in_support[i] || seen[i]) continue;
    ++components;
    seen[i] = 1;
    stack.assign(1, i);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (in_support[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

RationalCycle canonical_cycle(const PlumbingGraph& g) {
  // Solve M k = rhs with rhs_i = -E_i^2 - 2 by exact Gaussian elimination.
  // M is negative definite for validated graphs, hence invertible.
  const int n = g.size();
  IntersectionMatrix m = intersection_matrix(g);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n] = Rational(-g.euler(i) - 2);
  }

  for (int col = 0; col < n; ++col) {
    int pivot_row = -1;
    for (int r = col; r < n; ++r) {
      if (a[r][col] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0)
      throw std::invalid_argument("intersection matrix is singular; graph not validated");
    std::swap(a[col], a[pivot_row]);
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }

  std::vector<Rational> k(n);
  for (int i = n - 1; i >= 0; --i) {
    Rational sum = a[i][n];
    for (int j = i + 1; j < n; ++j) sum -= a[i][j] * k[j];
    k[i] = sum / a[i][i];
  }
  return RationalCycle(g, std::move(k));
}

Rational euler_char(const RationalCycle& d, const RationalCycle& K) {
  return -pairing(d, d + K) / 2;
}

Int euler_char(const Cycle& d, const RationalCycle& K) {
  Rational chi = euler_char(to_rational(d), K);
  if (denominator(chi) != 1)
    throw InternalCheckError("chi of the integral cycle " + to_literal(d) +
                             " is not an integer: " + to_string(chi));
  return numerator(chi);
}

Rational euler_char(const RationalCycle& d) {
  return euler_char(d, canonical_cycle(d.graph()));
}

Int euler_char(const Cycle& d) {
  return euler_char(d, canonical_cycle(d.graph()));
}

Cycle parse_cycle_literal(const PlumbingGraph& g, std::string_view text) {
  if (text.empty()) throw ParseError("empty cycle literal");
  Cycle c = Cycle::zero(g);
  std::vector<char> assigned(g.size(), 0);
  size_t start = 0;
  while (true) {
    size_t end = text.find(',', start);
    bool last = end == std::string_view::npos;
    if (last) end = text.size();
    std::string_view item = text.substr(start, end - start);
    size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("bad cycle entry '" + std::string(item) + "' (want name=integer)");
    std::string name(item.substr(0, eq));
    int idx = g.index_of(name);
    if (idx < 0) throw ParseError("unknown vertex '" + name + "' in cycle literal");
    if (assigned[idx]) throw ParseError("vertex '" + name + "' assigned twice");
    Int value;
    if (!parse_int(item.substr(eq + 1), value))
      throw ParseError("bad integer '" + std::string(item.substr(eq + 1)) + "' for vertex '" +
                       name + "'");
    c[idx] = std::move(value);
    assigned[idx] = 1;
    if (last) break;
    start = end + 1;
  }
  return c;
}

std::string to_literal(const Cycle& d) {
  std::string out;
  for (int i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += d.graph().name(i) + "=" + d[i].str();
  }
  return out;
}

std::string to_literal(const RationalCycle& d) {
  std::string out;
  for (int i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += d.graph().name(i) + "=" + to_string(d[i]);
  }
  return out;
}

}  // namespace openbook
