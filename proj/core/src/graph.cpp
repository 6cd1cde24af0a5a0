#include "openbook/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "openbook/errors.hpp"

namespace openbook {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

int PlumbingGraph::add_vertex(const std::string& name, Int euler) {
  if (!valid_name(name))
    throw std::invalid_argument("bad vertex name '" + name + "' (want [A-Za-z0-9_]+)");
  if (index_.count(name)) throw std::invalid_argument("duplicate vertex '" + name + "'");
  int id = size();
  names_.push_back(name);
  euler_.push_back(std::move(euler));
  adj_.emplace_back();
  index_.emplace(names_.back(), id);
  return id;
}

void PlumbingGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= size() || b >= size())
    throw std::invalid_argument("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("self-loop at vertex '" + names_[a] + "'");
  if (has_edge(a, b))
    throw std::invalid_argument("duplicate edge " + names_[a] + " " + names_[b]);
  edges_.emplace_back(a, b);
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

int PlumbingGraph::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

bool PlumbingGraph::has_edge(int a, int b) const {
  const auto& n = adj_.at(a);
  return std::find(n.begin(), n.end(), b) != n.end();
}

bool PlumbingGraph::operator==(const PlumbingGraph& other) const {
  if (names_ != other.names_ || euler_ != other.euler_) return false;
  if (edges_.size() != other.edges_.size()) return false;
  for (auto [a, b] : edges_)
    if (!other.has_edge(a, b)) return false;
  return true;
}

PlumbingGraph parse_graph(std::string_view text) {
  PlumbingGraph g;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::istringstream words{std::string(line)};
    std::string keyword;
    if (!(words >> keyword)) continue;  // blank
    if (keyword[0] == '#') continue;    // comment

    auto fail = [&](const std::string& msg) -> ParseError { return ParseError(line_no, msg); };

    if (keyword == "vertex") {
      std::string name, number, extra;
      if (!(words >> name >> number)) throw fail("expected: vertex <name> <int>");
      if (words >> extra) throw fail("trailing tokens after vertex declaration");
      Int euler;
      if (!parse_int(number, euler)) throw fail("bad integer '" + number + "'");
      try {
        g.add_vertex(name, std::move(euler));
      } catch (const std::invalid_argument& e) {
        throw fail(e.what());
      }
    } else if (keyword == "edge") {
      std::string a, b, extra;
      if (!(words >> a >> b)) throw fail("expected: edge <name> <name>");
      if (words >> extra) throw fail("trailing tokens after edge declaration");
      int ia = g.index_of(a);
      int ib = g.index_of(b);
      if (ia < 0) throw fail("unknown edge endpoint '" + a + "'");
      if (ib < 0) throw fail("unknown edge endpoint '" + b + "'");
      try {
        g.add_edge(ia, ib);
      } catch (const std::invalid_argument& e) {
        throw fail(e.what());
      }
    } else {
      throw fail("unknown directive '" + keyword + "'");
    }
    if (end == text.size()) break;
  }
  return g;
}

std::string serialize_graph(const PlumbingGraph& g) {
  std::string out;
  for (int i = 0; i < g.size(); ++i)
    out += "vertex " + g.name(i) + " " + g.euler(i).str() + "\n";
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(g.edges().size());
  for (auto [a, b] : g.edges()) {
    std::string na = g.name(a), nb = g.name(b);
    if (nb < na) std::swap(na, nb);
    edges.emplace_back(std::move(na), std::move(nb));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) out += "edge " + a + " " + b + "\n";
  return out;
}

IntersectionMatrix intersection_matrix(const PlumbingGraph& g) {
  int n = g.size();
  IntersectionMatrix m;
  m.n = n;
  m.entries.assign(static_cast<size_t>(n) * n, Int(0));
  for (int i = 0; i < n; ++i) m(i, i) = g.euler(i);
  for (auto [a, b] : g.edges()) {
    m(a, b) = 1;
    m(b, a) = 1;
  }
  return m;
}

bool is_tree(const PlumbingGraph& g) {
  int n = g.size();
  if (n == 0) return false;
  if (static_cast<int>(g.edges().size()) != n - 1) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n;
}

DefinitenessCheck check_negative_definite(const PlumbingGraph& g) {
  int n = g.size();
  IntersectionMatrix a = intersection_matrix(g);
  for (Int& e : a.entries) e = -e;  // Sylvester on -M

  DefinitenessCheck result;
  // Bareiss fraction-free elimination: after eliminating column k the pivot
  // a(k,k) equals the leading principal minor of order k+1, so the pivots
  // are exactly the minors the criterion needs, with all divisions exact.
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    const Int pivot = a(k, k);
    if (pivot <= 0) {
      result.negative_definite = false;
      result.failing_order = k + 1;
      result.failing_minor = pivot;
      return result;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;
    prev = pivot;
  }
  result.negative_definite = true;
  return result;
}

GraphValidation validate_graph(const PlumbingGraph& g) {
  GraphValidation v;
  v.tree = is_tree(g);
  v.definiteness = check_negative_definite(g);
  return v;
}

}  // namespace openbook
