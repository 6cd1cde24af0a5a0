#include "openbook/cone.hpp"

#include <stdexcept>

#include "openbook/errors.hpp"
#include "openbook/invariants.hpp"

namespace openbook {

bool is_antinef(const Cycle& d) {
  for (int i = 0; i < d.size(); ++i)
    if (vertex_pairing(d, i) > 0) return false;
  return true;
}

Cycle compute_zmin(const PlumbingGraph& g, TieBreak tie_break) {
  if (g.size() == 0) throw std::invalid_argument("empty graph has no fundamental cycle");
  Cycle z = Cycle::reduced(g);
  const int n = g.size();
  // t[i] = (Z, E_i), maintained incrementally: adding E_j shifts t by column
  // j of the intersection matrix.
  std::vector<Int> t(n);
  for (int i = 0; i < n; ++i) t[i] = vertex_pairing(z, i);

  // Terminates iff the form is negative definite; the guard turns a caller
  // error (unvalidated graph) into a diagnosis instead of a hang.
  const long long step_guard = 10'000'000;
  long long steps = 0;
  while (true) {
    int pick = -1;
    if (tie_break == TieBreak::LowestIndex) {
      for (int i = 0; i < n; ++i)
        if (t[i] > 0) {
          pick = i;
          break;
        }
    } else {
      for (int i = n - 1; i >= 0; --i)
        if (t[i] > 0) {
          pick = i;
          break;
        }
    }
    if (pick < 0) break;
    if (++steps > step_guard)
      throw std::invalid_argument(
          "fundamental cycle iteration did not terminate; graph is not negative definite");
    z[pick] += 1;
    t[pick] += g.euler(pick);
    for (int j : g.neighbors(pick)) t[j] += 1;
  }
  return z;
}

namespace {

// Advances coefficients through [0, bound]^n in lexicographic order, last
// coordinate fastest. Returns false once the range is exhausted.
bool next_in_box(std::vector<Int>& m, int bound) {
  for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
    if (m[i] < bound) {
      ++m[i];
      for (size_t j = i + 1; j < m.size(); ++j) m[j] = 0;
      return true;
    }
  }
  return false;
}

}  // namespace

ConeEnumeration enumerate_cone(const PlumbingGraph& g, int bound) {
  if (bound <= 0) throw std::invalid_argument("enumeration bound must be positive");
  if (g.size() == 0) throw std::invalid_argument("empty graph");
  ConeEnumeration out;
  out.bound = bound;
  std::vector<Int> m(g.size(), Int(0));
  do {
    Cycle d(g, m);
    if (!d.is_zero() && is_antinef(d)) out.elements.push_back(std::move(d));
  } while (next_in_box(m, bound));
  return out;
}

std::vector<Cycle> genus_stratum(const PlumbingGraph& g, int bound, const Int& genus) {
  ConeEnumeration cone = enumerate_cone(g, bound);
  RationalCycle K = canonical_cycle(g);
  std::vector<Cycle> out;
  for (Cycle& z : cone.elements)
    if (ob_genus(z, K) == genus) out.push_back(std::move(z));
  return out;
}

}  // namespace openbook
