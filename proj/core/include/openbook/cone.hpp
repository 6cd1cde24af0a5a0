#pragma once

#include <vector>

#include "openbook/cycle.hpp"

namespace openbook {

// Membership in the Lipman cone: (d, E_i) <= 0 for every vertex i.
bool is_antinef(const Cycle& d);

enum class TieBreak { LowestIndex, HighestIndex };

// Laufer's algorithm for the fundamental cycle: start at Z = E and, while
// some vertex has (Z, E_i) > 0, add that E_i. The qualifying vertex is
// chosen by declaration index according to the tie-break; the result is the
// unique minimal nonzero anti-nef cycle either way. Requires a validated
// graph; termination is guaranteed by negative definiteness.
Cycle compute_zmin(const PlumbingGraph& g, TieBreak tie_break = TieBreak::LowestIndex);

// All nonzero anti-nef cycles with every coefficient in [0, bound], in
// lexicographic order.
struct ConeEnumeration {
  int bound = 0;
  std::vector<Cycle> elements;
};

// Throws std::invalid_argument when bound <= 0.
ConeEnumeration enumerate_cone(const PlumbingGraph& g, int bound);

// Elements of enumerate_cone(g, bound) whose page genus equals the given
// value. Only the stratum inside the bound box; never a completeness claim.
std::vector<Cycle> genus_stratum(const PlumbingGraph& g, int bound, const Int& genus);

}  // namespace openbook
