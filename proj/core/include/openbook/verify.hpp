#pragma once

#include <optional>
#include <string>
#include <vector>

#include "openbook/cycle.hpp"

namespace openbook {

/*
 * Exhaustive desk-scale verification of the identities and inequalities the
 * invariants are proved to satisfy. Every check scans a deterministic range:
 *
 *   box        = all cycles with coefficients in [0, bound], lexicographic;
 *   antinef    = nonzero anti-nef cycles in the box, plus Z_min appended
 *                when it lies outside the box;
 *   pair scans = (Z, D) with Z anti-nef and Z + D in the box, or (A, B)
 *                with A, B, A + B all in the box.
 *
 * A failing property means a bug in this library, not a mathematical
 * discovery: every checked statement is a theorem for validated graphs.
 * Scans stop at the first violation, which is therefore the
 * lexicographically first one; `instances` counts the cases examined.
 */

struct Counterexample {
  std::vector<Cycle> cycles;  // the cycle(s) violating the property
  std::string relation;
  std::string lhs;  // both sides of the violated (in)equality, exact
  std::string rhs;
};

struct PropertyRecord {
  std::string name;
  long long instances = 0;
  bool ok = true;
  std::optional<Counterexample> counterexample;
};

struct VerificationReport {
  std::string graph;
  int bound = 0;
  std::vector<PropertyRecord> properties;
  double seconds = 0.0;

  bool all_ok() const;
};

// g(D) >= 0 over the box.                              -> virtual_genus_nonneg
std::vector<PropertyRecord> verify_positivity(const PlumbingGraph& g, int bound);

// g(Z+D) >= g(Z) and the pairwise corollary Z1 <= Z2 => g(Z1) <= g(Z2).
//                            -> genus_monotone, genus_monotone_pairs
std::vector<PropertyRecord> verify_genus_monotone(const PlumbingGraph& g, int bound);

// chi(-D) >= 0; mu(D) >= g(D) >= 0; mu(Z+D) >= mu(Z).
//                            -> chi_neg_nonneg, mu_ge_genus, mu_monotone
std::vector<PropertyRecord> verify_mu_theorem(const PlumbingGraph& g, int bound);

// Exact identities: mu = 2g - 1 + beta; mu = g + chi(-Z); the A'Campo sum;
// chi additivity, reflection and evenness; g >= 1 - chi(Z); the virtual
// invariants extending the open-book ones; beta/g/mu sign bounds; and the
// contact relation norm - bn = 2 sg - 2 (once per graph).
std::vector<PropertyRecord> verify_identities(const PlumbingGraph& g, int bound);

// Cone facts: nonzero anti-nef implies Z >= E; Z_min is anti-nef and below
// every enumerated element; tie-break independence of compute_zmin.
std::vector<PropertyRecord> verify_cone_invariants(const PlumbingGraph& g, int bound);

// All of the above in a fixed order with wall-clock timing.
VerificationReport run_suite(const PlumbingGraph& g, int bound, std::string graph_label = {});

// Scan-size heuristic for the CLI's override guard: the box scans plus the
// additivity pair scan. Monotonicity pair counts depend on the anti-nef set
// and are not included.
Int estimated_instances(const PlumbingGraph& g, int bound);

}  // namespace openbook
