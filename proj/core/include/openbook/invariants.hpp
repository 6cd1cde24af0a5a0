#pragma once

#include <vector>

#include "openbook/cycle.hpp"

namespace openbook {

/*
 * Numeric invariants of the Milnor open book attached to a nonzero anti-nef
 * cycle Z, plus their "virtual" extensions to arbitrary effective cycles.
 *
 * The open-book operations (binding_count, binding_vector, ob_genus,
 * milnor_number, acampo_check, genus_lower_bound_check) require a nonzero
 * anti-nef cycle and throw NotAntiNefError otherwise; the virtual_* variants
 * accept any effective cycle and throw NotEffectiveError on a negative
 * coefficient. The K-taking overloads avoid re-solving for the canonical
 * cycle inside scans.
 */

// beta(Z) = -(Z, E) >= 1: the number of binding components.
Int binding_count(const Cycle& z);

// k_i = -(Z, E_i) >= 0 per vertex; sums to binding_count(z).
std::vector<Int> binding_vector(const Cycle& z);

// Page genus g(Z) = 1 + (Z, E) + chi(-Z) >= 0.
Int ob_genus(const Cycle& z);
Int ob_genus(const Cycle& z, const RationalCycle& K);

// Virtual genus g(D) = #(D) + (D, |D|) + chi(-D) for effective D; agrees
// with ob_genus on nonzero anti-nef cycles and satisfies g(D) >= 0.
Int virtual_genus(const Cycle& d);
Int virtual_genus(const Cycle& d, const RationalCycle& K);

// Milnor number mu(Z) = 1 + (Z, E) + 2 chi(-Z), the first Betti number of
// the page; equals 2 g(Z) - 1 + beta(Z).
Int milnor_number(const Cycle& z);
Int milnor_number(const Cycle& z, const RationalCycle& K);

// Virtual Milnor number mu(D) = g(D) + chi(-D) for effective D.
Int virtual_milnor(const Cycle& d);
Int virtual_milnor(const Cycle& d, const RationalCycle& K);

// A'Campo identity: 1 - mu(Z) == sum_i (2 - nu_i - k_i) m_i. Holds for every
// nonzero anti-nef cycle; returning false signals a bug.
bool acampo_check(const Cycle& z);

// g(Z) >= 1 - chi(Z). Holds for every nonzero anti-nef cycle.
bool genus_lower_bound_check(const Cycle& z);

struct OpenBookReport {
  Cycle cycle;
  bool antinef = false;
  Int beta = 0;
  Int genus = 0;
  Int milnor = 0;
  Int chi_minus = 0;           // chi(-Z)
  std::vector<Int> binding;    // k_i per vertex, declaration order
};

OpenBookReport open_book_report(const Cycle& z);

// Invariants of the canonical contact structure of the link, computed from
// the fundamental cycle: sg = g(Z_min), bn = beta(Z_min),
// norm = mu(Z_min) - 1. The graph is rational iff chi(Z_min) == 1 and
// minimal iff additionally Z_min == E.
struct ContactReport {
  Int sg = 0;
  Int bn = 0;
  Int norm = 0;
  bool rational = false;
  bool minimal = false;
  Cycle zmin;
};

ContactReport contact_invariants(const PlumbingGraph& g);

// Minimizers of mu and beta over the genus stratum within the bound box.
// mu - beta = 2 genus - 1 is constant on the stratum, so the two argmin
// sets coincide; both are reported (in lexicographic order) so any extra
// minimizer would be visible.
struct StratumMinimizers {
  bool empty = true;  // no stratum elements within the bound
  Int min_mu = 0;
  Int min_beta = 0;
  std::vector<Cycle> mu_argmin;
  std::vector<Cycle> beta_argmin;
};

StratumMinimizers stratum_minimizers(const PlumbingGraph& g, int bound, const Int& genus);

}  // namespace openbook
