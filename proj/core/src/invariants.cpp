#include "openbook/invariants.hpp"

#include <utility>

#include "openbook/cone.hpp"
#include "openbook/errors.hpp"

namespace openbook {

namespace {

void require_nonzero_antinef(const Cycle& z) {
  if (z.is_zero()) throw NotAntiNefError("cycle is zero; no open book attached");
  if (!is_antinef(z))
    throw NotAntiNefError("cycle " + to_literal(z) + " is not anti-nef");
}

void require_effective(const Cycle& d) {
  if (!d.is_effective())
    throw NotEffectiveError("cycle " + to_literal(d) + " has a negative coefficient");
}

}  // namespace

Int binding_count(const Cycle& z) {
  require_nonzero_antinef(z);
  Int beta = -pairing(z, Cycle::reduced(z.graph()));
  if (beta < 1)
    throw InternalCheckError("binding count of " + to_literal(z) + " is " + beta.str());
  return beta;
}

std::vector<Int> binding_vector(const Cycle& z) {
  require_nonzero_antinef(z);
  std::vector<Int> k(z.size());
  for (int i = 0; i < z.size(); ++i) k[i] = -vertex_pairing(z, i);
  return k;
}

Int ob_genus(const Cycle& z, const RationalCycle& K) {
  require_nonzero_antinef(z);
  Int g = 1 + pairing(z, Cycle::reduced(z.graph())) + euler_char(-z, K);
  if (g < 0) throw InternalCheckError("page genus of " + to_literal(z) + " is " + g.str());
  return g;
}

Int ob_genus(const Cycle& z) { return ob_genus(z, canonical_cycle(z.graph())); }

Int virtual_genus(const Cycle& d, const RationalCycle& K) {
  require_effective(d);
  return component_count(d) + pairing(d, support_cycle(d)) + euler_char(-d, K);
}

Int virtual_genus(const Cycle& d) { return virtual_genus(d, canonical_cycle(d.graph())); }

Int milnor_number(const Cycle& z, const RationalCycle& K) {
  require_nonzero_antinef(z);
  Int mu = 1 + pairing(z, Cycle::reduced(z.graph())) + 2 * euler_char(-z, K);
  if (mu < 0) throw InternalCheckError("Milnor number of " + to_literal(z) + " is " + mu.str());
  return mu;
}

Int milnor_number(const Cycle& z) { return milnor_number(z, canonical_cycle(z.graph())); }

Int virtual_milnor(const Cycle& d, const RationalCycle& K) {
  return virtual_genus(d, K) + euler_char(-d, K);
}

Int virtual_milnor(const Cycle& d) { return virtual_milnor(d, canonical_cycle(d.graph())); }

bool acampo_check(const Cycle& z) {
  const PlumbingGraph& g = z.graph();
  std::vector<Int> k = binding_vector(z);
  Int rhs = 0;
  for (int i = 0; i < g.size(); ++i) rhs += (2 - g.valence(i) - k[i]) * z[i];
  return 1 - milnor_number(z) == rhs;
}

bool genus_lower_bound_check(const Cycle& z) {
  RationalCycle K = canonical_cycle(z.graph());
  return ob_genus(z, K) >= 1 - euler_char(z, K);
}

OpenBookReport open_book_report(const Cycle& z) {
  require_nonzero_antinef(z);
  RationalCycle K = canonical_cycle(z.graph());
  OpenBookReport r;
  r.cycle = z;
  r.antinef = true;
  r.beta = binding_count(z);
  r.genus = ob_genus(z, K);
  r.milnor = milnor_number(z, K);
  r.chi_minus = euler_char(-z, K);
  r.binding = binding_vector(z);
  return r;
}

ContactReport contact_invariants(const PlumbingGraph& g) {
  Cycle zmin = compute_zmin(g);
  RationalCycle K = canonical_cycle(g);
  ContactReport r;
  r.sg = ob_genus(zmin, K);
  r.bn = binding_count(zmin);
  r.norm = milnor_number(zmin, K) - 1;
  r.rational = euler_char(zmin, K) == 1;
  r.minimal = zmin == Cycle::reduced(g);
  r.zmin = std::move(zmin);
  return r;
}

StratumMinimizers stratum_minimizers(const PlumbingGraph& g, int bound, const Int& genus) {
  std::vector<Cycle> stratum = genus_stratum(g, bound, genus);
  StratumMinimizers out;
  if (stratum.empty()) return out;
  out.empty = false;
  RationalCycle K = canonical_cycle(g);
  bool first = true;
  for (const Cycle& z : stratum) {
    Int mu = milnor_number(z, K);
    Int beta = binding_count(z);
    if (first || mu < out.min_mu) {
      out.min_mu = mu;
      out.mu_argmin.clear();
    }
    if (mu == out.min_mu) out.mu_argmin.push_back(z);
    if (first || beta < out.min_beta) {
      out.min_beta = beta;
      out.beta_argmin.clear();
    }
    if (beta == out.min_beta) out.beta_argmin.push_back(z);
    first = false;
  }
  return out;
}

}  // namespace openbook
