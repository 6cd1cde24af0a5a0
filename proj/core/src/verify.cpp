#include "openbook/verify.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "openbook/cone.hpp"
#include "openbook/errors.hpp"
#include "openbook/invariants.hpp"

namespace openbook {

bool VerificationReport::all_ok() const {
  for (const PropertyRecord& p : properties)
    if (!p.ok) return false;
  return true;
}

namespace {

// Hard cap on the chi tables so a huge bound fails fast instead of
// exhausting memory. 2^24 entries covers every forced run a desk machine
// can finish anyway.
constexpr size_t kMaxBoxSize = size_t(1) << 24;

// Shared scan state. The chi tables cover the box [0, bound]^n in
// lexicographic order with the last coordinate fastest, so the box index is
// the mixed-radix value of the coefficient vector. The cone pieces are built
// on demand: the box-only scans must run even on graphs where the
// fundamental-cycle iteration cannot (the negative controls).
struct Context {
  const PlumbingGraph* g = nullptr;
  int bound = 0;
  RationalCycle K;
  size_t box_size = 0;
  std::vector<size_t> weight;
  std::vector<Int> chi;        // chi(D) by box index
  std::vector<Int> chi_minus;  // chi(-D) by box index

  bool cone_ready = false;
  std::vector<Cycle> antinef;  // lex order; Z_min appended when outside the box
  Cycle zmin_low;
  Cycle zmin_high;
};

bool advance(std::vector<int>& m, const std::vector<int>& limit) {
  for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
    if (m[i] < limit[i]) {
      ++m[i];
      for (size_t j = i + 1; j < m.size(); ++j) m[j] = 0;
      return true;
    }
  }
  return false;
}

Cycle make_cycle(const PlumbingGraph& g, const std::vector<int>& digits) {
  std::vector<Int> c(digits.size());
  for (size_t i = 0; i < digits.size(); ++i) c[i] = digits[i];
  return Cycle(g, std::move(c));
}

size_t box_index(const Context& ctx, const std::vector<int>& digits) {
  size_t idx = 0;
  for (size_t i = 0; i < digits.size(); ++i)
    idx += ctx.weight[i] * static_cast<size_t>(digits[i]);
  return idx;
}

bool in_box(const Context& ctx, const Cycle& z) {
  for (int i = 0; i < z.size(); ++i)
    if (z[i] > ctx.bound) return false;
  return true;
}

size_t box_index_of(const Context& ctx, const Cycle& z) {
  size_t idx = 0;
  for (int i = 0; i < z.size(); ++i)
    idx += ctx.weight[i] * z[i].convert_to<size_t>();
  return idx;
}

Int chi_of(const Context& ctx, const Cycle& z) {
  return in_box(ctx, z) ? ctx.chi[box_index_of(ctx, z)] : euler_char(z, ctx.K);
}

Int chi_minus_of(const Context& ctx, const Cycle& z) {
  return in_box(ctx, z) ? ctx.chi_minus[box_index_of(ctx, z)] : euler_char(-z, ctx.K);
}

// (d, |d|) without materializing the support cycle.
Int support_pairing(const Cycle& d) {
  const PlumbingGraph& g = d.graph();
  Int total = 0;
  for (int i = 0; i < g.size(); ++i)
    if (d[i] != 0) total += g.euler(i) * d[i];
  for (auto [i, j] : g.edges()) {
    if (d[j] != 0) total += d[i];
    if (d[i] != 0) total += d[j];
  }
  return total;
}

// virtual_genus(d) with the chi(-d) table lookup already resolved.
Int vg_at(const Context& ctx, const Cycle& d, size_t idx) {
  return component_count(d) + support_pairing(d) + ctx.chi_minus[idx];
}

Context build_context(const PlumbingGraph& g, int bound) {
  if (bound <= 0) throw std::invalid_argument("verification bound must be positive");
  const int n = g.size();
  if (n == 0) throw std::invalid_argument("empty graph");
  Context ctx;
  ctx.g = &g;
  ctx.bound = bound;
  ctx.K = canonical_cycle(g);
  ctx.weight.assign(n, 1);
  const size_t radix = static_cast<size_t>(bound) + 1;
  size_t box = 1;
  for (int i = n - 1; i >= 0; --i) {
    ctx.weight[i] = box;
    if (box > kMaxBoxSize / radix)
      throw std::invalid_argument("verification bound too large: chi tables would exceed " +
                                  std::to_string(kMaxBoxSize) + " entries");
    box *= radix;
  }
  ctx.box_size = box;
  ctx.chi.resize(box);
  ctx.chi_minus.resize(box);
  std::vector<int> m(n, 0), limit(n, bound);
  size_t idx = 0;
  do {
    Cycle d = make_cycle(g, m);
    ctx.chi[idx] = euler_char(d, ctx.K);
    ctx.chi_minus[idx] = euler_char(-d, ctx.K);
    ++idx;
  } while (advance(m, limit));
  return ctx;
}

void ensure_cone(Context& ctx) {
  if (ctx.cone_ready) return;
  ctx.antinef = enumerate_cone(*ctx.g, ctx.bound).elements;
  ctx.zmin_low = compute_zmin(*ctx.g, TieBreak::LowestIndex);
  ctx.zmin_high = compute_zmin(*ctx.g, TieBreak::HighestIndex);
  if (!in_box(ctx, ctx.zmin_low)) ctx.antinef.push_back(ctx.zmin_low);
  ctx.cone_ready = true;
}

PropertyRecord pass(std::string name, long long instances) {
  PropertyRecord r;
  r.name = std::move(name);
  r.instances = instances;
  r.ok = true;
  return r;
}

PropertyRecord fail(std::string name, long long instances, std::vector<Cycle> cycles,
                    std::string relation, std::string lhs, std::string rhs) {
  PropertyRecord r;
  r.name = std::move(name);
  r.instances = instances;
  r.ok = false;
  r.counterexample =
      Counterexample{std::move(cycles), std::move(relation), std::move(lhs), std::move(rhs)};
  return r;
}

std::vector<PropertyRecord> positivity_records(Context& ctx) {
  const PlumbingGraph& g = *ctx.g;
  std::vector<PropertyRecord> out;

  out.push_back([&]() -> PropertyRecord {
    std::vector<int> m(g.size(), 0), limit(g.size(), ctx.bound);
    long long count = 0;
    size_t idx = 0;
    do {
      ++count;
      Cycle d = make_cycle(g, m);
      Int vg = vg_at(ctx, d, idx);
      if (vg < 0)
        return fail("virtual_genus_nonneg", count, {d}, "virtual_genus(D) >= 0", vg.str(), "0");
      ++idx;
    } while (advance(m, limit));
    return pass("virtual_genus_nonneg", count);
  }());

  return out;
}

std::vector<PropertyRecord> genus_monotone_records(Context& ctx) {
  ensure_cone(ctx);
  const PlumbingGraph& g = *ctx.g;
  const Cycle E = Cycle::reduced(g);
  std::vector<PropertyRecord> out;

  out.push_back([&]() -> PropertyRecord {
    long long count = 0;
    for (const Cycle& z : ctx.antinef) {
      if (!in_box(ctx, z)) continue;  // no D keeps Z + D inside the box
      size_t idxz = box_index_of(ctx, z);
      Int gz = 1 + pairing(z, E) + ctx.chi_minus[idxz];
      std::vector<int> limit(g.size()), d(g.size(), 0);
      for (int i = 0; i < g.size(); ++i) limit[i] = ctx.bound - z[i].convert_to<int>();
      do {
        ++count;
        Cycle dd = make_cycle(g, d);
        Cycle zd = z + dd;
        Int vg = vg_at(ctx, zd, idxz + box_index(ctx, d));
        if (vg < gz)
          return fail("genus_monotone", count, {z, dd}, "virtual_genus(Z+D) >= ob_genus(Z)",
                      vg.str(), gz.str());
      } while (advance(d, limit));
    }
    return pass("genus_monotone", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    std::vector<Int> gs;
    gs.reserve(ctx.antinef.size());
    for (const Cycle& z : ctx.antinef) gs.push_back(1 + pairing(z, E) + chi_minus_of(ctx, z));
    long long count = 0;
    for (size_t i = 0; i < ctx.antinef.size(); ++i) {
      for (size_t j = 0; j < ctx.antinef.size(); ++j) {
        if (!leq(ctx.antinef[i], ctx.antinef[j])) continue;
        ++count;
        if (gs[i] > gs[j])
          return fail("genus_monotone_pairs", count, {ctx.antinef[i], ctx.antinef[j]},
                      "Z1 <= Z2 implies ob_genus(Z1) <= ob_genus(Z2)", gs[i].str(), gs[j].str());
      }
    }
    return pass("genus_monotone_pairs", count);
  }());

  return out;
}

std::vector<PropertyRecord> mu_records(Context& ctx) {
  ensure_cone(ctx);
  const PlumbingGraph& g = *ctx.g;
  const Cycle E = Cycle::reduced(g);
  std::vector<PropertyRecord> out;

  out.push_back([&]() -> PropertyRecord {
    std::vector<int> m(g.size(), 0), limit(g.size(), ctx.bound);
    long long count = 0;
    size_t idx = 0;
    do {
      ++count;
      if (ctx.chi_minus[idx] < 0)
        return fail("chi_neg_nonneg", count, {make_cycle(g, m)}, "chi(-D) >= 0",
                    ctx.chi_minus[idx].str(), "0");
      ++idx;
    } while (advance(m, limit));
    return pass("chi_neg_nonneg", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    std::vector<int> m(g.size(), 0), limit(g.size(), ctx.bound);
    long long count = 0;
    size_t idx = 0;
    do {
      ++count;
      Cycle d = make_cycle(g, m);
      Int vg = vg_at(ctx, d, idx);
      Int vm = vg + ctx.chi_minus[idx];
      if (vm < vg)
        return fail("mu_ge_genus", count, {d}, "virtual_milnor(D) >= virtual_genus(D)", vm.str(),
                    vg.str());
      if (vg < 0)
        return fail("mu_ge_genus", count, {d}, "virtual_genus(D) >= 0", vg.str(), "0");
      ++idx;
    } while (advance(m, limit));
    return pass("mu_ge_genus", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    long long count = 0;
    for (const Cycle& z : ctx.antinef) {
      if (!in_box(ctx, z)) continue;
      size_t idxz = box_index_of(ctx, z);
      Int muz = 1 + pairing(z, E) + 2 * ctx.chi_minus[idxz];
      std::vector<int> limit(g.size()), d(g.size(), 0);
      for (int i = 0; i < g.size(); ++i) limit[i] = ctx.bound - z[i].convert_to<int>();
      do {
        ++count;
        Cycle dd = make_cycle(g, d);
        Cycle zd = z + dd;
        size_t idxzd = idxz + box_index(ctx, d);
        Int vm = vg_at(ctx, zd, idxzd) + ctx.chi_minus[idxzd];
        if (vm < muz)
          return fail("mu_monotone", count, {z, dd}, "virtual_milnor(Z+D) >= milnor_number(Z)",
                      vm.str(), muz.str());
      } while (advance(d, limit));
    }
    return pass("mu_monotone", count);
  }());

  return out;
}

std::vector<PropertyRecord> identity_records(Context& ctx) {
  ensure_cone(ctx);
  const PlumbingGraph& g = *ctx.g;
  const Cycle E = Cycle::reduced(g);
  std::vector<PropertyRecord> out;

  out.push_back([&]() -> PropertyRecord {
    long long count = 0;
    for (const Cycle& z : ctx.antinef) {
      ++count;
      Int mu = milnor_number(z, ctx.K);
      Int rhs = 2 * ob_genus(z, ctx.K) - 1 + binding_count(z);
      if (mu != rhs)
        return fail("mu_identity_beta", count, {z},
                    "milnor_number(Z) == 2*ob_genus(Z) - 1 + binding_count(Z)", mu.str(),
                    rhs.str());
    }
    return pass("mu_identity_beta", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    long long count = 0;
    for (const Cycle& z : ctx.antinef) {
      ++count;
      Int mu = milnor_number(z, ctx.K);
      Int rhs = ob_genus(z, ctx.K) + chi_minus_of(ctx, z);
      if (mu != rhs)
        return fail("mu_identity_chi", count, {z}, "milnor_number(Z) == ob_genus(Z) + chi(-Z)",
                    mu.str(), rhs.str());
    }
    return pass("mu_identity_chi", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    long long count = 0;
    for (const Cycle& z : ctx.antinef) {
      ++count;
      Int lhs = 1 - milnor_number(z, ctx.K);
      Int rhs = 0;
      for (int i = 0; i < g.size(); ++i) rhs += (2 - g.valence(i) + vertex_pairing(z, i)) * z[i];
      if (lhs != rhs)
        return fail("acampo_identity", count, {z},
                    "1 - milnor_number(Z) == sum_i (2 - valence_i - k_i) * m_i", lhs.str(),
                    rhs.str());
    }
    return pass("acampo_identity", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    long long count = 0;
    std::vector<int> a(g.size(), 0), alimit(g.size(), ctx.bound);
    do {
      Cycle ca = make_cycle(g, a);
      size_t idxa = box_index(ctx, a);
      std::vector<int> b(g.size(), 0), blimit(g.size());
      for (int i = 0; i < g.size(); ++i) blimit[i] = ctx.bound - a[i];
      do {
        ++count;
        size_t idxb = box_index(ctx, b);
        Cycle cb = make_cycle(g, b);
        Int lhs = ctx.chi[idxa + idxb];
        Int rhs = ctx.chi[idxa] + ctx.chi[idxb] - pairing(ca, cb);
        if (lhs != rhs)
          return fail("chi_additivity", count, {ca, cb}, "chi(A+B) == chi(A) + chi(B) - (A,B)",
                      lhs.str(), rhs.str());
      } while (advance(b, blimit));
    } while (advance(a, alimit));
    return pass("chi_additivity", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    std::vector<int> m(g.size(), 0), limit(g.size(), ctx.bound);
    long long count = 0;
    size_t idx = 0;
    do {
      ++count;
      Cycle d = make_cycle(g, m);
      Int sum = ctx.chi[idx] + ctx.chi_minus[idx] + pairing(d, d);
      if (sum != 0)
        return fail("chi_reflection", count, {d}, "chi(D) + chi(-D) + (D,D) == 0", sum.str(),
                    "0");
      ++idx;
    } while (advance(m, limit));
    return pass("chi_reflection", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    std::vector<int> m(g.size(), 0), limit(g.size(), ctx.bound);
    long long count = 0;
    do {
      ++count;
      Cycle d = make_cycle(g, m);
      Rational s = Rational(pairing(d, d)) + pairing(d, ctx.K);
      if (denominator(s) != 1 || numerator(s) % 2 != 0)
        return fail("chi_evenness", count, {d}, "(D, D+K) is an even integer", to_string(s),
                    "an even integer");
    } while (advance(m, limit));
    return pass("chi_evenness", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    long long count = 0;
    for (const Cycle& z : ctx.antinef) {
      ++count;
      Int gz = ob_genus(z, ctx.K);
      Int rhs = 1 - chi_of(ctx, z);
      if (gz < rhs)
        return fail("genus_lower_bound", count, {z}, "ob_genus(Z) >= 1 - chi(Z)", gz.str(),
                    rhs.str());
    }
    return pass("genus_lower_bound", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    long long count = 0;
    for (const Cycle& z : ctx.antinef) {
      ++count;
      Int vg = virtual_genus(z, ctx.K);
      Int gz = ob_genus(z, ctx.K);
      if (vg != gz)
        return fail("virtual_extends_open_book", count, {z}, "virtual_genus(Z) == ob_genus(Z)",
                    vg.str(), gz.str());
      Int vm = virtual_milnor(z, ctx.K);
      Int mu = milnor_number(z, ctx.K);
      if (vm != mu)
        return fail("virtual_extends_open_book", count, {z},
                    "virtual_milnor(Z) == milnor_number(Z)", vm.str(), mu.str());
    }
    return pass("virtual_extends_open_book", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    long long count = 0;
    for (const Cycle& z : ctx.antinef) {
      ++count;
      // Raw formulas, not the asserting wrappers, so a violation is
      // reported rather than thrown.
      Int beta = -pairing(z, E);
      Int gz = 1 + pairing(z, E) + chi_minus_of(ctx, z);
      Int mu = 1 + pairing(z, E) + 2 * chi_minus_of(ctx, z);
      if (beta < 1)
        return fail("invariant_sign_bounds", count, {z}, "binding_count(Z) >= 1", beta.str(),
                    "1");
      if (gz < 0)
        return fail("invariant_sign_bounds", count, {z}, "ob_genus(Z) >= 0", gz.str(), "0");
      if (mu < 0)
        return fail("invariant_sign_bounds", count, {z}, "milnor_number(Z) >= 0", mu.str(), "0");
    }
    return pass("invariant_sign_bounds", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    ContactReport r = contact_invariants(g);
    Int lhs = r.norm - r.bn;
    Int rhs = 2 * r.sg - 2;
    if (lhs != rhs)
      return fail("contact_relation", 1, {r.zmin}, "norm - bn == 2*sg - 2", lhs.str(),
                  rhs.str());
    return pass("contact_relation", 1);
  }());

  return out;
}

std::vector<PropertyRecord> cone_records(Context& ctx) {
  ensure_cone(ctx);
  std::vector<PropertyRecord> out;

  out.push_back([&]() -> PropertyRecord {
    long long count = 0;
    for (const Cycle& z : ctx.antinef) {
      ++count;
      for (int i = 0; i < z.size(); ++i)
        if (z[i] < 1)
          return fail("antinef_positive", count, {z},
                      "nonzero anti-nef cycle has positive coefficients", z[i].str(), "1");
    }
    return pass("antinef_positive", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    long long count = 1;
    if (!is_antinef(ctx.zmin_low))
      return fail("zmin_minimal", count, {ctx.zmin_low}, "Z_min is anti-nef", "false", "true");
    for (const Cycle& z : ctx.antinef) {
      ++count;
      if (!leq(ctx.zmin_low, z))
        return fail("zmin_minimal", count, {ctx.zmin_low, z},
                    "Z_min <= Z for every enumerated anti-nef Z", to_literal(ctx.zmin_low),
                    to_literal(z));
    }
    return pass("zmin_minimal", count);
  }());

  out.push_back([&]() -> PropertyRecord {
    if (!(ctx.zmin_low == ctx.zmin_high))
      return fail("zmin_tiebreak", 1, {ctx.zmin_low, ctx.zmin_high},
                  "compute_zmin is tie-break independent", to_literal(ctx.zmin_low),
                  to_literal(ctx.zmin_high));
    return pass("zmin_tiebreak", 1);
  }());

  out.push_back([&]() -> PropertyRecord {
    long long count = 0;
    for (size_t i = 0; i < ctx.antinef.size(); ++i) {
      for (size_t j = i; j < ctx.antinef.size(); ++j) {
        Cycle sum = ctx.antinef[i] + ctx.antinef[j];
        bool within = true;
        for (int k = 0; k < sum.size(); ++k)
          if (sum[k] > 2 * ctx.bound) {
            within = false;
            break;
          }
        if (!within) continue;
        ++count;
        if (!is_antinef(sum)) {
          Int worst = 0;
          for (int k = 0; k < sum.size(); ++k)
            if (vertex_pairing(sum, k) > 0) {
              worst = vertex_pairing(sum, k);
              break;
            }
          return fail("antinef_sum_closed", count, {ctx.antinef[i], ctx.antinef[j]},
                      "sum of anti-nef cycles is anti-nef", worst.str(), "0");
        }
      }
    }
    return pass("antinef_sum_closed", count);
  }());

  return out;
}

void append(std::vector<PropertyRecord>& into, std::vector<PropertyRecord> from) {
  for (PropertyRecord& r : from) into.push_back(std::move(r));
}

}  // namespace

std::vector<PropertyRecord> verify_positivity(const PlumbingGraph& g, int bound) {
  Context ctx = build_context(g, bound);
  return positivity_records(ctx);
}

std::vector<PropertyRecord> verify_genus_monotone(const PlumbingGraph& g, int bound) {
  Context ctx = build_context(g, bound);
  return genus_monotone_records(ctx);
}

std::vector<PropertyRecord> verify_mu_theorem(const PlumbingGraph& g, int bound) {
  Context ctx = build_context(g, bound);
  return mu_records(ctx);
}

std::vector<PropertyRecord> verify_identities(const PlumbingGraph& g, int bound) {
  Context ctx = build_context(g, bound);
  return identity_records(ctx);
}

std::vector<PropertyRecord> verify_cone_invariants(const PlumbingGraph& g, int bound) {
  Context ctx = build_context(g, bound);
  return cone_records(ctx);
}

VerificationReport run_suite(const PlumbingGraph& g, int bound, std::string graph_label) {
  auto start = std::chrono::steady_clock::now();
  Context ctx = build_context(g, bound);
  VerificationReport rep;
  rep.graph = std::move(graph_label);
  rep.bound = bound;
  append(rep.properties, positivity_records(ctx));
  append(rep.properties, genus_monotone_records(ctx));
  append(rep.properties, mu_records(ctx));
  append(rep.properties, identity_records(ctx));
  append(rep.properties, cone_records(ctx));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Int estimated_instances(const PlumbingGraph& g, int bound) {
  if (bound <= 0) throw std::invalid_argument("verification bound must be positive");
  Int box = 1, pairs = 1;
  for (int i = 0; i < g.size(); ++i) {
    box *= bound + 1;
    pairs *= Int(bound + 1) * (bound + 2) / 2;
  }
  return 5 * box + pairs;
}

}  // namespace openbook
