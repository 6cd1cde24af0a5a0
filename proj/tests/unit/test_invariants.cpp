#include <string>
#include <vector>

#include "doctest.h"
#include "openbook/cone.hpp"
#include "openbook/errors.hpp"
#include "openbook/invariants.hpp"
#include "testutil.hpp"

using namespace openbook;

TEST_CASE("open book invariants of corpus fundamental cycles") {
  struct Row {
    const char* file;
    int beta;
    int genus;
    int milnor;
    int chi_minus;
  };
  const Row table[] = {
      {"a1.graph", 2, 0, 1, 1},       {"a3.graph", 2, 0, 1, 1},
      {"d4.graph", 1, 1, 2, 1},       {"d5.graph", 1, 1, 2, 1},
      {"e6.graph", 1, 1, 2, 1},       {"e7.graph", 1, 1, 2, 1},
      {"e8.graph", 1, 1, 2, 1},       {"v3.graph", 3, 0, 2, 2},
      {"v4.graph", 4, 0, 3, 3},       {"star237.graph", 1, 1, 2, 1},
      {"star2311.graph", 5, 1, 6, 5},
  };
  for (const Row& row : table) {
    INFO(row.file);
    PlumbingGraph g = testutil::load_data_graph(row.file);
    Cycle z = compute_zmin(g);
    CHECK(binding_count(z) == row.beta);
    CHECK(ob_genus(z) == row.genus);
    CHECK(milnor_number(z) == row.milnor);
    CHECK(euler_char(-z) == row.chi_minus);
  }
}

TEST_CASE("binding vectors locate the binding components") {
  PlumbingGraph a3 = testutil::load_data_graph("a3.graph");
  CHECK(binding_vector(Cycle::reduced(a3)) == std::vector<Int>{1, 0, 1});

  PlumbingGraph e8 = testutil::load_data_graph("e8.graph");
  Cycle z8 = compute_zmin(e8);
  std::vector<Int> k8(8, 0);
  k8[e8.index_of("d4")] = 1;
  CHECK(binding_vector(z8) == k8);

  PlumbingGraph e7 = testutil::load_data_graph("e7.graph");
  std::vector<Int> k7(7, 0);
  k7[e7.index_of("b2")] = 1;
  CHECK(binding_vector(compute_zmin(e7)) == k7);

  PlumbingGraph e6 = testutil::load_data_graph("e6.graph");
  std::vector<Int> k6(6, 0);
  k6[e6.index_of("a1")] = 1;
  CHECK(binding_vector(compute_zmin(e6)) == k6);

  PlumbingGraph d5 = testutil::load_data_graph("d5.graph");
  std::vector<Int> kd(5, 0);
  kd[d5.index_of("c2")] = 1;
  CHECK(binding_vector(compute_zmin(d5)) == kd);

  // The binding vector always sums to the binding count.
  for (const char* name : {"d4", "star237", "star2311", "v3"}) {
    PlumbingGraph g = testutil::load_data_graph(std::string(name) + ".graph");
    Cycle z = compute_zmin(g);
    Int total = 0;
    for (const Int& k : binding_vector(z)) total += k;
    CHECK(total == binding_count(z));
  }
}

TEST_CASE("invariants of multiples of the -2 vertex cycle") {
  // g(mE) = (m-1)^2 and mu(mE) = 2m^2 - 2m + 1; every multiple is anti-nef.
  PlumbingGraph g = testutil::load_data_graph("a1.graph");
  Cycle e = Cycle::reduced(g);
  const int genus[] = {0, 1, 4};
  const int milnor[] = {1, 5, 13};
  for (int m = 1; m <= 3; ++m) {
    Cycle z = Int(m) * e;
    CHECK(binding_count(z) == 2 * m);
    CHECK(ob_genus(z) == genus[m - 1]);
    CHECK(milnor_number(z) == milnor[m - 1]);
    CHECK(virtual_genus(z) == ob_genus(z));
    CHECK(virtual_milnor(z) == milnor_number(z));
  }
}

TEST_CASE("virtual invariants of a disconnected effective cycle") {
  PlumbingGraph g = testutil::load_data_graph("a3.graph");
  Cycle ends = Cycle::unit(g, 0) + Cycle::unit(g, 2);
  CHECK(virtual_genus(ends) == 0);
  CHECK(virtual_milnor(ends) == 2);
  CHECK(virtual_genus(Cycle::zero(g)) == 0);
  CHECK(virtual_milnor(Cycle::zero(g)) == 0);
}

TEST_CASE("open book operations reject inapplicable cycles") {
  PlumbingGraph g = testutil::load_data_graph("e8.graph");
  Cycle zero = Cycle::zero(g);
  Cycle e = Cycle::reduced(g);  // not anti-nef on this graph

  CHECK_THROWS_AS(binding_count(zero), NotAntiNefError);
  CHECK_THROWS_AS(binding_count(e), NotAntiNefError);
  CHECK_THROWS_AS(binding_vector(e), NotAntiNefError);
  CHECK_THROWS_AS(ob_genus(e), NotAntiNefError);
  CHECK_THROWS_AS(milnor_number(e), NotAntiNefError);
  CHECK_THROWS_AS(open_book_report(e), NotAntiNefError);

  CHECK_THROWS_AS(virtual_genus(-e), NotEffectiveError);
  CHECK_THROWS_AS(virtual_milnor(-e), NotEffectiveError);
}

TEST_CASE("identity checks hold on corpus fundamental cycles and cones") {
  const char* names[] = {"a1", "a2", "a3", "a4", "a5", "d4", "d5",
                         "e6", "e7", "e8", "v3", "v4", "star237", "star2311"};
  for (const char* name : names) {
    PlumbingGraph g = testutil::load_data_graph(std::string(name) + ".graph");
    Cycle z = compute_zmin(g);
    RationalCycle K = canonical_cycle(g);
    CHECK_MESSAGE(acampo_check(z), name);
    CHECK_MESSAGE(genus_lower_bound_check(z), name);
    CHECK(milnor_number(z, K) == 2 * ob_genus(z, K) - 1 + binding_count(z));
    CHECK(milnor_number(z, K) == ob_genus(z, K) + euler_char(-z, K));
  }

  for (const char* name : {"a1", "a3", "d4"}) {
    PlumbingGraph g = testutil::load_data_graph(std::string(name) + ".graph");
    for (const Cycle& z : enumerate_cone(g, 3).elements) {
      CHECK(acampo_check(z));
      CHECK(genus_lower_bound_check(z));
      CHECK(virtual_genus(z) == ob_genus(z));
      CHECK(virtual_milnor(z) == milnor_number(z));
    }
  }
}

TEST_CASE("full open book report of the arms-1-2-4 star") {
  PlumbingGraph g = testutil::load_data_graph("e8.graph");
  OpenBookReport r = open_book_report(compute_zmin(g));
  CHECK(to_literal(r.cycle) == "c=6,a1=3,b1=4,b2=2,d1=5,d2=4,d3=3,d4=2");
  CHECK(r.antinef);
  CHECK(r.beta == 1);
  CHECK(r.genus == 1);
  CHECK(r.milnor == 2);
  CHECK(r.chi_minus == 1);
  std::vector<Int> k(8, 0);
  k[g.index_of("d4")] = 1;
  CHECK(r.binding == k);
}

TEST_CASE("contact structure invariants of the corpus") {
  struct Row {
    const char* file;
    int sg;
    int bn;
    int norm;
    bool rational;
    bool minimal;
  };
  const Row table[] = {
      {"a1.graph", 0, 2, 0, true, true},
      {"a5.graph", 0, 2, 0, true, true},
      {"v3.graph", 0, 3, 1, true, true},
      {"v4.graph", 0, 4, 2, true, true},
      {"d4.graph", 1, 1, 1, true, false},
      {"e8.graph", 1, 1, 1, true, false},
      {"star237.graph", 1, 1, 1, false, false},
      {"star2311.graph", 1, 5, 5, false, false},
  };
  for (const Row& row : table) {
    INFO(row.file);
    PlumbingGraph g = testutil::load_data_graph(row.file);
    ContactReport r = contact_invariants(g);
    CHECK(r.sg == row.sg);
    CHECK(r.bn == row.bn);
    CHECK(r.norm == row.norm);
    CHECK(r.rational == row.rational);
    CHECK(r.minimal == row.minimal);
    CHECK(r.zmin == compute_zmin(g));
    CHECK(r.norm - r.bn == 2 * r.sg - 2);
  }
}

TEST_CASE("stratum minimizers of the -2 vertex") {
  PlumbingGraph g = testutil::load_data_graph("a1.graph");

  StratumMinimizers s0 = stratum_minimizers(g, 3, 0);
  CHECK_FALSE(s0.empty);
  CHECK(s0.min_mu == 1);
  CHECK(s0.min_beta == 2);
  REQUIRE(s0.mu_argmin.size() == 1);
  CHECK(s0.mu_argmin[0][0] == 1);
  CHECK(s0.beta_argmin == s0.mu_argmin);

  StratumMinimizers s1 = stratum_minimizers(g, 3, 1);
  CHECK(s1.min_mu == 5);
  CHECK(s1.min_beta == 4);
  REQUIRE(s1.mu_argmin.size() == 1);
  CHECK(s1.mu_argmin[0][0] == 2);

  CHECK(stratum_minimizers(g, 3, 2).empty);
}

TEST_CASE("stratum minimizers of the three-legged star") {
  // Every anti-nef cycle within bound 3 has page genus 1; the fundamental
  // cycle minimizes both mu and beta on the stratum.
  PlumbingGraph g = testutil::load_data_graph("d4.graph");
  CHECK(genus_stratum(g, 3, 1).size() == 5);
  CHECK(genus_stratum(g, 3, 0).empty());

  StratumMinimizers s = stratum_minimizers(g, 3, 1);
  CHECK_FALSE(s.empty);
  CHECK(s.min_mu == 2);
  CHECK(s.min_beta == 1);
  REQUIRE(s.mu_argmin.size() == 1);
  CHECK(s.mu_argmin[0] == compute_zmin(g));
  CHECK(s.beta_argmin == s.mu_argmin);
  CHECK(s.min_mu - s.min_beta == 2 * 1 - 1);
}

TEST_CASE("mu and beta argmin sets coincide on every stratum") {
  // mu - beta = 2g - 1 is constant on a genus stratum, so minimizing one
  // minimizes the other.
  for (const char* name : {"a3", "d4", "d5", "v3"}) {
    PlumbingGraph g = testutil::load_data_graph(std::string(name) + ".graph");
    for (int genus = 0; genus <= 4; ++genus) {
      StratumMinimizers s = stratum_minimizers(g, 3, genus);
      if (s.empty) continue;
      CHECK(s.mu_argmin == s.beta_argmin);
      CHECK(s.min_mu - s.min_beta == 2 * genus - 1);
    }
  }
}
