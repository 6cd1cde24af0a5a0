#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "openbook/cone.hpp"
#include "openbook/cycle.hpp"
#include "openbook/graph.hpp"
#include "testutil.hpp"

using namespace openbook;

namespace {

Cycle zmin_of(const std::string& file, const std::string& literal, const PlumbingGraph& g) {
  INFO(file);
  Cycle z = compute_zmin(g);
  CHECK(z == parse_cycle_literal(g, literal));
  return z;
}

}  // namespace

TEST_CASE("anti-nef membership") {
  PlumbingGraph a3 = testutil::load_data_graph("a3.graph");
  CHECK(is_antinef(Cycle::reduced(a3)));
  CHECK(is_antinef(Cycle::zero(a3)));
  CHECK_FALSE(is_antinef(Cycle::unit(a3, 0)));
  CHECK_FALSE(is_antinef(Cycle::unit(a3, 1)));

  PlumbingGraph e8 = testutil::load_data_graph("e8.graph");
  CHECK_FALSE(is_antinef(Cycle::reduced(e8)));
}

TEST_CASE("fundamental cycles of the corpus") {
  struct Expected {
    const char* file;
    const char* literal;
  };
  const Expected table[] = {
      {"a1.graph", "a=1"},
      {"a2.graph", "v1=1,v2=1"},
      {"a3.graph", "v1=1,v2=1,v3=1"},
      {"a4.graph", "v1=1,v2=1,v3=1,v4=1"},
      {"a5.graph", "v1=1,v2=1,v3=1,v4=1,v5=1"},
      {"d4.graph", "c=2,p=1,q=1,r=1"},
      {"d5.graph", "c1=1,c2=2,c3=2,p=1,q=1"},
      {"e6.graph", "c=3,a1=2,b1=2,b2=1,d1=2,d2=1"},
      {"e7.graph", "c=4,a1=2,b1=3,b2=2,d1=3,d2=2,d3=1"},
      {"e8.graph", "c=6,a1=3,b1=4,b2=2,d1=5,d2=4,d3=3,d4=2"},
      {"star237.graph", "c=6,p=3,q=2,r=1"},
      {"star2311.graph", "c=6,p=3,q=2,r=1"},
      {"v3.graph", "a=1"},
      {"v4.graph", "a=1"},
  };
  for (const Expected& row : table) {
    PlumbingGraph g = testutil::load_data_graph(row.file);
    Cycle z = zmin_of(row.file, row.literal, g);
    CHECK(is_antinef(z));
    CHECK(z.is_effective());
    CHECK_FALSE(z.is_zero());
  }
}

TEST_CASE("fundamental cycle matches the exhaustive-search oracle") {
  struct Entry {
    const char* file;
    int cap;
  };
  const Entry table[] = {
      {"a1.graph", 3},  {"a2.graph", 3},      {"a3.graph", 3},       {"a4.graph", 3},
      {"a5.graph", 2},  {"d4.graph", 3},      {"d5.graph", 3},       {"e6.graph", 4},
      {"e7.graph", 5},  {"star237.graph", 6}, {"star2311.graph", 6}, {"v3.graph", 2},
      {"v4.graph", 2},
  };
  for (const Entry& row : table) {
    INFO(row.file);
    PlumbingGraph g = testutil::load_data_graph(row.file);
    std::optional<Cycle> oracle = testutil::zmin_oracle(g, row.cap);
    REQUIRE(oracle.has_value());
    CHECK(*oracle == compute_zmin(g));
  }
}

TEST_CASE("fundamental cycle is independent of the tie-break") {
  const char* names[] = {"a1", "a5", "d4", "d5", "e6", "e7", "e8", "star237", "star2311"};
  for (const char* name : names) {
    PlumbingGraph g = testutil::load_data_graph(std::string(name) + ".graph");
    CHECK(compute_zmin(g, TieBreak::LowestIndex) == compute_zmin(g, TieBreak::HighestIndex));
  }

  std::mt19937 rng(31415);
  for (int trial = 0; trial < 15; ++trial) {
    PlumbingGraph g = testutil::random_valid_tree(rng, 1 + trial % 10);
    Cycle low = compute_zmin(g, TieBreak::LowestIndex);
    CHECK(low == compute_zmin(g, TieBreak::HighestIndex));
    CHECK(is_antinef(low));
  }
}

TEST_CASE("fundamental cycle iteration detects an indefinite form") {
  PlumbingGraph g = testutil::load_data_graph("plus1.graph");
  CHECK_THROWS_AS(compute_zmin(g), std::invalid_argument);
  CHECK_THROWS_AS(compute_zmin(PlumbingGraph{}), std::invalid_argument);
}

TEST_CASE("cone enumeration frozen values") {
  PlumbingGraph a1 = testutil::load_data_graph("a1.graph");
  ConeEnumeration c1 = enumerate_cone(a1, 3);
  REQUIRE(c1.elements.size() == 3);
  for (int m = 1; m <= 3; ++m) CHECK(c1.elements[m - 1][0] == m);

  PlumbingGraph a3 = testutil::load_data_graph("a3.graph");
  ConeEnumeration c3 = enumerate_cone(a3, 1);
  REQUIRE(c3.elements.size() == 1);
  CHECK(c3.elements[0] == Cycle::reduced(a3));

  PlumbingGraph e8 = testutil::load_data_graph("e8.graph");
  CHECK(enumerate_cone(e8, 5).elements.empty());

  PlumbingGraph d4 = testutil::load_data_graph("d4.graph");
  ConeEnumeration cd = enumerate_cone(d4, 2);
  REQUIRE(cd.elements.size() == 4);
  CHECK(to_literal(cd.elements[0]) == "c=2,p=1,q=1,r=1");
  CHECK(to_literal(cd.elements[1]) == "c=2,p=1,q=1,r=2");
  CHECK(to_literal(cd.elements[2]) == "c=2,p=1,q=2,r=1");
  CHECK(to_literal(cd.elements[3]) == "c=2,p=2,q=1,r=1");
}

TEST_CASE("cone enumeration agrees with the 64-bit oracle") {
  std::mt19937 rng(8675309);
  for (int trial = 0; trial < 12; ++trial) {
    PlumbingGraph g = testutil::random_valid_tree(rng, 1 + trial % 6);
    int bound = 2 + trial % 2;
    ConeEnumeration mine = enumerate_cone(g, bound);
    std::vector<Cycle> truth = testutil::cone_oracle(g, bound);
    REQUIRE(mine.elements.size() == truth.size());
    for (size_t i = 0; i < truth.size(); ++i) CHECK(mine.elements[i] == truth[i]);
    for (size_t i = 1; i < mine.elements.size(); ++i)
      CHECK(lex_less(mine.elements[i - 1], mine.elements[i]));
  }
}

TEST_CASE("cone enumeration rejects nonpositive bounds") {
  PlumbingGraph g = testutil::load_data_graph("a1.graph");
  CHECK_THROWS_AS(enumerate_cone(g, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_cone(g, -2), std::invalid_argument);
}

TEST_CASE("genus strata of the multiples of the -2 vertex") {
  // g(mE) = (m - 1)^2 within bound 3: genus 0 -> E, 1 -> 2E, 4 -> 3E.
  PlumbingGraph g = testutil::load_data_graph("a1.graph");
  std::vector<Cycle> g0 = genus_stratum(g, 3, 0);
  REQUIRE(g0.size() == 1);
  CHECK(g0[0][0] == 1);
  std::vector<Cycle> g1 = genus_stratum(g, 3, 1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0][0] == 2);
  std::vector<Cycle> g4 = genus_stratum(g, 3, 4);
  REQUIRE(g4.size() == 1);
  CHECK(g4[0][0] == 3);
  CHECK(genus_stratum(g, 3, 2).empty());
  CHECK(genus_stratum(g, 3, -1).empty());
}
