#include <benchmark/benchmark.h>

#include <string>

#include "openbook/cone.hpp"
#include "openbook/cycle.hpp"
#include "openbook/graph.hpp"
#include "openbook/invariants.hpp"
#include "openbook/verify.hpp"

namespace {

// Self-contained copies of the benchmark inputs so the binary needs no data
// directory.
const char* kE8 =
    "vertex c -2\nvertex a1 -2\nvertex b1 -2\nvertex b2 -2\n"
    "vertex d1 -2\nvertex d2 -2\nvertex d3 -2\nvertex d4 -2\n"
    "edge c a1\nedge c b1\nedge b1 b2\nedge c d1\n"
    "edge d1 d2\nedge d2 d3\nedge d3 d4\n";

const char* kStar2311 =
    "vertex c -1\nvertex p -2\nvertex q -3\nvertex r -11\n"
    "edge c p\nedge c q\nedge c r\n";

const char* kD4 = "vertex c -2\nvertex p -2\nvertex q -2\nvertex r -2\n"
                  "edge c p\nedge c q\nedge c r\n";

const char* kA3 = "vertex v1 -2\nvertex v2 -2\nvertex v3 -2\nedge v1 v2\nedge v2 v3\n";

void BM_parse(benchmark::State& state) {
  std::string text = kE8;
  for (auto _ : state) benchmark::DoNotOptimize(openbook::parse_graph(text));
}
BENCHMARK(BM_parse);

void BM_validate(benchmark::State& state) {
  openbook::PlumbingGraph g = openbook::parse_graph(kE8);
  for (auto _ : state) benchmark::DoNotOptimize(openbook::validate_graph(g));
}
BENCHMARK(BM_validate);

void BM_zmin_e8(benchmark::State& state) {
  openbook::PlumbingGraph g = openbook::parse_graph(kE8);
  for (auto _ : state) benchmark::DoNotOptimize(openbook::compute_zmin(g));
}
BENCHMARK(BM_zmin_e8);

void BM_zmin_star2311(benchmark::State& state) {
  openbook::PlumbingGraph g = openbook::parse_graph(kStar2311);
  for (auto _ : state) benchmark::DoNotOptimize(openbook::compute_zmin(g));
}
BENCHMARK(BM_zmin_star2311);

void BM_canonical(benchmark::State& state) {
  openbook::PlumbingGraph g = openbook::parse_graph(kStar2311);
  for (auto _ : state) benchmark::DoNotOptimize(openbook::canonical_cycle(g));
}
BENCHMARK(BM_canonical);

void BM_euler_char(benchmark::State& state) {
  openbook::PlumbingGraph g = openbook::parse_graph(kE8);
  openbook::Cycle z = openbook::compute_zmin(g);
  openbook::RationalCycle k = openbook::canonical_cycle(g);
  for (auto _ : state) benchmark::DoNotOptimize(openbook::euler_char(z, k));
}
BENCHMARK(BM_euler_char);

void BM_contact(benchmark::State& state) {
  openbook::PlumbingGraph g = openbook::parse_graph(kE8);
  for (auto _ : state) benchmark::DoNotOptimize(openbook::contact_invariants(g));
}
BENCHMARK(BM_contact);

void BM_enumerate_cone(benchmark::State& state) {
  openbook::PlumbingGraph g = openbook::parse_graph(kD4);
  for (auto _ : state) benchmark::DoNotOptimize(openbook::enumerate_cone(g, 6));
}
BENCHMARK(BM_enumerate_cone);

void BM_suite_a3(benchmark::State& state) {
  openbook::PlumbingGraph g = openbook::parse_graph(kA3);
  for (auto _ : state) benchmark::DoNotOptimize(openbook::run_suite(g, 2));
}
BENCHMARK(BM_suite_a3);

void BM_suite_e8(benchmark::State& state) {
  openbook::PlumbingGraph g = openbook::parse_graph(kE8);
  for (auto _ : state) benchmark::DoNotOptimize(openbook::run_suite(g, 1));
}
BENCHMARK(BM_suite_e8);

}  // namespace

BENCHMARK_MAIN();
