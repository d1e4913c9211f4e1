#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "artinacyl/cert.hpp"
#include "artinacyl/coxeter.hpp"
#include "artinacyl/shadow.hpp"
#include "artinacyl/wpd.hpp"

using namespace artinacyl;

namespace {

DefiningGraph load(const char* name) {
  std::ifstream in(std::string(ARTINACYL_BENCH_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_defining_graph(ss.str());
}

DefiningGraph h4() {
  return parse_defining_graph(
      R"({"vertices":["a","b","c","d"],"edges":[["a","b",5],["b","c",3],["c","d",3],["a","c",2],["a","d",2],["b","d",2]]})");
}

void BM_EnumerateH4(benchmark::State& state) {
  const DefiningGraph g = h4();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(g, 20'000).size());
}
BENCHMARK(BM_EnumerateH4);

void BM_EnumerateHyperbolicCap(benchmark::State& state) {
  const DefiningGraph g = parse_defining_graph(
      R"({"vertices":["a","b","c"],"edges":[["a","b",3],["b","c",3],["a","c",4]]})");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(g, static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateHyperbolicCap)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void BM_TitsReduce(benchmark::State& state) {
  const DefiningGraph g = h4();
  const CoxWord w = {0, 1, 0, 1, 2, 1, 0, 3, 2, 1, 0, 1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g, w).word.size());
}
BENCHMARK(BM_TitsReduce);

void BM_NormalForm(benchmark::State& state) {
  const DefiningGraph g = h4();
  const CoxeterGroup group(g);
  const CoxWord w = {0, 1, 0, 1, 2, 1, 0, 3, 2, 1, 0, 1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(group.normal_form(w).size());
}
BENCHMARK(BM_NormalForm);

void BM_BuildGammaStar(benchmark::State& state) {
  const DefiningGraph g = load("star3.json");
  for (auto _ : state) benchmark::DoNotOptimize(build_gamma(g).gamma.size());
}
BENCHMARK(BM_BuildGammaStar);

void BM_CertifyPentad(benchmark::State& state) {
  const DefiningGraph g = load("pentad.json");
  const GammaPlan plan = build_gamma(g);
  for (auto _ : state) benchmark::DoNotOptimize(certify(g, plan).passed());
}
BENCHMARK(BM_CertifyPentad);

void BM_ShadowH3(benchmark::State& state) {
  const DefiningGraph g = parse_defining_graph(
      R"({"vertices":["a","b","c"],"edges":[["a","b",5],["b","c",3],["a","c",2]]})");
  const JoinDecomposition d = join_decompose(g);
  for (auto _ : state) benchmark::DoNotOptimize(build_shadow(g, d, false).vertices.size());
}
BENCHMARK(BM_ShadowH3);

}  // namespace

BENCHMARK_MAIN();
