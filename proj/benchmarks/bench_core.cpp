#include <benchmark/benchmark.h>

#include <fstream>
#include <map>
#include <sstream>

#include "threepage/nsis.hpp"
#include "threepage/pipeline.hpp"

using namespace threepage;

namespace {

const PlaneDiagram& diagram(const std::string& name) {
  static const std::vector<CorpusEntry> entries = [] {
    std::ifstream f(THREEPAGE_CORPUS);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_corpus(ss.str());
  }();
  static std::map<std::string, PlaneDiagram> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  for (const auto& e : entries) {
    if (e.name == name) return cache.emplace(name, parse_pd(e.pd)).first->second;
  }
  throw std::runtime_error("no corpus entry " + name);
}

const char* const kNames[] = {"3_1", "4_1", "6_2^3", "7_1", "8_18", "8_1^2"};

void BM_ExactMaxFaces(benchmark::State& state) {
  const CellComplex cx(diagram(kNames[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(exact_max_faces(cx));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_ExactMaxFaces)->DenseRange(0, 5);

void BM_NsisExact(benchmark::State& state) {
  const CellComplex cx(diagram(kNames[state.range(0)]));
  const auto g = SimpleGraph::from_dual(dual_graph(cx));
  for (auto _ : state) benchmark::DoNotOptimize(nsis_exact(g));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_NsisExact)->DenseRange(0, 5);

void BM_BoundarySequence(benchmark::State& state) {
  const CellComplex cx(diagram(kNames[state.range(0)]));
  const auto y = exact_max_faces(cx).tree;
  for (auto _ : state) benchmark::DoNotOptimize(boundary_sequence(y, cx));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_BoundarySequence)->DenseRange(0, 5);

void BM_Certify(benchmark::State& state) {
  const CellComplex cx(diagram(kNames[state.range(0)]));
  CertifyOptions opt;
  opt.exact = true;
  for (auto _ : state) benchmark::DoNotOptimize(certify(cx, opt));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_Certify)->DenseRange(0, 5);

}  // namespace

BENCHMARK_MAIN();
