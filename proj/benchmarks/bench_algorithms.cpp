#include <benchmark/benchmark.h>

#include <map>
#include <tuple>

#include "hyperacyclic/generators.hpp"
#include "hyperacyclic/join_tree.hpp"
#include "hyperacyclic/orderings.hpp"
#include "hyperacyclic/recognition.hpp"
#include "hyperacyclic/sperner.hpp"
#include "hyperacyclic/subset_graph.hpp"
#include "hyperacyclic/union_join.hpp"

using namespace hyperacyclic;

namespace {

// Instances are cached so that generation stays out of the timed region.
const Hypergraph& instance(GenClass kind, std::size_t size, double density) {
  static std::map<std::tuple<GenClass, std::size_t, double>, Hypergraph> cache;
  const auto key = std::make_tuple(kind, size, density);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, generate({kind, size, size, 42, density})).first;
  return it->second;
}

template <class F>
void run(benchmark::State& state, GenClass kind, double density, F f) {
  const Hypergraph& h = instance(kind, static_cast<std::size_t>(state.range(0)), density);
  std::size_t out = 0;
  for (auto _ : state) {
    out = f(h);
    benchmark::DoNotOptimize(out);
  }
  state.counters["N"] = static_cast<double>(h.pin_count());
  state.counters["G"] = static_cast<double>(out);
  state.SetComplexityN(static_cast<benchmark::IterationCount>(h.pin_count()));
}

void BM_JoinTree(benchmark::State& s) {
  run(s, GenClass::alpha, 0.3, [](const Hypergraph& h) { return build_join_tree(h)->parent.size(); });
}
void BM_DoublyLexical(benchmark::State& s) {
  run(s, GenClass::beta, 0.1, [](const Hypergraph& h) { return doubly_lexical_order(h).edge_order.size(); });
}
void BM_PruningSequence(benchmark::State& s) {
  run(s, GenClass::gamma, 0.1, [](const Hypergraph& h) { return pruning_sequence(h)->steps.size(); });
}
void BM_IntervalOrder(benchmark::State& s) {
  run(s, GenClass::interval, 0.3, [](const Hypergraph& h) { return interval_order(h)->edge_order.size(); });
}
void BM_SubsetBaseline(benchmark::State& s) {
  run(s, GenClass::alpha, 0.3, [](const Hypergraph& h) { return subset_graph_baseline(h).edge_count(); });
}
void BM_SubsetBeta(benchmark::State& s) {
  run(s, GenClass::beta, 0.1, [](const Hypergraph& h) { return subset_graph_beta(h).edge_count(); });
}
void BM_SubsetGamma(benchmark::State& s) {
  run(s, GenClass::gamma, 0.1, [](const Hypergraph& h) { return subset_graph_gamma(h).edge_count(); });
}
void BM_SubsetInterval(benchmark::State& s) {
  run(s, GenClass::interval, 0.3, [](const Hypergraph& h) { return subset_graph_interval(h).edge_count(); });
}
void BM_UnionJoinGeneric(benchmark::State& s) {
  run(s, GenClass::alpha, 0.3, [](const Hypergraph& h) {
    return union_join_via_subset(h, [](const Hypergraph& x) { return subset_graph_baseline(x); }).edge_count();
  });
}
void BM_UnionJoinGamma(benchmark::State& s) {
  run(s, GenClass::gamma, 0.1, [](const Hypergraph& h) { return union_join_gamma(h).edge_count(); });
}
void BM_UnionJoinInterval(benchmark::State& s) {
  run(s, GenClass::interval, 0.3, [](const Hypergraph& h) { return union_join_interval(h).edge_count(); });
}
void BM_Sperner(benchmark::State& s) {
  run(s, GenClass::alpha, 0.3, [](const Hypergraph& h) { return static_cast<std::size_t>(sperner_acyclic(h)); });
}
void BM_Classify(benchmark::State& s) {
  run(s, GenClass::gamma, 0.1, [](const Hypergraph& h) { return static_cast<std::size_t>(classify(h).gamma); });
}

}  // namespace

#define SIZES RangeMultiplier(4)->Range(256, 1 << 16)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN)

BENCHMARK(BM_JoinTree)->SIZES;
BENCHMARK(BM_DoublyLexical)->SIZES;
BENCHMARK(BM_PruningSequence)->SIZES;
BENCHMARK(BM_IntervalOrder)->SIZES;
BENCHMARK(BM_SubsetBaseline)->RangeMultiplier(4)->Range(256, 1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetBeta)->SIZES;
BENCHMARK(BM_SubsetGamma)->SIZES;
BENCHMARK(BM_SubsetInterval)->SIZES;
BENCHMARK(BM_UnionJoinGeneric)->RangeMultiplier(4)->Range(256, 1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnionJoinGamma)->SIZES;
BENCHMARK(BM_UnionJoinInterval)->SIZES;
BENCHMARK(BM_Sperner)->SIZES;
BENCHMARK(BM_Classify)->SIZES;

BENCHMARK_MAIN();
