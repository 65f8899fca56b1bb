#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <string>

#include "blockgraph/blockgraph.hpp"
#include "blockgraph/blocks.hpp"
#include "blockgraph/chartab.hpp"
#include "blockgraph/cyclotomic.hpp"
#include "blockgraph/lietype.hpp"
#include "blockgraph/tablegen.hpp"

using namespace blockgraph;

namespace {

const CharacterTable& table(const std::string& name) {
  static std::map<std::string, CharacterTable> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, load_table(std::string(BLOCKGRAPH_BENCH_CORPUS) + "/" + name + ".json")).first;
  }
  return it->second;
}

Cyclotomic random_value(std::mt19937_64& rng, std::uint64_t n) {
  std::vector<Cyclotomic::Term> terms;
  for (int i = 0; i < 6; ++i) terms.push_back({static_cast<std::int64_t>(rng() % n), static_cast<int>(rng() % 21) - 10});
  return cyc_make(n, terms);
}

void BM_CyclotomicMultiply(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::mt19937_64 rng(1);
  const Cyclotomic a = random_value(rng, n);
  const Cyclotomic b = random_value(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(15)->Arg(19)->Arg(60)->Arg(105);

void BM_CyclotomicParse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Cyclotomic::parse("E(19)+E(19)^7+E(19)^8+E(19)^11+E(19)^12+E(19)^18"));
}
BENCHMARK(BM_CyclotomicParse);

void BM_ParseTable(benchmark::State& state) {
  const std::string text = print_table(table("J1"));
  for (auto _ : state) benchmark::DoNotOptimize(parse_table(text));
}
BENCHMARK(BM_ParseTable)->Unit(benchmark::kMillisecond);

void BM_BlockPartition(benchmark::State& state, const std::string& name, std::uint64_t p) {
  const auto& t = table(name);
  for (auto _ : state) benchmark::DoNotOptimize(block_partition(t, p));
}
BENCHMARK_CAPTURE(BM_BlockPartition, J1_p2, std::string("J1"), 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BlockPartition, J1_p19, std::string("J1"), 19)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BlockPartition, L52_p31, std::string("L5(2)"), 31)->Unit(benchmark::kMillisecond);

void BM_BlockGraph(benchmark::State& state, const std::string& name) {
  const auto& t = table(name);
  for (auto _ : state) benchmark::DoNotOptimize(build_block_graph(t));
}
BENCHMARK_CAPTURE(BM_BlockGraph, J1, std::string("J1"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BlockGraph, L52, std::string("L5(2)"))->Unit(benchmark::kMillisecond);

void BM_DixonA6(benchmark::State& state) {
  const auto g = PermGroup::enumerate(6, {{1, 2, 3, 4, 0, 5}, {0, 2, 3, 4, 5, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(dixon_table(g, "A6"));
}
BENCHMARK(BM_DixonA6)->Unit(benchmark::kMillisecond);

void BM_GroupOrderE8(benchmark::State& state) {
  const auto s = make_lie_group(Family::E8, 0, 7);
  for (auto _ : state) benchmark::DoNotOptimize(group_order(s));
}
BENCHMARK(BM_GroupOrderE8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
