#include <benchmark/benchmark.h>

#include "blockwitness/degrees.hpp"
#include "blockwitness/oracle.hpp"
#include "blockwitness/partition.hpp"
#include "blockwitness/witness.hpp"

namespace bw = blockwitness;

static void BM_DegreesOfAllPartitions(benchmark::State& state) {
  const auto parts = bw::partitions_of(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& lambda : parts) benchmark::DoNotOptimize(bw::degree(lambda));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parts.size()));
}
BENCHMARK(BM_DegreesOfAllPartitions)->Arg(12)->Arg(20)->Arg(28);

static void BM_PCore(benchmark::State& state) {
  const auto parts = bw::partitions_of(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& lambda : parts) benchmark::DoNotOptimize(bw::p_core(lambda, 3));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parts.size()));
}
BENCHMARK(BM_PCore)->Arg(12)->Arg(20)->Arg(28);

static void BM_ConstructWitness(benchmark::State& state) {
  const auto n = static_cast<bw::Natural>(state.range(0));
  for (auto _ : state) {
    const auto primes = bw::primes_up_to(n);
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        try {
          benchmark::DoNotOptimize(bw::construct_witness(n, primes[j], primes[i]));
        } catch (const bw::CaseTreeFalsified&) {
        }
      }
  }
}
BENCHMARK(BM_ConstructWitness)->Arg(30)->Arg(200);

static void BM_OracleData(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bw::SymmetricGroupData(static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_OracleData)->Arg(20)->Arg(28)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
