#include <benchmark/benchmark.h>

#include "fairdiv/algorithms.hpp"
#include "fairdiv/audit.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/oracle.hpp"

namespace {

fairdiv::Instance make_instance(int goods, fairdiv::ValuationClass cls) {
  fairdiv::GeneratorSpec spec;
  spec.num_agents = 8;
  spec.num_goods = goods;
  spec.num_groups = 4;
  spec.valuation_class = cls;
  spec.seed = 0xBE7C;
  return fairdiv::generate(spec);
}

void BM_Sm(benchmark::State& state) {
  fairdiv::Instance inst =
      make_instance(static_cast<int>(state.range(0)), fairdiv::ValuationClass::AllCommon);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdiv::run_sm(inst).allocation);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sm)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Iwrr(benchmark::State& state) {
  fairdiv::Instance inst =
      make_instance(static_cast<int>(state.range(0)), fairdiv::ValuationClass::General);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdiv::run_iwrr(inst).allocation);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Iwrr)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_SmIwrr(benchmark::State& state) {
  fairdiv::Instance inst =
      make_instance(static_cast<int>(state.range(0)), fairdiv::ValuationClass::AllCommon);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdiv::run_sm_iwrr(inst).allocation);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmIwrr)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_WeightedGreedy(benchmark::State& state) {
  fairdiv::Instance inst =
      make_instance(static_cast<int>(state.range(0)), fairdiv::ValuationClass::AllCommon);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdiv::run_weighted_greedy(inst).allocation);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WeightedGreedy)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_AuditAll(benchmark::State& state) {
  fairdiv::Instance inst =
      make_instance(static_cast<int>(state.range(0)), fairdiv::ValuationClass::GroupCommon);
  fairdiv::Allocation alloc = fairdiv::run_iwrr(inst).allocation;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdiv::audit_all(inst, alloc));
  }
}
BENCHMARK(BM_AuditAll)->RangeMultiplier(4)->Range(64, 1024);

void BM_OracleEnumerate(benchmark::State& state) {
  fairdiv::GeneratorSpec spec;
  spec.num_agents = 3;
  spec.num_goods = static_cast<int>(state.range(0));
  spec.num_groups = 2;
  spec.valuation_class = fairdiv::ValuationClass::GroupCommon;
  spec.seed = 0xBE7C;
  fairdiv::Instance inst = fairdiv::generate(spec);
  fairdiv::Query query;
  query.required = {fairdiv::Notion::Ef1, fairdiv::Notion::Wef1};
  query.mode = fairdiv::Query::Mode::Count;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdiv::enumerate_allocations(inst, query));
  }
}
BENCHMARK(BM_OracleEnumerate)->DenseRange(4, 7, 1);

}  // namespace

BENCHMARK_MAIN();
