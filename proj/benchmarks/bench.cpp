#include <benchmark/benchmark.h>

#include "lgorb/cases.hpp"
#include "lgorb/qseries.hpp"

using namespace lgorb;

namespace {

CaseName case_of(int idx) {
  switch (idx) {
    case 0: return CaseName::kZ3;
    case 1: return CaseName::kZ4;
    default: return CaseName::kZ6;
  }
}

void BM_JacobianBuild(benchmark::State& state) {
  CaseDefinition def = builtin_case(case_of(state.range(0)));
  for (auto _ : state) {
    JacobianRing jac = case_jacobian(def);
    benchmark::DoNotOptimize(jac.milnor_number());
  }
}
BENCHMARK(BM_JacobianBuild)->Arg(0)->Arg(1)->Arg(2);

void BM_Sigma(benchmark::State& state) {
  CaseDefinition def = builtin_case(case_of(state.range(0)));
  GroupElement last{def.orbifold.group().order() - 1};
  for (auto _ : state) {
    Polynomial s = sigma(def.orbifold, GroupElement{1}, last);
    benchmark::DoNotOptimize(s.is_zero());
  }
}
BENCHMARK(BM_Sigma)->Arg(0)->Arg(1)->Arg(2);

void BM_PointClass(benchmark::State& state) {
  CaseDefinition def = builtin_case(case_of(state.range(0)));
  for (auto _ : state) {
    TwistedElement p = ks_point_class(def);
    benchmark::DoNotOptimize(p.is_zero());
  }
}
BENCHMARK(BM_PointClass)->Arg(0)->Arg(1)->Arg(2);

void BM_SeriesIdentity(benchmark::State& state) {
  SeriesCase which = state.range(0) == 0 ? SeriesCase::kZ3 : SeriesCase::kZ4;
  int order = static_cast<int>(state.range(1));
  for (auto _ : state) {
    SeriesIdentityReport r = verify_series_identity(which, order);
    benchmark::DoNotOptimize(r.holds);
  }
}
BENCHMARK(BM_SeriesIdentity)
    ->Args({0, 200})
    ->Args({0, 400})
    ->Args({1, 200})
    ->Args({1, 400});

}  // namespace

BENCHMARK_MAIN();
