#include "liecheck/coinvariants.hpp"
#include "liecheck/highest_weight.hpp"
#include "liecheck/lie_algebra.hpp"
#include "liecheck/peterson.hpp"

#include <benchmark/benchmark.h>

#include <memory>

using namespace liecheck;

namespace {

std::shared_ptr<const TypeContext> context(const char* label) {
  return std::make_shared<const TypeContext>(parse_type(label));
}

void BM_ChevalleyBasis(benchmark::State& state) {
  const auto d = RootDatum::build(parse_type("G2"));
  for (auto _ : state) benchmark::DoNotOptimize(LieAlgebraTable::build(d));
}
BENCHMARK(BM_ChevalleyBasis);

void BM_BuildIrrep(benchmark::State& state) {
  const auto d = RootDatum::build(parse_type("B3"));
  const Weight lambda{1, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(build_irrep(d, lambda));
}
BENCHMARK(BM_BuildIrrep);

void BM_Peterson(benchmark::State& state) {
  const auto ctx = context("A3");
  for (auto _ : state) {
    Instance inst(ctx, {1, 1, 1});
    benchmark::DoNotOptimize(verify_peterson(inst));
  }
}
BENCHMARK(BM_Peterson)->Unit(benchmark::kMillisecond);

void BM_ParabolicCoinvariants(benchmark::State& state) {
  const auto d = RootDatum::build(parse_type("C3"));
  for (auto _ : state) benchmark::DoNotOptimize(parabolic_coinvariant_dims(d, {1, 1, 0}));
}
BENCHMARK(BM_ParabolicCoinvariants)->Unit(benchmark::kMillisecond);

void BM_HilbertIdentity(benchmark::State& state) {
  const auto ctx = context("G2");
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_identity_check(*ctx, 30));
}
BENCHMARK(BM_HilbertIdentity)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
