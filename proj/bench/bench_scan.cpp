#include <benchmark/benchmark.h>

#include "algf/almost.hpp"
#include "algf/enumerate.hpp"
#include "algf/groupoid.hpp"
#include "algf/kernel.hpp"

namespace {

using algf::ExecutionPolicy;

std::vector<std::string> points(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

ExecutionPolicy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecutionPolicy::serial
                             : ExecutionPolicy::parallel;
}

void BM_VerifyPairGroupoid(benchmark::State& state) {
  const auto t = algf::pair_groupoid(points(static_cast<int>(state.range(1))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(algf::verify_groupoid(t, policy_of(state)));
  }
}
BENCHMARK(BM_VerifyPairGroupoid)->ArgsProduct({{0, 1}, {4, 6}});

void BM_VerifyB2Zn(benchmark::State& state) {
  const auto t = algf::b2_zn_almost_groupoid(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        algf::verify_almost_groupoid(t, policy_of(state)));
  }
}
BENCHMARK(BM_VerifyB2Zn)->ArgsProduct({{0, 1}, {8, 16}});

void BM_CanonicalForm(benchmark::State& state) {
  const auto t = algf::b2_zn_almost_groupoid(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(algf::canonical_form(t, policy_of(state)));
  }
}
BENCHMARK(BM_CanonicalForm)->ArgsProduct({{0, 1}, {0}});

void BM_EnumerateAlmost(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        algf::enumerate_almost_groupoids(6, 2, std::nullopt, policy_of(state)));
  }
}
BENCHMARK(BM_EnumerateAlmost)->ArgsProduct({{0, 1}, {0}});

}  // namespace

BENCHMARK_MAIN();
