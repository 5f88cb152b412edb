#include <benchmark/benchmark.h>

#include <vector>

#include "sn/sn.hpp"

namespace {

std::vector<sn::Element> elements(int n, int count, int terms, int exp) {
  sn::Sampler rng(3);
  std::vector<sn::Element> out;
  for (int k = 0; k < count; ++k) out.push_back(rng.element(n, terms, exp));
  return out;
}

std::vector<sn::GeneratorWord> corank_one_words(int n, int count, int length) {
  sn::Sampler rng(5);
  std::vector<sn::GeneratorWord> out;
  for (int k = 0; k < count; ++k) out.push_back(rng.corank_one_word(n, length));
  return out;
}

void BM_Multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto xs = elements(n, 16, static_cast<int>(state.range(1)), 4);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[k % 16] * xs[(k + 5) % 16]);
    ++k;
  }
}
BENCHMARK(BM_Multiply)->ArgsProduct({{1, 2, 3}, {4, 16}});

void BM_ToMixed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto xs = elements(n, 16, 8, 4);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sn::to_mixed(xs[k++ % 16]));
}
BENCHMARK(BM_ToMixed)->DenseRange(1, 3);

void BM_IndexCorner(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sn::Element one = sn::Element::one(n);
  const sn::Element a = one + (sn::Element::y(n, 1) - one) * sn::idempotent(n, sn::CoordSet::full(n).without(1));
  for (auto _ : state) benchmark::DoNotOptimize(sn::index(a));
}
BENCHMARK(BM_IndexCorner)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_IndexTheta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sn::Element t = sn::theta(n, sn::CoordSet::full(n), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sn::ind_vector(t));
}
BENCHMARK(BM_IndexTheta)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_DetDegree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto words = corank_one_words(n, 8, 4);
  std::vector<sn::Element> us;
  for (const auto& w : words) us.push_back(sn::word_to_element(w));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sn::ind_i_det(us[k++ % us.size()], 1));
}
BENCHMARK(BM_DetDegree)->DenseRange(2, 3);

void BM_FactorAnn1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto words = corank_one_words(n, 8, 3);
  std::vector<std::pair<sn::Element, sn::Element>> us;
  for (const auto& w : words) us.emplace_back(sn::word_to_element(w), sn::word_to_element(sn::word_inverse(w)));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [u, v] = us[k++ % us.size()];
    benchmark::DoNotOptimize(sn::factor_ann1(u, v));
  }
}
BENCHMARK(BM_FactorAnn1)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
