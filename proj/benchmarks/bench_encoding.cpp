#include <random>

#include <benchmark/benchmark.h>

#include "fmw/aristotelian.hpp"
#include "fmw/structure.hpp"

using namespace fmw;

namespace {

Structure random_digraph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Structure a(Vocabulary::parse("E:2"), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng() % 3 == 0) a.add("E", {i, j});
  return a;
}

Structure random_unary(int m, int n, std::uint64_t seed) {
  std::string text;
  for (int i = 1; i <= m; ++i) text += "R" + std::to_string(i) + ":1 ";
  std::mt19937_64 rng(seed);
  Structure a(Vocabulary::parse(text), n);
  for (int i = 1; i <= m; ++i)
    for (int x = 0; x < n; ++x)
      if (rng() % 2) a.add("R" + std::to_string(i), {x});
  return a;
}

void BM_encode_bin(benchmark::State& state) {
  const auto a = random_digraph(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(encode_bin(a));
}
BENCHMARK(BM_encode_bin)->RangeMultiplier(4)->Range(4, 256);

void BM_decode_bin(benchmark::State& state) {
  const auto a = random_digraph(static_cast<int>(state.range(0)), 2);
  const auto bits = encode_bin(a);
  for (auto _ : state) benchmark::DoNotOptimize(decode_bin(a.vocab(), bits));
}
BENCHMARK(BM_decode_bin)->RangeMultiplier(4)->Range(4, 256);

void BM_isomorphic_digraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = random_digraph(n, 3);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = (i + 1) % n;
  const auto b = a.permuted(perm);
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(a, b));
}
BENCHMARK(BM_isomorphic_digraph)->DenseRange(3, 7);

void BM_benc(benchmark::State& state) {
  const auto a = random_unary(static_cast<int>(state.range(0)), 1000, 4);
  for (auto _ : state) benchmark::DoNotOptimize(benc(a));
}
BENCHMARK(BM_benc)->DenseRange(1, 4);

void BM_uenc_length(benchmark::State& state) {
  const auto a = random_unary(2, static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(uenc_length(a));
}
BENCHMARK(BM_uenc_length)->RangeMultiplier(8)->Range(8, 4096);

void BM_reconstruct(benchmark::State& state) {
  const auto a = random_unary(2, static_cast<int>(state.range(0)), 6);
  const auto code = benc(a);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(a.vocab(), code));
}
BENCHMARK(BM_reconstruct)->RangeMultiplier(8)->Range(8, 4096);

}  // namespace

BENCHMARK_MAIN();
