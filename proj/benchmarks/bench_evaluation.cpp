#include <random>

#include <benchmark/benchmark.h>

#include "fmw/cfg.hpp"
#include "fmw/charsets.hpp"
#include "fmw/eval.hpp"
#include "fmw/forms.hpp"
#include "fmw/machine.hpp"
#include "fmw/operators.hpp"
#include "fmw/syntax.hpp"

using namespace fmw;

namespace {

Structure random_digraph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Structure a(Vocabulary::parse("E:2"), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng() % 4 == 0) a.add("E", {i, j});
  return a;
}

void run_checker(benchmark::State& state, const char* text) {
  const auto a = random_digraph(static_cast<int>(state.range(0)), 7);
  const ModelChecker mc(parse_formula(text), a.vocab());
  for (auto _ : state) benchmark::DoNotOptimize(mc(a));
}

void BM_fo_triangle(benchmark::State& state) { run_checker(state, "Ex Ey Ez ((E(x,y) & E(y,z)) & E(z,x))"); }
BENCHMARK(BM_fo_triangle)->RangeMultiplier(2)->Range(4, 64);

void BM_tc_strongly_connected(benchmark::State& state) { run_checker(state, "Ax Ay TC[u,v: E(u,v)](x,y)"); }
BENCHMARK(BM_tc_strongly_connected)->RangeMultiplier(2)->Range(4, 32);

void BM_lfp_reachability(benchmark::State& state) {
  run_checker(state, "Ax Ay LFP[Q,u,v: ((u = v | E(u,v)) | Ew (Q(u,w) & E(w,v)))](x,y)");
}
BENCHMARK(BM_lfp_reachability)->RangeMultiplier(2)->Range(4, 16);

void BM_so_two_colorability(benchmark::State& state) {
  run_checker(state, "EC:1 Ax Ay (E(x,y) -> ((C(x) & ~C(y)) | (~C(x) & C(y))))");
}
BENCHMARK(BM_so_two_colorability)->DenseRange(3, 10);

void BM_simulate_identity(benchmark::State& state) {
  const auto a = random_digraph(static_cast<int>(state.range(0)), 8);
  const auto input = encode_bin(a);
  const auto oracle = sentence_oracle(parse_formula("Ex Ey E(x,y)"), a.vocab());
  const auto t = identity_machine();
  for (auto _ : state) benchmark::DoNotOptimize(simulate(t, input, oracle));
}
BENCHMARK(BM_simulate_identity)->RangeMultiplier(2)->Range(2, 32);

void BM_member_S_unord(benchmark::State& state) {
  const auto a = random_digraph(static_cast<int>(state.range(0)), 9);
  const auto edge = apply_T_unord(parse_formula("Ex Ey R(x,y)"), a.vocab());
  const auto t = identity_machine();
  for (auto _ : state) benchmark::DoNotOptimize(member_S_unord(a, edge, t, edge));
}
BENCHMARK(BM_member_S_unord)->DenseRange(2, 5);

void BM_cyk(benchmark::State& state) {
  const auto g = parse_grammar("alphabet x + * ( )\nE -> E + T | T\nT -> T * F | F\nF -> ( E ) | x");
  const CykRecognizer cyk(g);
  std::string w = "x";
  while (w.size() < static_cast<std::size_t>(state.range(0))) w += "+(x*x)";
  for (auto _ : state) benchmark::DoNotOptimize(cyk(w));
}
BENCHMARK(BM_cyk)->RangeMultiplier(4)->Range(8, 256);

void BM_enumerate_unord6(benchmark::State& state) {
  const auto tau = Vocabulary::parse("E:2");
  const auto ups = parse_formula("Ex Ey R(x,y)");
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_logic(FormKind::Unord6, ComplexityClass::NP, tau, ups,
                                             static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_enumerate_unord6)->RangeMultiplier(4)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
