#include <benchmark/benchmark.h>

#include "gcx/io.hpp"
#include "gcx/verlinde.hpp"

using namespace gcx;

namespace {

CrossedAlgebra toric_swap_algebra() {
  FrobeniusBase B = io::load_base("toric");
  GAction act = io::load_action("swap", B, cyclic_group(2));
  return construct_extension(act, Cochain::ones(2, 2, 4));
}

void BM_multiply(benchmark::State& state) {
  CrossedAlgebra A = toric_swap_algebra();
  AlgebraElement x;
  x.owner = &A;
  for (const auto& [g, chi] : A.basis) x.coeffs[{g, chi}] = cplx(0.3, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(x, x));
}
BENCHMARK(BM_multiply);

void BM_verlinde_genus0(benchmark::State& state) {
  CrossedAlgebra A = toric_swap_algebra();
  std::vector<std::pair<int, AlgebraElement>> elems;
  for (int g : {1, 1, 0, 0}) elems.emplace_back(g, basis_element(A, g, fixed_characters(A.action, {g})[0]));
  for (auto _ : state) benchmark::DoNotOptimize(verlinde_genus0(A, elems));
}
BENCHMARK(BM_verlinde_genus0);

void BM_diagonalize(benchmark::State& state) {
  FiniteGroup K = klein_four();
  std::vector<std::vector<std::vector<cplx>>> N(
      4, std::vector<std::vector<cplx>>(4, std::vector<cplx>(4, cplx(0))));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) N[i][j][K.mul(i, j)] = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize_fusion_ring(N, K.inverse));
}
BENCHMARK(BM_diagonalize);

void BM_construct(benchmark::State& state) {
  FrobeniusBase B = io::load_base("toric");
  GAction act = io::load_action("swap", B, cyclic_group(2));
  Cochain one = Cochain::ones(2, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(construct_extension(act, one));
}
BENCHMARK(BM_construct);

} // namespace

BENCHMARK_MAIN();
