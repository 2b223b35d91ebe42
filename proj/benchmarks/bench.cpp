#include <benchmark/benchmark.h>

#include "schubert/structconst.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

void BM_BilleyA4(benchmark::State& state) {
  auto a4 = cartan_from_string("A4");
  auto w = WeylElement::from_word(a4, {3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(billey(a4, w, {2, 3, 2, 1, 2}));
}
BENCHMARK(BM_BilleyA4);

void BM_BilleyLongWord(benchmark::State& state) {
  auto a3 = cartan_from_string("A3");
  Word w0 = longest_element(a3).reduced_word();
  Word doubled = w0;
  doubled.insert(doubled.end(), w0.begin(), w0.end());
  auto w = WeylElement::from_word(a3, {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(billey(a3, w, doubled));
}
BENCHMARK(BM_BilleyLongWord);

void BM_PsiA4(benchmark::State& state) {
  auto a4 = cartan_from_string("A4");
  auto w = WeylElement::from_word(a4, {3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(psi(a4, w, {2, 3, 2, 1, 2}));
}
BENCHMARK(BM_PsiA4);

void BM_StructConstG2(benchmark::State& state) {
  auto g2 = cartan_from_string("G2");
  auto u = WeylElement::from_word(g2, {2, 1, 2});
  auto v = WeylElement::from_word(g2, {1, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(struct_const(g2, u, v, {1, 2, 1, 2}));
}
BENCHMARK(BM_StructConstG2);

void BM_ProductBasisA3(benchmark::State& state) {
  auto a3 = cartan_from_string("A3");
  auto u = WeylElement::from_word(a3, {3, 2, 1});
  auto v = WeylElement::from_word(a3, {3, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(product_in_basis(a3, u, v, {3, 2, 1, 3, 2, 3}));
}
BENCHMARK(BM_ProductBasisA3);

void BM_EulerDelta(benchmark::State& state) {
  BottTowerSpec spec;
  spec.size = (int)state.range(0);
  long v = -2;
  for (int i = 1; i <= spec.size; ++i)
    for (int j = i + 1; j <= spec.size; ++j) spec.set(i, j, ((i + j) % 5) - 2 + (v = -v) * 0);
  Mask full = Mask::full(spec.size);
  auto table = mu_table(spec, Mask::empty(spec.size), full);
  for (auto _ : state) benchmark::DoNotOptimize(euler_char(spec, table, full));
}
BENCHMARK(BM_EulerDelta)->Arg(4)->Arg(6)->Arg(8);

void BM_PositiveRootsF4(benchmark::State& state) {
  auto f4 = cartan_from_string("F4");
  for (auto _ : state) benchmark::DoNotOptimize(positive_roots(f4));
}
BENCHMARK(BM_PositiveRootsF4);

void BM_PsiAxiomsB2(benchmark::State& state) {
  auto b2 = cartan_from_string("B2");
  for (auto _ : state) benchmark::DoNotOptimize(verify_psi_characterization(b2));
}
BENCHMARK(BM_PsiAxiomsB2);

}  // namespace

BENCHMARK_MAIN();
