#include <benchmark/benchmark.h>

#include "ideal_lab/arrangement.hpp"
#include "ideal_lab/ideals.hpp"
#include "ideal_lab/macdonald.hpp"
#include "ideal_lab/rootsys.hpp"
#include "ideal_lab/weyl.hpp"
#include "ideal_lab/weylcomb.hpp"

using namespace ideal_lab;

namespace {

const RootSystem& b3() {
  static RootSystem rs = RootSystem::build(TypeLetter::B, 3);
  return rs;
}

const WeylGroup& b3_weyl() {
  static WeylGroup W = WeylGroup::enumerate(b3());
  return W;
}

Ideal empty_ideal(const RootSystem& rs) {
  return make_ideal(rs, IndexSet{});
}

void BM_BuildRootSystem_E8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem::build(TypeLetter::E, 8));
}
BENCHMARK(BM_BuildRootSystem_E8);

void BM_EnumerateWeyl_B4(benchmark::State& state) {
  RootSystem rs = RootSystem::build(TypeLetter::B, 4);
  for (auto _ : state) benchmark::DoNotOptimize(WeylGroup::enumerate(rs));
}
BENCHMARK(BM_EnumerateWeyl_B4);

void BM_EnumerateIdeals_F4(benchmark::State& state) {
  RootSystem rs = RootSystem::build(TypeLetter::F, 4);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(rs));
}
BENCHMARK(BM_EnumerateIdeals_F4);

void BM_EnumerateIdeals_E6(benchmark::State& state) {
  RootSystem rs = RootSystem::build(TypeLetter::E, 6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(rs));
}
BENCHMARK(BM_EnumerateIdeals_E6);

void BM_PoincareAllIdeals_B3(benchmark::State& state) {
  const RootSystem& rs = b3();
  const WeylGroup& W = b3_weyl();
  auto ideals = enumerate_ideals(rs);
  for (auto _ : state)
    for (const Ideal& I : ideals) benchmark::DoNotOptimize(poincare_poly(W, I));
}
BENCHMARK(BM_PoincareAllIdeals_B3);

void BM_CharPolyLattice_B3(benchmark::State& state) {
  Arrangement arr = build_ideal_arrangement(b3(), empty_ideal(b3()));
  for (auto _ : state)
    benchmark::DoNotOptimize(char_poly(arr, CharPolyMethod::lattice));
}
BENCHMARK(BM_CharPolyLattice_B3);

void BM_CharPolyFiniteField_B3(benchmark::State& state) {
  Arrangement arr = build_ideal_arrangement(b3(), empty_ideal(b3()));
  for (auto _ : state)
    benchmark::DoNotOptimize(char_poly(arr, CharPolyMethod::finite_field));
}
BENCHMARK(BM_CharPolyFiniteField_B3);

void BM_FreenessCertificate_B3(benchmark::State& state) {
  Arrangement arr = build_ideal_arrangement(b3(), empty_ideal(b3()));
  for (auto _ : state) benchmark::DoNotOptimize(freeness_certificate(arr));
}
BENCHMARK(BM_FreenessCertificate_B3);

void BM_ChamberPoly_B3(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(chamber_poly(b3(), b3_weyl(), empty_ideal(b3())));
}
BENCHMARK(BM_ChamberPoly_B3);

void BM_Macdonald_B3(benchmark::State& state) {
  IndexSet all = b3().all_roots_mask();
  for (auto _ : state) benchmark::DoNotOptimize(macdonald_lhs(b3(), b3_weyl(), all));
}
BENCHMARK(BM_Macdonald_B3);

}  // namespace

BENCHMARK_MAIN();
