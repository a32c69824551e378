#include <benchmark/benchmark.h>

#include "shiftgeom/approximation.hpp"
#include "shiftgeom/automaton.hpp"
#include "shiftgeom/bounds.hpp"
#include "shiftgeom/classify.hpp"
#include "shiftgeom/homotopy.hpp"
#include "shiftgeom/measures.hpp"
#include "shiftgeom/metrics.hpp"
#include "shiftgeom/paths.hpp"
#include "shiftgeom/shifts.hpp"

using namespace shiftgeom;

namespace {

const Alphabet kBinary("01");

ShiftPresentation golden() { return compile_sft({kBinary, {"11"}}); }

void BM_Besicovitch(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  auto x = Configuration::periodic(kBinary, Word(p - 1, '0') + "1");
  auto y = Configuration::periodic(kBinary, Word(p, '1') + "0");
  for (auto _ : state) benchmark::DoNotOptimize(d_besicovitch(x, y));
}
BENCHMARK(BM_Besicovitch)->RangeMultiplier(4)->Range(4, 1024);

void BM_DensityEstimate(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  auto x = WindowSource::of(tprime_window(Rational(1, 3), static_cast<std::size_t>(n)), -n);
  auto y = WindowSource::of(tprime_window(Rational(5, 7), static_cast<std::size_t>(n)), -n);
  for (auto _ : state) benchmark::DoNotOptimize(density_estimate(x, y, n));
  state.SetItemsProcessed(state.iterations() * (2 * n + 1));
}
BENCHMARK(BM_DensityEstimate)->RangeMultiplier(8)->Range(1 << 9, 1 << 18);

void BM_TPrimeWindow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tprime_window(Rational(355, 1024), n));
}
BENCHMARK(BM_TPrimeWindow)->RangeMultiplier(8)->Range(1 << 9, 1 << 18);

void BM_DistanceToShift(benchmark::State& state) {
  auto y = compile_sft({kBinary, {"111", "0000"}});
  auto x = Configuration::periodic(kBinary, "1101110001");
  for (auto _ : state) benchmark::DoNotOptimize(distance_to_shift(x, y));
}
BENCHMARK(BM_DistanceToShift);

void BM_CompileSft(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  SftSpec spec{kBinary, {Word(k, '1'), "0" + Word(k - 2, '1') + "0"}};
  for (auto _ : state) benchmark::DoNotOptimize(shannon_cover(compile_sft(spec)));
}
BENCHMARK(BM_CompileSft)->DenseRange(3, 9, 2);

void BM_ClassifyAllElementary(benchmark::State& state) {
  for (auto _ : state) {
    for (unsigned rule = 0; rule < 256; ++rule) {
      benchmark::DoNotOptimize(classify_full_shift(CellularAutomaton::elementary(rule)));
    }
  }
}
BENCHMARK(BM_ClassifyAllElementary)->Unit(benchmark::kMillisecond);

void BM_CheckOnSubshift(benchmark::State& state) {
  auto x = compile_sft({kBinary, {"111"}});
  auto f = CellularAutomaton::from_function(kBinary, -1, 0, [](std::string_view p) { return p == "01" ? '0' : p[1]; });
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_on_subshift(f, x, p));
}
BENCHMARK(BM_CheckOnSubshift)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_UapSearch(benchmark::State& state) {
  PointedSet x(golden());
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uap_search(x, p));
}
BENCHMARK(BM_UapSearch)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ExtractComplex(benchmark::State& state) {
  auto x = shift_union(shift_union(full_shift(Alphabet("01")), full_shift(Alphabet("12"))), full_shift(Alphabet("02")));
  for (auto _ : state) benchmark::DoNotOptimize(extract_complex(x));
}
BENCHMARK(BM_ExtractComplex);

void BM_ParryMeasure(benchmark::State& state) {
  auto x = compile_sft({kBinary, {Word(static_cast<std::size_t>(state.range(0)), '1')}});
  for (auto _ : state) benchmark::DoNotOptimize(parry_measure(x));
}
BENCHMARK(BM_ParryMeasure)->DenseRange(2, 10, 4);

void BM_GammaCertificate(benchmark::State& state) {
  auto mu = parry_measure(golden());
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto cert = gamma_t_bound(mu, len);
    benchmark::DoNotOptimize(verify_certificate(mu, cert));
  }
}
BENCHMARK(BM_GammaCertificate)->DenseRange(8, 16, 4);

void BM_NeighborhoodCount(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(neighborhood_count(kBinary, "011", n, Rational(1, 4)));
}
BENCHMARK(BM_NeighborhoodCount)->DenseRange(10, 18, 4);

void BM_StirlingGrid(benchmark::State& state) {
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= 20; ++n) {
      for (std::uint64_t m = 2; m <= 6; ++m) {
        for (std::uint64_t p = 1; p < m; ++p) benchmark::DoNotOptimize(verify_stirling_bound(n, m, p));
      }
    }
  }
}
BENCHMARK(BM_StirlingGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
