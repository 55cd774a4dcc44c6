#include <benchmark/benchmark.h>

#include <vector>

#include "fourgeo/kernels/geography.hpp"
#include "fourgeo/kernels/ledger.hpp"
#include "fourgeo/knots/knot.hpp"

namespace {

using namespace fourgeo;

void BM_GeographySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::geography_scan_serial(2, state.range(0)));
}
void BM_GeographyParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::geography_scan(2, state.range(0)));
}
BENCHMARK(BM_GeographySerial)->Arg(100)->Arg(1000);
BENCHMARK(BM_GeographyParallel)->Arg(100)->Arg(1000);

struct LedgerInput {
  LaurentPoly base;
  std::vector<LaurentPoly> alexanders;
};

LedgerInput ledger_input(long count) {
  LedgerInput in{*torus_knot(2, 1029).alexander, {}};
  in.base = in.base.substitute_square();
  for (long k = 1; k <= count; ++k) in.alexanders.push_back(*torus_knot(2, 2 * k + 1).alexander);
  return in;
}

void BM_LedgersSerial(benchmark::State& state) {
  const auto in = ledger_input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::surgery_ledgers_serial(in.base, in.alexanders));
}
void BM_LedgersParallel(benchmark::State& state) {
  const auto in = ledger_input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::surgery_ledgers(in.base, in.alexanders));
}
BENCHMARK(BM_LedgersSerial)->Arg(50)->Arg(200);
BENCHMARK(BM_LedgersParallel)->Arg(50)->Arg(200);

void BM_CollisionsSerial(benchmark::State& state) {
  const auto in = ledger_input(state.range(0));
  const auto ledgers = kernels::surgery_ledgers(in.base, in.alexanders);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_collisions_serial(ledgers));
}
void BM_CollisionsParallel(benchmark::State& state) {
  const auto in = ledger_input(state.range(0));
  const auto ledgers = kernels::surgery_ledgers(in.base, in.alexanders);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_collisions(ledgers));
}
BENCHMARK(BM_CollisionsSerial)->Arg(200);
BENCHMARK(BM_CollisionsParallel)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
