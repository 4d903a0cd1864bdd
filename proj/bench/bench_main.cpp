#include <benchmark/benchmark.h>

#include <random>

#include "ziggu/codes.hpp"
#include "ziggu/kernels.hpp"
#include "ziggu/loopless.hpp"
#include "ziggu/oracle.hpp"
#include "ziggu/rank.hpp"

using namespace ziggu;
namespace k = ziggu::kernels;

namespace {

void encodings_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(k::serial::count_encodings(st.range(0)));
}
void encodings_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(k::parallel::count_encodings(st.range(0)));
}
BENCHMARK(encodings_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(encodings_parallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void grids_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(k::serial::count_grids(st.range(0)));
}
void grids_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(k::parallel::count_grids(st.range(0)));
}
BENCHMARK(grids_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(grids_parallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void adjacency_serial(benchmark::State& st) {
  const auto codes = oracle::valid_codes(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(k::serial::build_adjacency(st.range(0), codes));
}
void adjacency_parallel(benchmark::State& st) {
  const auto codes = oracle::valid_codes(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(k::parallel::build_adjacency(st.range(0), codes));
}
BENCHMARK(adjacency_serial)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(adjacency_parallel)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

void rank_sweep_serial(benchmark::State& st) {
  const auto l = listing(Kind::Short, st.range(0)).states;
  for (auto _ : st) benchmark::DoNotOptimize(k::serial::rank_mismatches(Kind::Short, l));
}
void rank_sweep_parallel(benchmark::State& st) {
  const auto l = listing(Kind::Short, st.range(0)).states;
  for (auto _ : st) benchmark::DoNotOptimize(k::parallel::rank_mismatches(Kind::Short, l));
}
BENCHMARK(rank_sweep_serial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(rank_sweep_parallel)->Arg(10)->Unit(benchmark::kMillisecond);

// A shortest-solution state of length n: 0^a [12]^b 0 3^c.
QuatString long_ziggu(std::size_t n) {
  std::mt19937_64 rng(n);
  std::string w(n / 10, '0');
  while (w.size() < 3 * n / 4) w += (rng() & 1) ? '1' : '2';
  w += '0';
  w += std::string(n - w.size(), '3');
  return parse(w);
}

void rank_short_n(benchmark::State& st) {
  const auto q = long_ziggu(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(rank_short(q));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(rank_short_n)->RangeMultiplier(2)->Range(256, 8192)->Complexity()->Unit(benchmark::kMicrosecond);

void loopless_short(benchmark::State& st) {
  std::uint64_t states = 0;
  for (auto _ : st) {
    ParityGenerator g(st.range(0));
    while (g.next()) ++states;
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(states));
}
BENCHMARK(loopless_short)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void cursor_short(benchmark::State& st) {
  std::uint64_t states = 0;
  for (auto _ : st) {
    ListingCursor c(Kind::Short, st.range(0));
    while (c.advance()) ++states;
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(states));
}
BENCHMARK(cursor_short)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
