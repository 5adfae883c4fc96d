#include <benchmark/benchmark.h>

#include "kron/diamond.hpp"
#include "kron/engine.hpp"
#include "kron/fanhex.hpp"
#include "kron/lattice.hpp"
#include "kron/semiinv.hpp"
#include "kron/symfunc.hpp"

namespace {

void BM_ConeInequalities(benchmark::State& st) {
  const int l = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kron::cone_inequalities(l));
}
BENCHMARK(BM_ConeInequalities)->DenseRange(2, 6);

void BM_EnumerateStaircase(benchmark::State& st) {
  // sigma = (-1,...,-1; 1,...,1), i.e. mu = nu = (l, l-1, ..., 1).
  const int l = static_cast<int>(st.range(0));
  kron::Weight w(l, std::vector<long long>(static_cast<std::size_t>(l), -1),
                 std::vector<long long>(static_cast<std::size_t>(l), 1));
  auto s = kron::diamond_section(l, w);
  std::size_t n = 0;
  for (auto _ : st) n = kron::count(s);
  st.counters["points"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateStaircase)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_KroneckerMethods(benchmark::State& st) {
  const auto method = static_cast<kron::Method>(st.range(0));
  kron::KroneckerQuery q{{4, 3, 1}, {3, 3, 2}, {5, 3}, 0};
  for (auto _ : st) {
    kron::clear_memo();
    benchmark::DoNotOptimize(kron::kronecker(q, method).value());
  }
  st.SetLabel(kron::method_name(method));
}
BENCHMARK(BM_KroneckerMethods)
    ->Arg(static_cast<int>(kron::Method::Polytope))
    ->Arg(static_cast<int>(kron::Method::Characters))
    ->Arg(static_cast<int>(kron::Method::Lr))
    ->Unit(benchmark::kMillisecond);

void BM_FamilyTwo(benchmark::State& st) {
  kron::KroneckerQuery q{{5, 4, 3}, {4, 3, 2, 2, 1}, {9, 3}, 0};
  for (auto _ : st) benchmark::DoNotOptimize(kron::kronecker(q).value());
}
BENCHMARK(BM_FamilyTwo)->Unit(benchmark::kMillisecond);

void BM_LrCoeff(benchmark::State& st) {
  for (auto _ : st) {
    kron::clear_memo();
    benchmark::DoNotOptimize(kron::lr_coeff({6, 5, 4, 2}, {4, 3, 2}, {3, 3, 2}));
  }
}
BENCHMARK(BM_LrCoeff);

void BM_ExchangeTrials(benchmark::State& st) {
  const int l = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kron::verify_exchange(l, 5, 1).checks);
}
BENCHMARK(BM_ExchangeTrials)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_FanHilbert(benchmark::State& st) {
  auto fan = kron::diamond2_fan();
  for (auto _ : st) benchmark::DoNotOptimize(kron::fan_hilbert(fan));
}
BENCHMARK(BM_FanHilbert)->Unit(benchmark::kMillisecond);

void BM_TuBlocks(benchmark::State& st) {
  const int l = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kron::check_tu_blocks(l).ok);
}
BENCHMARK(BM_TuBlocks)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
