#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "statfan/design.hpp"
#include "statfan/fan.hpp"
#include "statfan/groebner.hpp"
#include "statfan/matrix.hpp"

using namespace statfan;

namespace {

Design load(const std::string& name) {
  return load_design_file(std::string(STATFAN_DATA_DIR) + "/" + name).design;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

void BM_RankDense(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(dim, dim, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankDense)->Arg(8)->Arg(16)->Arg(32);

void BM_GreedyHis(benchmark::State& state) {
  Design d2 = load("d2.csv");
  PriorityPolicy policy = PriorityPolicy::degree_stepped(MonomialOrder(OrderKind::grevlex, 4));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_his(d2, policy));
}
BENCHMARK(BM_GreedyHis);

void BM_GreedyFanD2(benchmark::State& state) {
  Design d2 = load("d2.csv");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_greedy_fan(d2).size());
}
BENCHMARK(BM_GreedyFanD2)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveFanD1(benchmark::State& state) {
  Design d1 = load("d1.csv");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_statistical_fan(d1).size());
}
BENCHMARK(BM_ExhaustiveFanD1)->Unit(benchmark::kMillisecond);

void BM_VanishingIdeal(benchmark::State& state) {
  Design d3 = load("d3.csv");
  MonomialOrder order(static_cast<OrderKind>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_ideal_gb(d3, order).quotient_basis.size());
}
BENCHMARK(BM_VanishingIdeal)->Arg(0)->Arg(1)->Arg(2);

void BM_AlgebraicSweepD3(benchmark::State& state) {
  Design d3 = load("d3.csv");
  std::vector<OrderKind> kinds{OrderKind::lex, OrderKind::grlex, OrderKind::grevlex};
  for (auto _ : state) benchmark::DoNotOptimize(algebraic_fan_sweep(d3, kinds, false).size());
}
BENCHMARK(BM_AlgebraicSweepD3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
