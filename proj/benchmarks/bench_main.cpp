#include <benchmark/benchmark.h>

#include <random>

#include "qgoppa/goppa.hpp"
#include "qgoppa/oracle.hpp"
#include "qgoppa/quantum.hpp"
#include "qgoppa/tower.hpp"

using namespace qgoppa;

namespace {

Curve quintic() { return Curve::make(Poly::parse(Field::make(19), "(x-1)*(x-2)*(x-3)*(x-4)*(x-5)")); }

void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::make(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  std::mt19937_64 rng(1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = f.from_int(static_cast<std::int64_t>(rng() % f.q()));
  Elem acc = f.one();
  for (auto _ : state) {
    for (const Elem& x : xs) acc = f.add(f.mul(acc, x), x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Args({19, 1})->Args({3, 3})->Args({19, 3});

void BM_FieldInv(benchmark::State& state) {
  const Field f = Field::make(19, 3);
  Elem x = f.gen();
  for (auto _ : state) {
    x = f.add(f.inv(x), f.one());
    if (x == Elem{}) x = f.gen();
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldInv);

void BM_RationalPlaces(benchmark::State& state) {
  const Field f = Field::make(19, static_cast<std::uint32_t>(state.range(0)));
  const Curve c = Curve::make(Poly::parse(f, "x^5 + 3*x^2 + x + 7"));
  for (auto _ : state) benchmark::DoNotOptimize(c.rational_places());
}
BENCHMARK(BM_RationalPlaces)->Arg(1)->Arg(2)->Arg(3);

void BM_BuildGoppaGf19(benchmark::State& state) {
  const Curve c = quintic();
  for (auto _ : state) benchmark::DoNotOptimize(build_goppa(c, 7, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildGoppaGf19)->Arg(1)->Arg(2);

void BM_DirectConstructGf19(benchmark::State& state) {
  const Curve c = quintic();
  for (auto _ : state) benchmark::DoNotOptimize(direct_construct(c, 7, 1));
}
BENCHMARK(BM_DirectConstructGf19);

void BM_SupportDistanceGf19(benchmark::State& state) {
  const StabilizerCode s = direct_construct(quintic(), 7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quantum_distance_by_support(s));
}
BENCHMARK(BM_SupportDistanceGf19)->Arg(1)->Arg(2);

void BM_BruteForceDistanceCssGf7(benchmark::State& state) {
  const Field f = Field::make(7);
  const StabilizerCode s = css(LinearCode(Matrix::from_ints(f, {{3, 3, 4}})), LinearCode(Matrix::from_ints(f, {{5, 3, 1}})));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_force_quantum_distance(s));
}
BENCHMARK(BM_BruteForceDistanceCssGf7);

void BM_Rref(benchmark::State& state) {
  const Field f = Field::make(19, 3);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  Matrix m(f, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < 2 * n; ++c) m.at(r, c) = f.from_int(static_cast<std::int64_t>(rng() % f.q()));
  for (auto _ : state) benchmark::DoNotOptimize(m.rref());
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(64)->Arg(128);

void BM_ProjectGf27(benchmark::State& state) {
  const Field f = Field::make(3, 3);
  const Curve c = Curve::make(Poly::parse(f, "x^5 + 2*x + 1"));
  const StabilizerCode s = direct_construct(c, std::min<std::size_t>(8, c.split_pairs().size()), 2);
  for (auto _ : state) benchmark::DoNotOptimize(project_to_base(s));
}
BENCHMARK(BM_ProjectGf27);

void BM_TowerSweep(benchmark::State& state) {
  for (auto _ : state)
    for (int j = 0; j <= 24; ++j) benchmark::DoNotOptimize(matsumoto_bounds(2, 2, j));
}
BENCHMARK(BM_TowerSweep);

}  // namespace

BENCHMARK_MAIN();
