#include <benchmark/benchmark.h>

#include <random>

#include "chebsalem/chebbasis.hpp"
#include "chebsalem/families.hpp"
#include "chebsalem/fixtures.hpp"
#include "chebsalem/palindrome.hpp"
#include "chebsalem/rootcert.hpp"
#include "chebsalem/salem.hpp"
#include "chebsalem/search.hpp"

namespace cs = chebsalem;

namespace {

cs::IntPoly random_poly(int degree, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> d(-1000, 1000);
  std::vector<mpz_class> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(d(gen));
  c.emplace_back(1);
  return cs::IntPoly(std::move(c));
}

cs::IntPoly degree18() {
  const auto& c = cs::degree18_coords();
  return cs::from_cheb(cs::ChebCoords(std::vector<mpz_class>(c.begin(), c.end())));
}

}  // namespace

static void BM_ToCheb(benchmark::State& state) {
  const auto p = random_poly(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(cs::to_cheb(p));
}
BENCHMARK(BM_ToCheb)->Arg(8)->Arg(32)->Arg(64);

static void BM_FromCheb(benchmark::State& state) {
  const auto c = cs::to_cheb(random_poly(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(cs::from_cheb(c));
}
BENCHMARK(BM_FromCheb)->Arg(8)->Arg(32)->Arg(64);

static void BM_Lift(benchmark::State& state) {
  const auto p = random_poly(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(cs::lift(p));
}
BENCHMARK(BM_Lift)->Arg(16)->Arg(64);

static void BM_IsolateDegree18(benchmark::State& state) {
  const auto p = degree18();
  for (auto _ : state) benchmark::DoNotOptimize(cs::isolate_real_roots(p));
}
BENCHMARK(BM_IsolateDegree18)->Unit(benchmark::kMillisecond);

static void BM_CompareSpanDegree18(benchmark::State& state) {
  const auto p = degree18();
  for (auto _ : state) benchmark::DoNotOptimize(cs::compare_span(p, 4));
}
BENCHMARK(BM_CompareSpanDegree18)->Unit(benchmark::kMillisecond);

static void BM_ClassifyUnitCircle(benchmark::State& state) {
  const auto g = cs::lift_cheb(cs::coords_of(cs::MinusOne{4, static_cast<int>(state.range(0))}));
  for (auto _ : state) benchmark::DoNotOptimize(cs::classify_unit_circle(g));
}
BENCHMARK(BM_ClassifyUnitCircle)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_StripCyclotomic(benchmark::State& state) {
  const auto p = cs::closed_form_z(cs::Bn{static_cast<int>(state.range(0)), true}).lhs;
  for (auto _ : state) benchmark::DoNotOptimize(cs::strip_cyclotomic(p));
}
BENCHMARK(BM_StripCyclotomic)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_LimitExtremeRoot(benchmark::State& state) {
  const cs::FamilySpec spec = cs::ThreeParam{1, 2, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(cs::limit_extreme_root(spec));
}
BENCHMARK(BM_LimitExtremeRoot)->Unit(benchmark::kMillisecond);

static void BM_EnumerateDegree(benchmark::State& state) {
  cs::SearchConfig cfg;
  cfg.degree = static_cast<int>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(cs::enumerate(cfg));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cs::candidate_count(cfg)));
}
BENCHMARK(BM_EnumerateDegree)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Table8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cs::table8_report());
}
BENCHMARK(BM_Table8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
