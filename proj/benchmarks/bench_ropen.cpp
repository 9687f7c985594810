#include <benchmark/benchmark.h>

#include "ropen/cantor.hpp"
#include "ropen/finball.hpp"
#include "ropen/interval_space.hpp"
#include "ropen/plmap.hpp"

namespace {

using namespace ropen;

void BM_RopenJoin(benchmark::State& state) {
  const SpaceRef x = make_space({Component::interval(0, 1), Component::point(2), Component::interval(3, 4)});
  const auto complexity = static_cast<unsigned>(state.range(0));
  const RopenElem a = random_regular_open(x, 1, complexity);
  const RopenElem b = random_regular_open(x, 2, complexity);
  for (auto _ : state) benchmark::DoNotOptimize(ropen_join(a, b));
}
BENCHMARK(BM_RopenJoin)->Arg(4)->Arg(16)->Arg(64);

void BM_RopenNeg(benchmark::State& state) {
  const SpaceRef x = make_interval_space(0, 1);
  const RopenElem a = random_regular_open(x, 3, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ropen_neg(a));
}
BENCHMARK(BM_RopenNeg)->Arg(4)->Arg(64);

void BM_PsiPhiTent(benchmark::State& state) {
  const SpaceRef x = make_interval_space(0, 1);
  const pl::PLMap tent = pl::through_points(x, x, {{0, 0}, {Rational(1, 2), 1}, {1, 0}});
  const RopenElem v = random_regular_open(x, 4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(pl::psi(tent, pl::phi(tent, v)));
}
BENCHMARK(BM_PsiPhiTent);

void BM_CantorBridge(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  const RopenElem v = cantor::random_dyadic_regular_open(5, depth);
  for (auto _ : state) benchmark::DoNotOptimize(cantor::psi_c(cantor::phi_c(v)));
}
BENCHMARK(BM_CantorBridge)->Arg(4)->Arg(10);

void BM_CylinderCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cantor::check_irreducible_cantor(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CylinderCheck)->Arg(6)->Arg(8);

void BM_GleasonVerify(benchmark::State& state) {
  const auto x = fin::FiniteDiscreteSpace::with_points(static_cast<std::size_t>(state.range(0)));
  const auto cover = fin::gleason_cover(x);
  for (auto _ : state) benchmark::DoNotOptimize(fin::verify_projective_cover(cover));
}
BENCHMARK(BM_GleasonVerify)->Arg(4)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
