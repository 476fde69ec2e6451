#include <benchmark/benchmark.h>

#include "diracbound/berger/berger.hpp"
#include "diracbound/cli/catalog.hpp"
#include "diracbound/spin/spin_geometry.hpp"
#include "diracbound/topology/index.hpp"

using namespace diracbound;

namespace {

void BM_Lambda1(benchmark::State& state, const char* id) {
  const auto geo = catalog_geometry(id);
  for (auto _ : state) benchmark::DoNotOptimize(lambda1(*geo).lambda1);
}
BENCHMARK_CAPTURE(BM_Lambda1, S4, "S4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Lambda1, S6, "S6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Lambda1, CP3, "CP3")->Unit(benchmark::kMillisecond);

void BM_DiracBlock(benchmark::State& state, const char* id) {
  const auto geo = catalog_geometry(id);
  const Weight gamma = lambda1(*geo).minimizers.front();
  for (auto _ : state) benchmark::DoNotOptimize(dirac_block(*geo, gamma).scalar);
}
BENCHMARK_CAPTURE(BM_DiracBlock, S6, "S6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DiracBlock, CP3, "CP3")->Unit(benchmark::kMillisecond);

void BM_VafaWitten(benchmark::State& state) {
  const auto geo = catalog_geometry("CP3");
  const SpectralData d = lambda1(*geo);
  std::vector<Rational> mu(geo->pair().dimension(), make_rational(1, 2));
  mu[0] = make_rational(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(vafa_witten_operator(*geo, d.minimizers.front(), mu, d.lambda1).norm2);
}
BENCHMARK(BM_VafaWitten)->Unit(benchmark::kMillisecond);

void BM_BergerGeometry(benchmark::State& state) {
  const BergerFrame frame = shipped_berger_frame();
  for (auto _ : state) benchmark::DoNotOptimize(BergerGeometry(berger_model(), frame).operator_a().rows());
}
BENCHMARK(BM_BergerGeometry)->Unit(benchmark::kMillisecond);

void BM_BergerDLambda(benchmark::State& state) {
  const BergerGeometry geo(berger_model(), shipped_berger_frame());
  d_lambda_minimum(geo, make_rational(1, 2));  // warm the block memo
  for (auto _ : state) benchmark::DoNotOptimize(d_lambda_minimum(geo, make_rational(51, 100)).minimum);
}
BENCHMARK(BM_BergerDLambda)->Unit(benchmark::kMicrosecond);

void BM_ChernCharacter(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chern_character_W(m) + chern_character_W_dual(m));
}
BENCHMARK(BM_ChernCharacter)->DenseRange(2, 8, 2);

}  // namespace
BENCHMARK_MAIN();
