// Serial reference kernels against their OpenMP versions.

#include "walshnet/counting.hpp"
#include "walshnet/estimators.hpp"
#include "walshnet/nets.hpp"
#include "walshnet/scan.hpp"
#include "walshnet/scramble.hpp"

#include <benchmark/benchmark.h>

using namespace walshnet;

namespace {

PointSet scrambled(int b, int m, int s) {
  return owen_scramble(generate_points(faure_matrices(b, m, s), b, m), {1, 0}, default_scramble_precision(b, m));
}

ExperimentConfig experiment() {
  ExperimentConfig cfg;
  cfg.base = 2;
  cfg.m = 4;
  cfg.s = 2;
  cfg.replications = 2000;
  cfg.seed = 1;
  cfg.decay = DecaySpec{};
  cfg.decay->x = 0.15;
  cfg.decay->k_max = 5;
  return cfg;
}

void BM_Profile_Serial(benchmark::State& st) {
  const PointSet p = scrambled(3, static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(serial::profile_bruteforce(p));
}
void BM_Profile_Parallel(benchmark::State& st) {
  const PointSet p = scrambled(3, static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(profile_bruteforce(p));
}

void BM_VerifyNet_Serial(benchmark::State& st) {
  const PointSet p = scrambled(5, static_cast<int>(st.range(0)), 5);
  for (auto _ : st) benchmark::DoNotOptimize(serial::verify_net(p, 0));
}
void BM_VerifyNet_Parallel(benchmark::State& st) {
  const PointSet p = scrambled(5, static_cast<int>(st.range(0)), 5);
  for (auto _ : st) benchmark::DoNotOptimize(verify_net(p, 0));
}

void BM_Replicate_Serial(benchmark::State& st) {
  const PointSet p = generate_points(faure_matrices(2, 8, 2), 2, 8);
  for (auto _ : st) benchmark::DoNotOptimize(serial::replicate(p, 3, static_cast<int>(st.range(0)), 20));
}
void BM_Replicate_Parallel(benchmark::State& st) {
  const PointSet p = generate_points(faure_matrices(2, 8, 2), 2, 8);
  for (auto _ : st) benchmark::DoNotOptimize(replicate(p, 3, static_cast<int>(st.range(0)), 20));
}

void BM_SignScan_Serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::qs_sign_scan(7, 10, 10, st.range(0)));
}
void BM_SignScan_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(qs_sign_scan(7, 10, 10, st.range(0)));
}

void BM_FigureScan_Serial(benchmark::State& st) {
  const ScanSpec spec = figure_spec("3b");
  for (auto _ : st) benchmark::DoNotOptimize(serial::figure_scan(spec));
}
void BM_FigureScan_Parallel(benchmark::State& st) {
  const ScanSpec spec = figure_spec("3b");
  for (auto _ : st) benchmark::DoNotOptimize(figure_scan(spec));
}

void BM_Experiment_Serial(benchmark::State& st) {
  const ExperimentConfig cfg = experiment();
  for (auto _ : st) benchmark::DoNotOptimize(serial::run_experiment(cfg));
}
void BM_Experiment_Parallel(benchmark::State& st) {
  const ExperimentConfig cfg = experiment();
  for (auto _ : st) benchmark::DoNotOptimize(run_experiment(cfg));
}

}  // namespace

BENCHMARK(BM_Profile_Serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Profile_Parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyNet_Serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyNet_Parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Replicate_Serial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Replicate_Parallel)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignScan_Serial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignScan_Parallel)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FigureScan_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FigureScan_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Experiment_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Experiment_Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
