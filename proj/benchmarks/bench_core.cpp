#include <benchmark/benchmark.h>

#include <random>

#include "cde/cde_op.hpp"
#include "cde/projectors.hpp"
#include "cde/tensor.hpp"

namespace {

using namespace cde;

CMatrix random4(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1, 1);
  CMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Cx(dist(rng), dist(rng));
  return m;
}

void bm_kron(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const CMatrix a = random4(rng), b = random4(rng);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(bm_kron);

void bm_nullspace_on_shell(benchmark::State& state) {
  const FourMomentum p{std::sqrt(2.0), 1, 0, 0};
  const ChiralParams params{1.0, 0.4};
  const CMatrix d = cde_momentum_operator(CdeBranch::MixedSigns, p, params);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(d, 1e-8));
}
BENCHMARK(bm_nullspace_on_shell);

void bm_operator_assembly(benchmark::State& state) {
  const FourMomentum p{std::sqrt(2.0), 1, 0, 0};
  const ChiralParams params{1.0, Cx(0.4, 0.1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(cde_momentum_operator(CdeBranch::MixedSigns, p, params));
}
BENCHMARK(bm_operator_assembly);

void bm_projector_family(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> dist;
  Direction3 axes[3];
  for (auto& a : axes)
    a = Direction3{Cx(dist(rng), 0.2 * dist(rng)), Cx(dist(rng), 0.2 * dist(rng)),
                   Cx(dist(rng), 0.2 * dist(rng))}
            .normalized();
  for (auto _ : state) {
    for (int bits = 0; bits < 8; ++bits) {
      std::vector<SpinSpec> specs;
      for (int i = 0; i < 3; ++i) specs.emplace_back((bits >> i) & 1 ? +1 : -1, axes[i]);
      benchmark::DoNotOptimize(projector_tensor(specs));
    }
  }
}
BENCHMARK(bm_projector_family);

}  // namespace

BENCHMARK_MAIN();
