#include <benchmark/benchmark.h>

#include <numbers>

#include <scaleqm/axioms.hpp>
#include <scaleqm/evolution.hpp>
#include <scaleqm/momentum.hpp>
#include <scaleqm/n_particle.hpp>
#include <scaleqm/operators.hpp>
#include <scaleqm/two_particle.hpp>

using namespace scaleqm;

namespace {

FieldSpec field(double length) {
  return FieldSpec::closed_form({ProfileKind::gaussian, 0.3, 0.0, 2.0, 1.0},
                                {ProfileKind::sine, 0.2, 0.0, 1.0, 2.0 * std::numbers::pi / length});
}

void BM_ExactAxiomSuite(benchmark::State& state) {
  AxiomSuiteOptions<Rational> opt;
  opt.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_axiom_suite(opt));
}
BENCHMARK(BM_ExactAxiomSuite)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ScaledKinetic(benchmark::State& state) {
  const Grid1D g = Grid1D::centered(static_cast<std::size_t>(state.range(0)), 30.0);
  const FieldSpec f = field(30.0);
  const WavePacket psi = WavePacket::gaussian(g, 0.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(scaled_kinetic_apply(psi, f, PhysicalConstants{}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScaledKinetic)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_MomentumKernel(benchmark::State& state) {
  const Grid1D g = Grid1D::centered(static_cast<std::size_t>(state.range(0)), 30.0);
  const FieldSpec f = field(30.0);
  for (auto _ : state) benchmark::DoNotOptimize(momentum_kernel(f, g));
}
BENCHMARK(BM_MomentumKernel)->RangeMultiplier(4)->Range(256, 16384);

void BM_KernelConvolution(benchmark::State& state) {
  const Grid1D g = Grid1D::centered(static_cast<std::size_t>(state.range(0)), 30.0);
  const FieldSpec f = field(30.0);
  const MomentumKernel k = momentum_kernel(f, g);
  const MomentumAmplitudes hat = to_momentum(WavePacket::gaussian(g, 0.0, 2.0));
  for (auto _ : state) benchmark::DoNotOptimize(convolve_with_kernel(k, hat, f.gamma_at(0.0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KernelConvolution)->RangeMultiplier(2)->Range(128, 1024)->Complexity(benchmark::oNSquared);

void BM_CrankNicolsonStep(benchmark::State& state) {
  const Grid1D g = Grid1D::centered(static_cast<std::size_t>(state.range(0)), 30.0);
  const FieldSpec f = field(30.0);
  const PhysicalConstants c;
  const auto v = harmonic_potential(g, 0.5, 0.0, c);
  const CrankNicolsonPropagator step(assemble_hamiltonian(g, f, v, c, HamiltonianForm::scaled), 1e-3, c);
  Amplitudes psi = WavePacket::gaussian(g, 0.0, 2.0).amplitudes();
  for (auto _ : state) {
    psi = step.step(psi);
    benchmark::DoNotOptimize(psi.data());
  }
}
BENCHMARK(BM_CrankNicolsonStep)->RangeMultiplier(4)->Range(256, 16384);

void BM_PairConvolution(benchmark::State& state) {
  const Grid1D g = Grid1D::centered(static_cast<std::size_t>(state.range(0)), 30.0);
  const FieldSpec f = field(30.0);
  const TwoParticlePacket p = slater_combine(WavePacket::gaussian(g, -2.0, 1.5), WavePacket::gaussian(g, 2.0, 1.5),
                                             Statistics::fermion);
  const PairKernel k = pair_kernel(f, g);
  const PairMomentumAmplitudes hat = to_momentum_2d(p);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_pair(k, hat, f.gamma_at(0.0)));
}
BENCHMARK(BM_PairConvolution)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_LocalizeRank3(benchmark::State& state) {
  const Grid1D g = Grid1D::centered(static_cast<std::size_t>(state.range(0)), 30.0);
  const FieldSpec f = field(30.0);
  const Tensor t(g, 3, Amplitudes(g.size() * g.size() * g.size(), Complex(1.0, 0.5)));
  const double refs[3] = {g.coordinate(1), g.coordinate(2), g.coordinate(3)};
  for (auto _ : state) benchmark::DoNotOptimize(localize_n(t, f, refs));
}
BENCHMARK(BM_LocalizeRank3)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
