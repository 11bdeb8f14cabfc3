#include <benchmark/benchmark.h>

#include <vector>

#include "agmb/bounds.hpp"
#include "agmb/composite.hpp"
#include "agmb/driver.hpp"

using namespace agmb;

namespace {

std::vector<Modulus> sampleModuli() {
  std::vector<Modulus> ms;
  for (double r : makeModuli({GridKind::ModulusEndpointWeighted, 64, 1e-3, 0.7}))
    ms.emplace_back(r);
  return ms;
}

std::vector<PositivePair> samplePairs() {
  std::vector<PositivePair> ps;
  for (const Modulus& m : sampleModuli()) ps.push_back(referencePair(m));
  return ps;
}

void BM_ellK(benchmark::State& state) {
  const auto ms = sampleModuli();
  for (auto _ : state)
    for (const Modulus& m : ms) benchmark::DoNotOptimize(ellK(m));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ms.size()));
}

void BM_ellE(benchmark::State& state) {
  const auto ms = sampleModuli();
  for (auto _ : state)
    for (const Modulus& m : ms) benchmark::DoNotOptimize(ellE(m));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ms.size()));
}

void BM_kEnvelope(benchmark::State& state) {
  const auto ms = sampleModuli();
  for (auto _ : state)
    for (const Modulus& m : ms) benchmark::DoNotOptimize(kEnvelope(m));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ms.size()));
}

void BM_kPolynomialBounds(benchmark::State& state) {
  const auto ms = sampleModuli();
  for (auto _ : state)
    for (const Modulus& m : ms) benchmark::DoNotOptimize(kPolynomialBounds(m));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ms.size()));
}

void BM_stableEnvelopeMargins(benchmark::State& state) {
  const auto ms = sampleModuli();
  for (auto _ : state)
    for (const Modulus& m : ms) benchmark::DoNotOptimize(stableEnvelopeMargins(m));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ms.size()));
}

void BM_theoremMargin(benchmark::State& state) {
  const auto ms = sampleModuli();
  const double t = sharpConstants().delta1;
  for (auto _ : state)
    for (const Modulus& m : ms)
      benchmark::DoNotOptimize(theoremMargin(TheoremId::T31, BoundSide::Lower, t, m));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ms.size()));
}

void BM_agQCClosedForm(benchmark::State& state) {
  const auto ps = samplePairs();
  for (auto _ : state)
    for (const PositivePair& p : ps) benchmark::DoNotOptimize(agQCClosedForm(p));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ps.size()));
}

void BM_rSubstitution(benchmark::State& state) {
  const auto ps = samplePairs();
  for (auto _ : state)
    for (const PositivePair& p : ps) benchmark::DoNotOptimize(rSubstitution(p));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ps.size()));
}

BENCHMARK(BM_ellK);
BENCHMARK(BM_ellE);
BENCHMARK(BM_kEnvelope);
BENCHMARK(BM_kPolynomialBounds);
BENCHMARK(BM_stableEnvelopeMargins);
BENCHMARK(BM_theoremMargin);
BENCHMARK(BM_agQCClosedForm);
BENCHMARK(BM_rSubstitution);

}  // namespace

BENCHMARK_MAIN();
