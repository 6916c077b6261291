// Costs worth watching: the preorder enumerator, full validity sweeps,
// bisimulation fixpoints, and the translation pipeline.  Inputs are seeded
// so runs are comparable across machines.

#include <benchmark/benchmark.h>

#include <topomodal/algebra.hpp>
#include <topomodal/bisim.hpp>
#include <topomodal/catalog.hpp>
#include <topomodal/generators.hpp>
#include <topomodal/semantics.hpp>
#include <topomodal/translate.hpp>

using namespace topomodal;

namespace {

std::vector<Space> corpus4() { return all_spaces(4); }

Model seeded_model(unsigned seed, int n, int props) {
  Rng rng(seed);
  const Space s = random_space(rng, n);
  return random_model_on(rng, s, props, 0);
}

}  // namespace

static void BM_EnumerateSpaces(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    SpaceEnumerator e(n);
    long count = 0;
    while (e.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateSpaces)->Arg(3)->Arg(4)->Arg(5);

static void BM_GrzValidityCorpus4(benchmark::State& state) {
  const auto spaces = corpus4();
  const ModalPtr grz = named_modal_formula("grz");
  for (auto _ : state) {
    int holds = 0;
    for (const Space& s : spaces) holds += valid_on_space(s, grz);
    benchmark::DoNotOptimize(holds);
  }
}
BENCHMARK(BM_GrzValidityCorpus4);

static void BM_TruthSetHybrid(benchmark::State& state) {
  Rng rng(90001);
  const Space s = random_space(rng, 8);
  const Model m = random_model_on(rng, s, 3, 2);
  const ModalPtr f = random_modal_formula(rng, Language::HED, 40, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(truth_set(m, f));
}
BENCHMARK(BM_TruthSetHybrid);

static void BM_GreatestTopoBisimulation(benchmark::State& state) {
  const Model a = seeded_model(90002, int(state.range(0)), 2);
  const Model b = seeded_model(90003, int(state.range(0)), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(greatest_topo_bisimulation(a, b));
}
BENCHMARK(BM_GreatestTopoBisimulation)->Arg(6)->Arg(10);

static void BM_DistinguishingFormula(benchmark::State& state) {
  const Model a = seeded_model(90004, 5, 2);
  const Model b = seeded_model(90005, 5, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(distinguishing_formula(a, 0, b, 0, 15));
}
BENCHMARK(BM_DistinguishingFormula);

static void BM_TranslationRoundTrip(benchmark::State& state) {
  Rng rng(90006);
  std::vector<ModalPtr> batch;
  for (int i = 0; i < 50; ++i)
    batch.push_back(random_modal_formula(rng, Language::ML, 25, 3, 0));
  for (auto _ : state)
    for (const ModalPtr& f : batch) benchmark::DoNotOptimize(ht(st(f)));
}
BENCHMARK(BM_TranslationRoundTrip);

static void BM_DualityRoundTrip(benchmark::State& state) {
  const auto spaces = corpus4();
  for (auto _ : state) {
    int match = 0;
    for (const Space& s : spaces) match += (dual_space(complex_algebra(s)) == s);
    benchmark::DoNotOptimize(match);
  }
}
BENCHMARK(BM_DualityRoundTrip);

// The distro's benchmark_main.a ships slim LTO bytecode our toolchain cannot
// read, so supply the entry point here and link the shared library only.
BENCHMARK_MAIN();
