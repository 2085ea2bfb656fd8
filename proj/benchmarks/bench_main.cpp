#include <benchmark/benchmark.h>

#include "odot/anodyne.hpp"
#include "odot/corpus.hpp"
#include "odot/cylinder.hpp"
#include "odot/dset.hpp"

using namespace odot;

static void BM_CanonicalForm(benchmark::State& st) {
  const auto U = cube(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(canonical_form(U.poset()));
  st.SetLabel(std::to_string(U.size()) + " elements");
}
BENCHMARK(BM_CanonicalForm)->DenseRange(1, 4);

static void BM_GrayProduct(benchmark::State& st) {
  const auto U = simplex(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(gray(arrow(), U));
}
BENCHMARK(BM_GrayProduct)->DenseRange(1, 3);

static void BM_Paste(benchmark::State& st) {
  const auto U = globe(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(paste(U, U, 0));
}
BENCHMARK(BM_Paste)->DenseRange(1, 4);

static void BM_InvertorShape(benchmark::State& st) {
  const std::string w(static_cast<std::size_t>(st.range(0)), 'L');
  for (auto _ : st) benchmark::DoNotOptimize(invertor_shape(arrow(), w));
}
BENCHMARK(BM_InvertorShape)->DenseRange(1, 3);

static void BM_HornRequirements(benchmark::State& st) {
  const auto U = st.range(0) == 0 ? cube(3) : simplex(3);
  const int top = *U.poset().greatest();
  const int x = U.poset().faces(top, Sign::Minus).front();
  for (auto _ : st) benchmark::DoNotOptimize(horn_requirements(U.poset(), x));
}
BENCHMARK(BM_HornRequirements)->Arg(0)->Arg(1);

static void BM_Localize(benchmark::State& st) {
  const int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(walking_equivalence(globe(2), d));
}
BENCHMARK(BM_Localize)->DenseRange(1, 3);

static void BM_Corpus(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(corpus({0, 3, 15, 48, 600}));
}
BENCHMARK(BM_Corpus);

static void BM_HornFamily(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(collect(enumerate_anodyne({AnodyneTag::Horn, 0, 2, 0, {}})));
}
BENCHMARK(BM_HornFamily);
BENCHMARK_MAIN();
