#include <benchmark/benchmark.h>

#include <random>

#include "pd3/bar.hpp"
#include "pd3/checks.hpp"
#include "pd3/corpus.hpp"
#include "pd3/homology.hpp"
#include "pd3/kernel_search.hpp"

using namespace pd3;

namespace {

std::vector<std::string> random_words(std::size_t n, int length) {
  std::mt19937_64 rng(1);
  std::vector<std::string> out(n);
  for (auto& w : out) {
    for (int i = 0; i < length; ++i) w += "abc"[rng() % 3];
  }
  return out;
}

void BM_Normalize(benchmark::State& state) {
  const auto& pi = GroupContext::get(GroupId::Pi);
  const auto words = random_words(256, static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pi.reduce(words[k++ % words.size()]));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Normalize)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_RingProduct(benchmark::State& state) {
  const auto& pi = GroupContext::get(GroupId::Pi);
  const auto ball = enumerate(pi, static_cast<int>(state.range(0)));
  RingElement x(pi), y(pi);
  for (std::size_t i = 0; i < ball.size(); i += 3) x.add_term(ball[i], 1);
  for (std::size_t i = 1; i < ball.size(); i += 5) y.add_term(ball[i], -2);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_RingProduct)->DenseRange(2, 5);

void BM_SmithBarS3(benchmark::State& state) {
  const auto bar = bar_complex(GroupContext::get(GroupId::S3), 4);
  const IntMatrix& d = bar.chains.differential(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(d));
  state.SetLabel(std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
}
BENCHMARK(BM_SmithBarS3)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_UniversalCoverHomology(benchmark::State& state) {
  const auto x = assemble_complex(Catalog::embedded(), "x");
  for (auto _ : state) benchmark::DoNotOptimize(homology(flatten_complex(x)));
}
BENCHMARK(BM_UniversalCoverHomology)->Unit(benchmark::kMillisecond);

void BM_KernelSearch(benchmark::State& state) {
  const auto& corpus = Catalog::embedded();
  const auto y = assemble_complex(corpus, "y");
  KernelSearchOptions opts;
  opts.radius = static_cast<int>(state.range(0));
  const std::vector<RingElement> d{y.differential(2)(1, 1)};
  const RingElement claimed = corpus.element("kernel_f2");
  for (auto _ : state) benchmark::DoNotOptimize(bounded_kernel_search(d, claimed, opts));
}
BENCHMARK(BM_KernelSearch)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Suite(benchmark::State& state) {
  SuiteOptions opts;
  opts.max_length = 3;
  opts.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Catalog::embedded(), opts));
}
BENCHMARK(BM_Suite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
