#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "veronese/gluing.hpp"
#include "veronese/groebner.hpp"
#include "veronese/lattice.hpp"
#include "veronese/sci.hpp"
#include "veronese/toric.hpp"

using namespace veronese;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto t = veronese_semigroup(n, 4);
  const IntMatrix m = t.matrix();
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(4)->Arg(5);

static void BM_BuchbergerQuadrics(benchmark::State& state) {
  const VeroneseRing ring(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const PrimeField f5(5);
  std::vector<Poly> gens;
  for (const auto& b : quadratic_generators(ring)) gens.push_back(b.to_poly(f5, MonomialOrder::DegRevLex));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::DegRevLex));
  state.counters["generators"] = static_cast<double>(gens.size());
}
BENCHMARK(BM_BuchbergerQuadrics)->Args({3, 2})->Args({3, 3})->Args({4, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_VerifyCharP(benchmark::State& state) {
  const auto params = VeroneseParams::make(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)),
                                           static_cast<unsigned>(state.range(2)));
  for (auto _ : state) {
    auto cert = build_certificate(params);
    benchmark::DoNotOptimize(verify_char_p(cert));
  }
}
BENCHMARK(BM_VerifyCharP)->Args({3, 2, 1})->Args({4, 2, 1})->Args({3, 3, 1})->Args({3, 2, 2})->Unit(benchmark::kMillisecond);

static void BM_PointSurvey(benchmark::State& state) {
  const auto cert = build_certificate(VeroneseParams::make(3, 2, 1));
  const auto r = static_cast<std::uint64_t>(state.range(0));
  const SurveyOptions opts{10'000'000, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(point_survey(cert, r, SurveyMode::FullEnumeration, opts));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(r * r * r * r * r * r));
}
BENCHMARK(BM_PointSurvey)->Args({5, 1})->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond);

static void BM_Rewrite(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0)), q = static_cast<unsigned>(state.range(1));
  const auto s = static_cast<unsigned>(state.range(2));
  const VeroneseRing ring(n, q);
  std::mt19937 rng(1);
  std::vector<TypeStarBinomial> inputs;
  while (inputs.size() < 64) {
    TypeStarBinomial f;
    for (unsigned b = 0; b < s; ++b) {
      IndexTuple t;
      for (unsigned i = 0; i < q; ++i) t.idx.push_back(1 + rng() % n);
      std::sort(t.idx.begin(), t.idx.end());
      f.blocks.push_back(t);
    }
    f.sigma.resize(s * q);
    std::iota(f.sigma.begin(), f.sigma.end(), 1u);
    std::shuffle(f.sigma.begin(), f.sigma.end(), rng);
    if (f.left(ring) != f.right(ring)) inputs.push_back(std::move(f));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rewrite(ring, inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_Rewrite)->Args({4, 4, 3})->Args({6, 8, 4})->Args({9, 9, 6});

static void BM_CompleteGluing(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto p = static_cast<unsigned>(state.range(1)), h = static_cast<unsigned>(state.range(2));
  unsigned q = 1;
  for (unsigned i = 0; i < h; ++i) q *= p;
  const auto gens = veronese_semigroup(n, q);
  for (auto _ : state) benchmark::DoNotOptimize(completely_p_glued(gens, p, h));
}
BENCHMARK(BM_CompleteGluing)->Args({3, 2, 1})->Args({4, 2, 2})->Args({4, 3, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
