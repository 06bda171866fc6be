#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "raag/defining_graph.hpp"
#include "raag/graph_product.hpp"
#include "raag/group_ring.hpp"
#include "raag/scans.hpp"
#include "raag/singular.hpp"

namespace {

using namespace raag;

const DefiningGraph& bench_graph() {
  static const DefiningGraph g =
      DefiningGraph::parse("vertices: a b c d\nedges: a-b b-c a-d\n");
  return g;
}

std::vector<Expression<IntWeight>> random_expressions(std::size_t count,
                                                      std::size_t length) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<Vertex> vert(0, 3);
  std::uniform_int_distribution<long> exp(-3, 3);
  std::vector<Expression<IntWeight>> out(count);
  for (auto& e : out) {
    while (e.size() < length) {
      const long q = exp(rng);
      if (q != 0) {
        e.push_back({vert(rng), IntWeight{q}});
      }
    }
  }
  return out;
}

Word random_word(std::mt19937_64& rng, std::size_t length) {
  static constexpr TokenKind kKinds[3] = {TokenKind::sigma,
                                          TokenKind::sigma_inv,
                                          TokenKind::tau};
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<Vertex> vert(0, 3);
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back({kKinds[kind(rng)], vert(rng)});
  }
  return w;
}

void BM_NormalForm(benchmark::State& state) {
  const GraphProduct<IntWeight> engine(bench_graph());
  const auto inputs =
      random_expressions(64, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.normalize(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_NormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Multiply(benchmark::State& state) {
  const GraphProduct<IntWeight> engine(bench_graph());
  const auto inputs = random_expressions(64, 12);
  std::vector<NormalForm<IntWeight>> forms;
  for (const auto& e : inputs) {
    forms.push_back(engine.normalize(e));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.multiply(forms[i % forms.size()],
                                             forms[(i + 1) % forms.size()]));
    ++i;
  }
}
BENCHMARK(BM_Multiply);

void BM_Orbit(benchmark::State& state) {
  const GraphProduct<IntWeight> engine(bench_graph());
  const auto inputs =
      random_expressions(64, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        engine.orbit(inputs[i++ % inputs.size()], 1'000'000));
  }
}
BENCHMARK(BM_Orbit)->Arg(4)->Arg(6);

void BM_EvaluateWord(benchmark::State& state) {
  const SingularMonoid monoid(bench_graph());
  std::mt19937_64 rng(999);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) {
    words.push_back(random_word(rng, static_cast<std::size_t>(state.range(0))));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(monoid.evaluate(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_EvaluateWord)->Arg(4)->Arg(8)->Arg(16);

void BM_Eta(benchmark::State& state) {
  const SingularMonoid monoid(bench_graph());
  const GroupRing ring(bench_graph());
  std::mt19937_64 rng(7777);
  std::vector<SingularElement> elements;
  for (int i = 0; i < 32; ++i) {
    elements.push_back(monoid.evaluate(random_word(rng, 6)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ring.eta(elements[i++ % elements.size()]));
  }
}
BENCHMARK(BM_Eta);

void BM_BirmanScan(benchmark::State& state) {
  const auto g = DefiningGraph::parse("vertices: a b c\nedges: a-b\n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        birman_scan(g, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_BirmanScan)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
