#include <benchmark/benchmark.h>

#include <random>

#include "causax/corpus.hpp"
#include "causax/generators.hpp"
#include "causax/oracles.hpp"
#include "causax/presets.hpp"
#include "causax/reference_oracles.hpp"
#include "causax/text.hpp"
#include "causax/tokenizer.hpp"

namespace {

using namespace causax;

std::vector<CausalDag> random_graphs(std::size_t n, double bf, std::size_t count) {
  Rng rng(42);
  std::vector<CausalDag> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(generate_branched_dag(generate_node_names(n, {1, 3}, rng), bf, rng));
  }
  return out;
}

void BM_LabelDsep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto graphs = random_graphs(n, 1.4, 64);
  std::vector<std::vector<LabeledDsepQuery>> queries;
  for (const auto& g : graphs) queries.push_back(enumerate_dsep_hypotheses(g, 3));
  std::size_t done = 0;
  for (auto _ : state) {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (const auto& q : queries[i]) benchmark::DoNotOptimize(label_dsep(graphs[i], q.query));
    for (const auto& q : queries) done += q.size();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(done));
}
BENCHMARK(BM_LabelDsep)->Arg(5)->Arg(7)->Arg(10);

void BM_BruteForceDsep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto graphs = random_graphs(n, 1.4, 64);
  std::vector<std::vector<LabeledDsepQuery>> queries;
  for (const auto& g : graphs) queries.push_back(enumerate_dsep_hypotheses(g, 3));
  std::size_t done = 0;
  for (auto _ : state) {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (const auto& q : queries[i]) benchmark::DoNotOptimize(reference::brute_force_dsep(graphs[i], q.query));
    for (const auto& q : queries) done += q.size();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(done));
}
BENCHMARK(BM_BruteForceDsep)->Arg(5)->Arg(7)->Arg(10);

void BM_LabelTransitivity(benchmark::State& state) {
  auto graphs = random_graphs(static_cast<std::size_t>(state.range(0)), 1.4, 64);
  std::size_t done = 0;
  for (auto _ : state) {
    for (const auto& g : graphs)
      for (const auto& a : g.nodes())
        for (const auto& b : g.nodes())
          if (!(a == b)) {
            benchmark::DoNotOptimize(label_transitivity(g, {a, b}));
            ++done;
          }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(done));
}
BENCHMARK(BM_LabelTransitivity)->Arg(6)->Arg(12);

void BM_BuildCorpus(benchmark::State& state) {
  auto spec = preset_spec(state.range(0) == 0 ? "ts2" : "dsep-train", 1);
  for (auto& c : spec.components) c.count /= 100;
  for (auto _ : state) benchmark::DoNotOptimize(build_corpus(spec));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * spec.total_count()));
  state.SetLabel(spec.name + " / 100");
}
BENCHMARK(BM_BuildCorpus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EncodeDecode(benchmark::State& state) {
  auto spec = preset_spec("ts2", 3);
  for (auto& c : spec.components) c.count /= 100;
  std::vector<std::string> texts;
  for (const auto& inst : build_corpus(spec)) texts.push_back(serialize_text(inst));
  auto vocab = Vocabulary::build(Task::Transitivity);
  for (auto _ : state) {
    for (const auto& t : texts) benchmark::DoNotOptimize(decode(encode(t, vocab), vocab));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * texts.size()));
}
BENCHMARK(BM_EncodeDecode);

}  // namespace

BENCHMARK_MAIN();
