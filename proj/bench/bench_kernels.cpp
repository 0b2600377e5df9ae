// Serial reference vs OpenMP kernels for normalization and labeling.
//
//   ./lex2vec_bench --benchmark_filter=Label
//   OMP_NUM_THREADS=4 ./lex2vec_bench

#include <benchmark/benchmark.h>

#include <random>
#include <map>
#include <set>

#include "lex2vec/embedding.hpp"
#include "lex2vec/labeler.hpp"
#include "lex2vec/lexicon.hpp"

namespace {

using namespace lex2vec;

EmbeddingTable make_table(std::size_t words, std::size_t dims) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < words; ++i) vocab.push_back("w" + std::to_string(i));
  std::vector<double> values(words * dims);
  for (double& v : values) v = g(rng);
  return EmbeddingTable(std::move(vocab), std::move(values), dims);
}

Lexicon make_lexicon(const EmbeddingTable& table, std::size_t words) {
  static const char* labels[] = {"anger", "anticipation", "disgust", "fear", "joy",
                                 "negative", "positive", "sadness", "surprise", "trust"};
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
  LexiconBuilder builder("nrc");
  std::set<std::size_t> chosen;
  while (chosen.size() < std::min(words, table.size())) chosen.insert(pick(rng));
  for (std::size_t i : chosen) {
    for (std::size_t k = 0; k < 1 + i % 3; ++k) builder.add_exact(table.vocabulary()[i], labels[(i + k) % 10]);
  }
  return builder.build();
}

struct Workload {
  EmbeddingTable raw;
  NormalizedEmbeddingTable norm;
  Lexicon lexicon;
};

const Workload& workload(std::size_t words) {
  static std::map<std::size_t, Workload> cache;
  auto it = cache.find(words);
  if (it == cache.end()) {
    auto raw = make_table(words, 300);
    auto norm = normalize(raw);
    auto lex = make_lexicon(raw, 6400);
    it = cache.emplace(words, Workload{std::move(raw), std::move(norm), std::move(lex)}).first;
  }
  return it->second;
}

void BM_NormalizeSerial(benchmark::State& state) {
  const auto& w = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::normalize(w.raw));
}

void BM_NormalizeOmp(benchmark::State& state) {
  const auto& w = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(w.raw));
}

void BM_LabelSerial(benchmark::State& state) {
  const auto& w = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::label_dimensions(w.norm, w.lexicon, Theta(0.75)));
}

void BM_LabelOmp(benchmark::State& state) {
  const auto& w = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(label_dimensions(w.norm, w.lexicon, Theta(0.75)));
}

}  // namespace

BENCHMARK(BM_NormalizeSerial)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalizeOmp)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LabelSerial)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LabelOmp)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
