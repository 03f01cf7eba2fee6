// Copyright 2026 The rrlangid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts on the desk
// corpus.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "rrlangid/classifier.h"
#include "rrlangid/evaluation.h"
#include "rrlangid/trainer.h"

namespace rrlangid {
namespace {

const std::filesystem::path kCorpus =
    std::filesystem::path(RRLANGID_TEST_DATA) / "desk_corpus";

const CorpusSpec& Spec() {
  static const CorpusSpec spec{ListCorpusDir(kCorpus / "train")};
  return spec;
}

const ClassifierModel& Model() {
  static const ClassifierModel model = Train(Spec());
  return model;
}

const std::vector<std::string>& Chunks(size_t target) {
  static std::map<size_t, std::vector<std::string>> cache;
  auto& chunks = cache[target];
  if (chunks.empty()) {
    for (const Chunk& c :
         RunExperiment(Model(), ListCorpusDir(kCorpus / "test"), target)
             .chunks) {
      chunks.push_back(c.text);
    }
  }
  return chunks;
}

void BM_CountCorpusSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(CountCorpusSerial(Spec()));
}
BENCHMARK(BM_CountCorpusSerial)->Unit(benchmark::kMillisecond);

void BM_CountCorpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(CountCorpus(Spec()));
}
BENCHMARK(BM_CountCorpus)->Unit(benchmark::kMillisecond);

void BM_ClassifyBatchSerial(benchmark::State& state) {
  const auto& chunks = Chunks(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ClassifyBatchSerial(chunks, Model()));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(chunks.size()));
}
BENCHMARK(BM_ClassifyBatchSerial)
    ->Arg(16)
    ->Arg(256)
    ->Unit(benchmark::kMillisecond);

void BM_ClassifyBatch(benchmark::State& state) {
  const auto& chunks = Chunks(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ClassifyBatch(chunks, Model()));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(chunks.size()));
}
BENCHMARK(BM_ClassifyBatch)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rrlangid

BENCHMARK_MAIN();
