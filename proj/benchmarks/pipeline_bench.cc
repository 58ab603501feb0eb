/*
 * Copyright 2026 The KeyXtract Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "keyxtract/eval.h"
#include "keyxtract/pipeline.h"
#include "keyxtract/resources.h"

namespace keyxtract {
namespace {

constexpr const char* kTweet =
    "@dialoglk I made my payment just after my line got barred in the "
    "morning! And still the line hasn't got connected, Whats with the delay?";

Pipeline MakePipeline(Mode mode) {
  PipelineConfig config;
  config.mode = mode;
  config.resources = BundledResources();
  return Pipeline(std::move(config));
}

void BM_Tokenize(benchmark::State& state) {
  const Tokenizer tokenizer;
  for (auto _ : state) benchmark::DoNotOptimize(tokenizer.Tokenize(kTweet));
}
BENCHMARK(BM_Tokenize);

void BM_Tag(benchmark::State& state) {
  const auto tokens = Tokenizer().Tokenize(kTweet);
  const auto& lexicon = BundledResources()->lexicon;
  for (auto _ : state) benchmark::DoNotOptimize(Tag(tokens, lexicon));
}
BENCHMARK(BM_Tag);

void BM_Extract(benchmark::State& state) {
  const auto pipeline =
      MakePipeline(state.range(0) == 1 ? Mode::kStage1 : Mode::kStage2);
  for (auto _ : state) benchmark::DoNotOptimize(pipeline.Keywords(kTweet));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Extract)->Arg(1)->Arg(2);

void BM_ExtractWithTrace(benchmark::State& state) {
  PipelineConfig config;
  config.resources = BundledResources();
  config.keep_trace = true;
  const Pipeline pipeline(std::move(config));
  for (auto _ : state) benchmark::DoNotOptimize(pipeline.Extract(kTweet));
}
BENCHMARK(BM_ExtractWithTrace);

// Many threads sharing one pipeline.
void BM_ExtractShared(benchmark::State& state) {
  static const Pipeline pipeline = MakePipeline(Mode::kStage2);
  for (auto _ : state) benchmark::DoNotOptimize(pipeline.Keywords(kTweet));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ExtractShared)->ThreadRange(1, 8);

void BM_Score(benchmark::State& state) {
  const std::vector<std::string> machine = {"made", "payment", "line", "got",
                                            "barred", "not", "connected", "delay"};
  const std::vector<std::string> human = {"payment", "line", "barred",
                                          "not", "connected", "delay"};
  for (auto _ : state) benchmark::DoNotOptimize(Score(machine, human));
}
BENCHMARK(BM_Score);

void BM_LoadResources(benchmark::State& state) {
  const auto paths = ResourcePaths::Bundled(DefaultDataDir());
  for (auto _ : state) benchmark::DoNotOptimize(LoadResources(paths));
}
BENCHMARK(BM_LoadResources)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace keyxtract

BENCHMARK_MAIN();
