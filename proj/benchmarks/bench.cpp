/*
 * Copyright (c) 2026, the archsubst project authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "archsubst/graph.hpp"
#include "archsubst/parser.hpp"
#include "archsubst/simulation.hpp"

using namespace archsubst;

namespace {

const char* kModelsDir = ARCHSUBST_MODELS_DIR;

SourceText corpus(const char* name) {
  return SourceText::from_file(std::string(kModelsDir) + name);
}

PairedSystem load_http() {
  auto pre = parse_model(corpus("/http_pre.arch"));
  auto post = parse_model(corpus("/http_post.arch"));
  auto subst =
      parse_substitution(corpus("/http.subst"), pre, post);
  auto loaded =
      PairedSystem::load(std::move(pre), std::move(post), std::move(subst));
  return std::move(loaded).value();
}

void BM_ParseModel(benchmark::State& state) {
  auto src = corpus("/http_post.arch");
  for (auto _ : state) benchmark::DoNotOptimize(parse_model(src));
}
BENCHMARK(BM_ParseModel);

void BM_CheckConsistency(benchmark::State& state) {
  auto spec = parse_model(corpus("/http_post.arch"));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_consistency(spec.initial()));
}
BENCHMARK(BM_CheckConsistency);

void BM_CheckSubst(benchmark::State& state) {
  auto ps = load_http();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        check_subst(ps.post().initial(), ps.pre().initial(), ps.subst()));
}
BENCHMARK(BM_CheckSubst);

void BM_ReachableGraph(benchmark::State& state) {
  auto spec = parse_model(corpus("/http_post.arch"));
  for (auto _ : state)
    benchmark::DoNotOptimize(reachable_graph(spec, 1000));
}
BENCHMARK(BM_ReachableGraph);

void BM_SemiAlgorithm(benchmark::State& state) {
  auto ps = load_http();
  for (auto _ : state) {
    RandomStrategy strategy(42);
    benchmark::DoNotOptimize(run_semi_algorithm(ps, strategy, 50));
  }
}
BENCHMARK(BM_SemiAlgorithm);

void BM_Oracle(benchmark::State& state) {
  auto ps = load_http();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_check(ps, 1000));
}
BENCHMARK(BM_Oracle);

}  // namespace

BENCHMARK_MAIN();
