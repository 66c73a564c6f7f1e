// Copyright 2026 The apfrrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "apfrrt/planner.hpp"
#include "apfrrt/potential.hpp"
#include "apfrrt/scenario.hpp"

namespace {

using namespace apfrrt;

ScenarioFile load(const char* name) { return load_scenario(std::string(APFRRT_SCENARIO_DIR) + "/" + name); }

SearchTree random_tree(const CSpaceEnvironment& env, std::size_t n) {
  Rng rng(1);
  SearchTree tree;
  tree.add_root(env.start(), 0.0);
  while (tree.size() < n) {
    const Config q = env.sample_free(rng);
    tree.add_node(env, q, tree.nearest(env, q), env.classify(q).cost());
  }
  return tree;
}

void BM_Nearest(benchmark::State& state) {
  const auto s = load("wall.scn");
  const auto env = build_environment(s);
  const SearchTree tree = random_tree(*env, static_cast<std::size_t>(state.range(0)));
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(tree.nearest(*env, env->sample_free(rng)));
}
BENCHMARK(BM_Nearest)->Arg(500)->Arg(5000);

void BM_ClassifyWall(benchmark::State& state) {
  const auto env = build_environment(load("wall.scn"));
  Rng rng(3);
  for (auto _ : state) {
    const Config q{rng.uniform(0, 100), rng.uniform(0, 100)};
    benchmark::DoNotOptimize(env->classify(q));
  }
}
BENCHMARK(BM_ClassifyWall);

void BM_ClassifyArm(benchmark::State& state) {
  const auto env = build_environment(load("arm.scn"));
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(env->classify(env->sample_free(rng)));
}
BENCHMARK(BM_ClassifyArm);

void BM_PotentialGradient(benchmark::State& state) {
  const auto s = load(state.range(0) ? "arm.scn" : "wall.scn");
  const auto env = build_environment(s);
  const auto params = with_attractive_scale(s.potential, *env);
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(potential_gradient(*env, params, env->sample_free(rng)));
}
BENCHMARK(BM_PotentialGradient)->Arg(0)->Arg(1);

void BM_WallPlan(benchmark::State& state) {
  const auto s = load("wall.scn");
  const auto env = build_environment(s);
  const char* profile = state.range(0) == 0 ? "rrtstar" : state.range(0) == 1 ? "apf_b1" : "prrtstar";
  auto params = build_planner_params(s, profile, *env, 1);
  params.max_iterations = 1000;
  params.checkpoints = {1000};
  for (auto _ : state) benchmark::DoNotOptimize(plan(env, params));
  state.SetLabel(profile);
}
BENCHMARK(BM_WallPlan)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
