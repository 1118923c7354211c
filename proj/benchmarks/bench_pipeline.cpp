/*
 *   Copyright 2026 The superstab Authors
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

#include <string>
#include <vector>

#include "superstab/baselines.hpp"
#include "superstab/fixed_point.hpp"
#include "superstab/pipeline.hpp"

using namespace superstab;

namespace {

Instance perturbed(int grid_max) {
  Instance inst;
  inst.f = PerturbedFunction{{1.0, {}}, {{PerturbationFamily::InversePower, 0.1, 2.0}}};
  inst.g = IdentityExponent{};
  inst.psi = ConstantBound{0.2};
  for (int v = 1; v <= grid_max; ++v) inst.grid.push_back(Element::real(v));
  return inst;
}

Instance monoid_instance(int k) {
  std::vector<std::string> names;
  std::vector<double> bases;
  for (int i = 0; i < k; ++i) {
    names.push_back("s" + std::to_string(i));
    bases.push_back(1.2 + 0.1 * i);
  }
  Instance inst;
  inst.semigroup = Semigroup::free_monoid(names);
  MultiplicativeMap m{bases};
  inst.f = PerturbedFunction{{0.8, m}, {{PerturbationFamily::InversePower, 0.01, 2.0}}};
  inst.g = CharacterExponent{m};
  inst.psi = ConstantBound{0.2};
  ExpVector cur(static_cast<std::size_t>(k), 0);
  while (true) {
    inst.grid.push_back(Element::exponents(cur));
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == 1) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return inst;
}

void BM_IterateFixedPoint(benchmark::State& state) {
  auto inst = perturbed(static_cast<int>(state.range(0)));
  auto dom = evaluation_domain(inst);
  auto a = Element::real(2);
  for (auto _ : state) {
    auto res = iterate_fixed_point(inst, a, dom);
    benchmark::DoNotOptimize(res.certificate.final_distance);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IterateFixedPoint)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_RunSuperstabilityReals(benchmark::State& state) {
  auto inst = perturbed(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = run_superstability(inst);
    benchmark::DoNotOptimize(rep.conclusion.residual);
  }
}
BENCHMARK(BM_RunSuperstabilityReals)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_RunSuperstabilityMonoid(benchmark::State& state) {
  auto inst = monoid_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = run_superstability(inst);
    benchmark::DoNotOptimize(rep.conclusion.residual);
  }
}
BENCHMARK(BM_RunSuperstabilityMonoid)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Validate(benchmark::State& state) {
  auto inst = perturbed(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = validate_instance(inst, {}, 2);
    benchmark::DoNotOptimize(rep.worst_violation);
  }
}
BENCHMARK(BM_Validate)->Arg(8)->Arg(32);

void BM_JungAlpha(benchmark::State& state) {
  double x = 1.0001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jung_alpha(x).value);
    x = x < 100.0 ? x * 1.01 : 1.0001;
  }
}
BENCHMARK(BM_JungAlpha);

}  // namespace

BENCHMARK_MAIN();
