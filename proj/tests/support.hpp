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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "superstab/instance.hpp"

namespace superstab::testing {

inline std::vector<Element> real_grid(int lo, int hi) {
  std::vector<Element> g;
  for (int v = lo; v <= hi; ++v) g.push_back(Element::real(v));
  return g;
}

inline std::vector<Element> real_grid(std::initializer_list<double> vs) {
  std::vector<Element> g;
  for (double v : vs) g.push_back(Element::real(v));
  return g;
}

/// Every exponent vector in {0..hi}^k.
inline std::vector<Element> box_grid(int k, int hi) {
  std::vector<Element> out;
  ExpVector cur(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(Element::exponents(cur));
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == hi) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return out;
}

/// ln f(y) = c y, g = id, psi = delta.
inline Instance exact_reals(double c, std::vector<Element> grid, double delta = 0.0) {
  Instance inst;
  inst.f = ExactExponential{c, {}};
  inst.g = IdentityExponent{};
  inst.psi = ConstantBound{delta};
  inst.grid = std::move(grid);
  return inst;
}

/// ln f(y) = c y + ln(1 + amp y^-2), g = id, psi = delta.
inline Instance perturbed_reals(double c, double amp, double delta, std::vector<Element> grid) {
  Instance inst;
  inst.f = PerturbedFunction{{c, {}}, {{PerturbationFamily::InversePower, amp, 2.0}}};
  inst.g = IdentityExponent{};
  inst.psi = ConstantBound{delta};
  inst.grid = std::move(grid);
  return inst;
}

inline Instance monoid(const std::vector<double>& bases, double c, double amp, double delta,
                       std::vector<Element> grid) {
  Instance inst;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < bases.size(); ++i) names.push_back("s" + std::to_string(i + 1));
  inst.semigroup = Semigroup::free_monoid(names);
  MultiplicativeMap m{bases};
  if (amp > 0.0) {
    inst.f = PerturbedFunction{{c, m}, {{PerturbationFamily::InversePower, amp, 2.0}}};
  } else {
    inst.f = ExactExponential{c, m};
  }
  inst.g = CharacterExponent{m};
  inst.psi = ConstantBound{delta};
  inst.grid = std::move(grid);
  return inst;
}

/// f = exp(sin y) with g = bound sin(y).
inline Instance bounded_reals(double bound, std::vector<Element> grid) {
  Instance inst;
  inst.f = PerturbedFunction{{0.0, {}}, {{PerturbationFamily::Sine, 1.0, 1.0}}};
  inst.g = BoundedExponent{BoundedFamily::Sine, bound, 1.0, 0.0};
  inst.psi = ConstantBound{0.5};
  inst.grid = std::move(grid);
  return inst;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace superstab::testing
