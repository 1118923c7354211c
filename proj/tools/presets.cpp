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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>

#include "cli.hpp"
#include "superstab/errors.hpp"

namespace superstab::cli {

namespace {

double parse_double(const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw PreconditionError("grid: '" + s + "' is not a number");
  }
  return v;
}

std::pair<long, long> parse_range(const std::string& spec) {
  auto dots = spec.find("..");
  if (dots == std::string::npos) throw PreconditionError("grid: expected a range 'a..b'");
  long lo = 0, hi = 0;
  auto a = spec.substr(0, dots), b = spec.substr(dots + 2);
  auto r1 = std::from_chars(a.data(), a.data() + a.size(), lo);
  auto r2 = std::from_chars(b.data(), b.data() + b.size(), hi);
  if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != a.data() + a.size() ||
      r2.ptr != b.data() + b.size() || lo > hi) {
    throw PreconditionError("grid: malformed range '" + spec + "'");
  }
  return {lo, hi};
}

std::vector<Element> real_elements(const std::string& spec) {
  std::vector<Element> out;
  for (double v : parse_real_grid(spec)) out.push_back(Element::real(v));
  return out;
}

/// Every exponent vector in {lo..hi}^k.
std::vector<Element> box_elements(const std::string& spec, int k) {
  auto [lo, hi] = parse_range(spec);
  if (lo < 0) throw PreconditionError("grid: exponents must be nonnegative");
  std::vector<Element> out;
  ExpVector cur(static_cast<std::size_t>(k), lo);
  while (true) {
    out.push_back(Element::exponents(cur));
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == hi) cur[i++] = lo;
    if (i == cur.size()) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Uniform in [lo, hi) from the top 53 bits of one mt19937_64 draw, so the
/// value does not depend on the standard library's distribution code.
double uniform(std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Perturbation inverse_square(double amp) { return {PerturbationFamily::InversePower, amp, 2.0}; }

}  // namespace

std::vector<double> parse_real_grid(const std::string& spec) {
  std::vector<double> out;
  if (spec.find("..") != std::string::npos) {
    auto [lo, hi] = parse_range(spec);
    for (long v = lo; v <= hi; ++v) out.push_back(static_cast<double>(v));
    return out;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto comma = spec.find(',', start);
    out.push_back(parse_double(spec.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"exact-cor23", "perturbed-cor23", "bounded-g",
                                              "free-monoid", "jung"};
  return names;
}

Instance make_preset(const PresetParams& p) {
  Instance inst;
  if (p.preset == "exact-cor23") {
    inst.f = ExactExponential{p.c.value_or(1.0), {}};
    inst.g = IdentityExponent{};
    inst.psi = ConstantBound{p.delta.value_or(0.0)};
    inst.grid = real_elements(p.grid.value_or("1..8"));
  } else if (p.preset == "perturbed-cor23") {
    double c = p.c ? *p.c : uniform(p.seed, 0.5, 1.5);
    inst.f = PerturbedFunction{{c, {}}, {inverse_square(p.amp.value_or(0.1))}};
    inst.g = IdentityExponent{};
    inst.psi = ConstantBound{p.delta.value_or(0.2)};
    inst.grid = real_elements(p.grid.value_or("1..8"));
  } else if (p.preset == "bounded-g") {
    // f = exp(sin y) against a g with |g| <= bound.
    inst.f = PerturbedFunction{{0.0, {}}, {{PerturbationFamily::Sine, 1.0, 1.0}}};
    inst.g = BoundedExponent{BoundedFamily::Sine, p.bound, 1.0, 0.0};
    inst.psi = ConstantBound{p.delta.value_or(0.5)};
    inst.grid = real_elements(p.grid.value_or("1..8"));
  } else if (p.preset == "free-monoid") {
    if (p.generators < 1) throw PreconditionError("free-monoid: need at least one generator");
    static const double primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<std::string> names;
    std::vector<double> bases = p.bases;
    for (int i = 0; i < p.generators; ++i) {
      names.push_back("s" + std::to_string(i + 1));
      if (p.bases.empty()) bases.push_back(primes[i % 8]);
    }
    if (bases.size() != names.size()) throw PreconditionError("free-monoid: one base per generator");
    inst.semigroup = Semigroup::free_monoid(names);
    MultiplicativeMap m{bases};
    double amp = p.amp.value_or(0.0);
    if (amp > 0.0) {
      inst.f = PerturbedFunction{{p.c.value_or(1.0), m}, {inverse_square(amp)}};
    } else {
      inst.f = ExactExponential{p.c.value_or(1.0), m};
    }
    inst.g = CharacterExponent{m};
    inst.psi = ConstantBound{p.delta.value_or(amp > 0.0 ? 0.2 : 0.0)};
    inst.grid = box_elements(p.grid.value_or("0..2"), p.generators);
  } else if (p.preset == "jung") {
    if (!(p.base > 0.0)) throw PreconditionError("jung: base a must be > 0");
    inst.f = PerturbedFunction{{std::log(p.base), {}}, {inverse_square(p.amp.value_or(0.05))}};
    inst.g = IdentityExponent{};
    inst.psi = ConstantBound{p.delta.value_or(0.1)};
    inst.grid = real_elements(p.grid.value_or("2..4"));
  } else {
    throw PreconditionError("unknown preset '" + p.preset + "'");
  }
  check_instance(inst);
  return inst;
}

}  // namespace superstab::cli
