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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_values.hpp"
#include "superstab/baselines.hpp"
#include "superstab/errors.hpp"
#include "support.hpp"

using namespace superstab;
using namespace superstab::testing;

namespace {

LogFunction constant_on(const Semigroup& s, std::span<const ElementPair> pairs, double log_value) {
  LogFunction f;
  for (const auto& [x, y] : pairs) {
    f.set(x, log_value);
    f.set(y, log_value);
    f.set(s.combine(x, y), log_value);
  }
  return f;
}

Instance jung_instance(double delta) {
  Instance inst = perturbed_reals(std::log(2.0), 0.05, delta, real_grid(2, 4));
  return inst;
}

}  // namespace

TEST_CASE("grid pairs and tabulation") {
  auto grid = real_grid(1, 3);
  auto pairs = grid_pairs(grid);
  CHECK(pairs.size() == 9);
  auto inst = exact_reals(1.0, grid);
  auto lf = tabulate_pairs(inst, pairs);
  CHECK(lf.contains(Element::real(9)));
  CHECK(lf.at(Element::real(6)) == 6.0);
}

TEST_CASE("Baker residual classifies constants") {
  auto s = Semigroup::positive_reals();
  auto pairs = grid_pairs(real_grid(1, 4));

  auto one = baker_residual(s, constant_on(s, pairs, 0.0), pairs);
  CHECK(one.residual == 0.0);
  CHECK(one.classification == BakerClass::NearExponential);

  auto half = baker_residual(s, constant_on(s, pairs, std::log(0.5)), pairs);
  CHECK(half.residual == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(half.classification == BakerClass::Bounded);
  CHECK(half.pairs == 16);

  BakerOptions tight;
  tight.bound = 0.1;
  CHECK(baker_residual(s, constant_on(s, pairs, std::log(0.5)), pairs, tight).classification ==
        BakerClass::Neither);
}

TEST_CASE("Baker residual only accepts solutions of the plain equation") {
  auto inst = exact_reals(0.4, real_grid(1, 5));
  // ln f(y) = 0.4 y does not solve f(xy) = f(x) f(y); the Baker class only
  // sees multiplicative solutions of the plain equation.
  auto pairs = grid_pairs(inst.grid);
  auto r = baker_residual(inst.semigroup, tabulate_pairs(inst, pairs), pairs);
  CHECK(r.classification != BakerClass::NearExponential);

  auto mon = Semigroup::free_monoid({"n"});
  std::vector<Element> g;
  for (int n = 0; n <= 4; ++n) g.push_back(Element::exponents({n}));
  auto mp = grid_pairs(g);
  LogFunction lf;
  for (const auto& [x, y] : mp) {
    for (const auto& e : {x, y, mon.combine(x, y)}) lf.set(e, 0.3 * static_cast<double>(e.exps()[0]));
  }
  auto exact = baker_residual(mon, lf, mp);
  CHECK(exact.classification == BakerClass::NearExponential);
  CHECK(exact.log_residual < 1e-14);
}

TEST_CASE("Ger residual") {
  auto s = Semigroup::positive_reals();
  auto pairs = grid_pairs(real_grid(1, 3));
  auto lit = ger_residual(s, constant_on(s, pairs, std::log(2.0)), pairs, GerForm::LiteralAdditive);
  CHECK(lit.residual == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lit.worst.has_value());

  auto mon = Semigroup::free_monoid({"n"});
  std::vector<Element> g;
  for (int n = 0; n <= 3; ++n) g.push_back(Element::exponents({n}));
  auto mp = grid_pairs(g);
  LogFunction lf;
  for (const auto& [x, y] : mp) {
    for (const auto& e : {x, y, mon.combine(x, y)}) {
      lf.set(e, std::log(1.01) + static_cast<double>(e.exps()[0]));
    }
  }
  auto shifted = ger_residual(mon, lf, mp);
  CHECK(shifted.residual == doctest::Approx(oracle::kGerShifted).epsilon(1e-12));
  CHECK(shifted.pairs == 16);

  LogFunction zero = constant_on(s, pairs, -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(ger_residual(s, zero, pairs), Error);
}

TEST_CASE("alpha matches the oracle partial sums") {
  CHECK(std::abs(jung_alpha(2).value - oracle::kAlpha2) <= 1e-12);
  CHECK(std::abs(jung_alpha(3).value - oracle::kAlpha3) <= 1e-12);
  CHECK(std::abs(jung_alpha(5).value - oracle::kAlpha5) <= 1e-12);
  CHECK(jung_alpha(2).terms <= 10);
}

TEST_CASE("alpha satisfies its functional equation") {
  for (double x : {1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 100.0}) {
    double lhs = jung_alpha(x).value;
    double rhs = (1.0 + jung_alpha(x * x).value) / x;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, lhs));
  }
}

TEST_CASE("alpha is decreasing with x alpha(x) -> 1") {
  double prev = jung_alpha(1.01).value;
  for (double x = 1.1; x < 1e4; x *= 1.3) {
    double v = jung_alpha(x).value;
    CHECK(v < prev);
    prev = v;
  }
  CHECK(jung_alpha(1e6).value * 1e6 == doctest::Approx(1.0).epsilon(1e-11));
  CHECK_THROWS_AS(jung_alpha(1.0), PreconditionError);
  CHECK_THROWS_AS(jung_alpha(0.5), PreconditionError);
  CHECK_THROWS_AS(jung_alpha(2.0, 0.0), PreconditionError);
}

TEST_CASE("sandwich rows match the oracle") {
  auto inst = jung_instance(0.1);
  std::vector<double> xs{0.5, 1.0, 2.0, 3.0, 4.0};
  auto res = jung_sandwich(inst, 0.1, xs);
  CHECK(res.base == doctest::Approx(2.0).epsilon(1e-10));
  REQUIRE(res.checks.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& row = oracle::kSandwich[i];
    const auto& c = res.checks[i];
    CHECK(c.x == row.x);
    CHECK(c.alpha == doctest::Approx(row.alpha).epsilon(1e-14));
    CHECK(c.lower == doctest::Approx(row.lower).epsilon(1e-14));
    CHECK(c.upper == doctest::Approx(row.upper).epsilon(1e-14));
    CHECK(c.ratio == doctest::Approx(row.ratio).epsilon(1e-10));
    CHECK(c.holds);
  }
}

TEST_CASE("sandwich preconditions") {
  std::vector<double> xs{2.0};
  CHECK_THROWS_AS(jung_sandwich(jung_instance(0.1), 0.0, xs), PreconditionError);
  CHECK_THROWS_AS(jung_sandwich(jung_instance(0.1), 1.0, xs), PreconditionError);
  CHECK_THROWS_AS(jung_sandwich(jung_instance(0.1), 0.01, xs), PreconditionError);
  auto mon = monoid({2}, 1.0, 0.0, 0.1, box_grid(1, 2));
  CHECK_THROWS_AS(jung_sandwich(mon, 0.1, xs), PreconditionError);
}
