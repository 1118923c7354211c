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
#include <string>

#include "superstab/errors.hpp"
#include "superstab/json_io.hpp"
#include "support.hpp"

using namespace superstab;
using namespace superstab::testing;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

Instance random_instance(std::mt19937_64& rng) {
  bool reals = rng() % 2 == 0;
  Instance inst;
  std::vector<double> bases;
  if (reals) {
    inst.grid = real_grid({1.0, uniform(rng, 1.1, 3.0), uniform(rng, 3.0, 9.0)});
  } else {
    std::size_t k = 1 + rng() % 3;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back("g" + std::to_string(i));
      bases.push_back(uniform(rng, 1.5, 4.0));
    }
    inst.semigroup = Semigroup::free_monoid(names);
    inst.grid = box_grid(static_cast<int>(k), 1);
  }
  ExactExponential base{uniform(rng, -2, 2), {bases}};
  switch (rng() % 3) {
    case 0:
      inst.f = base;
      break;
    case 1:
      inst.f = PerturbedFunction{base,
                                 {{PerturbationFamily::InversePower, uniform(rng, 0, 1), 2.0},
                                  {PerturbationFamily::Sine, uniform(rng, -1, 1), uniform(rng, 0, 3)},
                                  {PerturbationFamily::Constant, uniform(rng, -1, 1), 0.0}}};
      break;
    default: {
      TableFunction t;
      for (const auto& x : inst.grid) t.entries[x] = std::exp(uniform(rng, -3, 3));
      t.orbit_depth = static_cast<int>(rng() % 4);
      inst.f = t;
    }
  }
  switch (rng() % 4) {
    case 0:
      if (reals) {
        inst.g = IdentityExponent{};
      } else {
        inst.g = CharacterExponent{{bases}};
      }
      break;
    case 1:
      inst.g = BoundedExponent{rng() % 2 ? BoundedFamily::Sine : BoundedFamily::Constant,
                               uniform(rng, 0, 3), uniform(rng, 0, 2), uniform(rng, -1, 1)};
      break;
    case 2: {
      TableExponent t;
      for (const auto& x : inst.grid) t.entries[x] = uniform(rng, -5, 5);
      inst.g = t;
      break;
    }
    default:
      if (reals) {
        inst.g = IdentityExponent{};
      } else {
        std::vector<double> w;
        for (std::size_t i = 0; i < bases.size(); ++i) w.push_back(uniform(rng, -1, 1));
        inst.g = LinearFormExponent{w};
      }
  }
  switch (rng() % 3) {
    case 0:
      inst.psi = ConstantBound{uniform(rng, 0, 1)};
      break;
    case 1:
      inst.psi = SeparableBound{{uniform(rng, 0, 1), uniform(rng, -2, 2)},
                                {uniform(rng, 0, 1), uniform(rng, -2, 0)}};
      break;
    default: {
      TableBound t;
      t.fallback = uniform(rng, 0, 1);
      t.entries[{inst.grid.front(), inst.grid.back()}] = uniform(rng, 0, 1);
      inst.psi = t;
    }
  }
  return inst;
}

}  // namespace

TEST_CASE("property: instances round-trip through JSON") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 200; ++i) {
    Instance inst = random_instance(rng);
    std::string text = dump(to_json(inst));
    Instance back = parse_instance(text);
    CHECK(back == inst);
    CHECK(dump(to_json(back)) == text);
  }
}

TEST_CASE("elements round-trip through JSON") {
  for (const auto& e : {Element::real(0.1), Element::real(123456.789), Element::exponents({0, 3, 1})}) {
    CHECK(element_from_json(to_json(e)) == e);
  }
  CHECK_THROWS_AS(element_from_json(json{{"real", -1.0}}), ParseError);
  CHECK_THROWS_AS(element_from_json(json{{"exp", {1, -2}}}), ParseError);
  CHECK_THROWS_AS(element_from_json(json{{"exp", {1.5}}}), ParseError);
  CHECK_THROWS_AS(element_from_json(json{{"other", 1}}), ParseError);
}

TEST_CASE("dump is deterministic with sorted keys and a trailing newline") {
  json j{{"b", 1}, {"a", 0.1}};
  std::string s = dump(j);
  CHECK(s.back() == '\n');
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(s.find("0.1") != std::string::npos);
}

TEST_CASE("parse errors name the offending field") {
  const std::string ok = R"({
    "semigroup": {"kind": "positive_reals", "generators": []},
    "f": {"kind": "perturbed", "base": {"kind": "exact_exponential", "c": 1},
          "perturbations": [{"family": "inverse_power", "amp": 0.1, "power": 2}]},
    "g": {"kind": "identity"},
    "psi": {"kind": "constant", "delta": 0.2},
    "grid": [{"real": 1}, {"real": 2}]
  })";
  CHECK_NOTHROW(parse_instance(ok));

  auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = ok;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK(parse_error_of(replace(R"("c": 1)", R"("k": 1)")).find("$.f.base.c") == 0);
  CHECK(parse_error_of(replace(R"("amp": 0.1)", R"("amp": "x")")).find("$.f.perturbations[0].amp") == 0);
  CHECK(parse_error_of(replace(R"("kind": "identity")", R"("kind": "cubic")")).find("$.g.kind") == 0);
  CHECK(parse_error_of(replace(R"({"real": 2})", R"({"real": 0})")).find("$.grid[1]") == 0);
  CHECK(parse_error_of(replace(R"("delta": 0.2)", R"("delta": -0.2)")).find("$.psi") == 0);
  CHECK(parse_error_of(replace(R"("positive_reals")", R"("reals")")).find("$.semigroup.kind") == 0);
  CHECK(parse_error_of(replace(R"("grid": [)", R"("grod": [)")).find("$.grid") == 0);

  std::string syntax = parse_error_of(replace(R"("g": {)", R"("g": {,)"));
  CHECK(syntax.find("line 5") == 0);
}

TEST_CASE("reports serialize non-finite numbers as strings") {
  auto inst = perturbed_reals(1.0, 0.1, 0.2, real_grid(1, 8));
  auto rep = run_superstability(inst);
  json j = to_json(rep);
  CHECK(j["verdict"] == "SuperstableRecovered");
  CHECK(j.contains("bound_checks"));
  std::string text = dump(j);
  CHECK(text == dump(to_json(run_superstability(inst))));

  ContractionCertificate c;
  c.fixed_point_residual = std::numeric_limits<double>::quiet_NaN();
  c.aposteriori_bound = std::numeric_limits<double>::infinity();
  json cj = to_json(c);
  CHECK(cj["fixed_point_residual"] == "nan");
  CHECK(cj["aposteriori_bound"] == "inf");
}

TEST_CASE("sandwich csv") {
  JungResult r;
  r.checks.push_back({2.0, 0.1, 0.5, 0.9, 1.1, 1.0, true});
  std::string csv = sandwich_csv(r);
  CHECK(csv.rfind("x,alpha,lower,ratio,upper,holds\n", 0) == 0);
  CHECK(csv.find("2,0.5,0.9,1,1.1,true") != std::string::npos);
}
