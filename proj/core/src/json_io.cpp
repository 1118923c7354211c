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

#include "superstab/json_io.hpp"

#include <charconv>
#include <cmath>

#include "superstab/errors.hpp"

namespace superstab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

/// Extended reals: non-finite values become the strings "inf", "-inf", "nan".
json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path + "." + key, "missing field");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  return j.get<double>();
}

double number_field(const json& j, const char* key, const std::string& path) {
  return number(field(j, key, path), path + "." + key);
}

double number_or(const json& j, const char* key, double fallback, const std::string& path) {
  if (!j.contains(key)) return fallback;
  return number(j.at(key), path + "." + key);
}

std::string string_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_string()) bad(path + "." + key, "expected a string");
  return v.get<std::string>();
}

std::vector<double> numbers(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<double> numbers_or_empty(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) return {};
  return numbers(j.at(key), path + "." + key);
}

Element key_element(const std::string& key, const std::string& path) {
  try {
    return Element::from_key(key);
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

std::map<Element, double> element_map(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object keyed by element");
  std::map<Element, double> out;
  for (const auto& [k, v] : j.items()) {
    out[key_element(k, path + "[\"" + k + "\"]")] = number(v, path + "[\"" + k + "\"]");
  }
  return out;
}

json element_map_json(const std::map<Element, double>& m) {
  json out = json::object();
  for (const auto& [x, v] : m) out[x.key()] = v;
  return out;
}

json map_json(const MultiplicativeMap& m) { return m.bases; }

json exact_json(const ExactExponential& e) {
  json j{{"kind", "exact_exponential"}, {"c", e.c}};
  if (!e.map.bases.empty()) j["bases"] = map_json(e.map);
  return j;
}

ExactExponential exact_from(const json& j, const std::string& path) {
  if (string_field(j, "kind", path) != "exact_exponential") {
    bad(path + ".kind", "expected \"exact_exponential\"");
  }
  return {number_field(j, "c", path), {numbers_or_empty(j, "bases", path)}};
}

json perturbation_json(const Perturbation& p) {
  switch (p.family) {
    case PerturbationFamily::InversePower:
      return {{"family", "inverse_power"}, {"amp", p.amp}, {"power", p.param}};
    case PerturbationFamily::Sine:
      return {{"family", "sine"}, {"amp", p.amp}, {"freq", p.param}};
    case PerturbationFamily::Constant:
      return {{"family", "constant"}, {"value", p.amp}};
  }
  return {};
}

Perturbation perturbation_from(const json& j, const std::string& path) {
  std::string fam = string_field(j, "family", path);
  if (fam == "inverse_power") {
    return {PerturbationFamily::InversePower, number_field(j, "amp", path),
            number_or(j, "power", 2.0, path)};
  }
  if (fam == "sine") {
    return {PerturbationFamily::Sine, number_field(j, "amp", path), number_or(j, "freq", 1.0, path)};
  }
  if (fam == "constant") return {PerturbationFamily::Constant, number_field(j, "value", path), 0.0};
  bad(path + ".family", "unknown perturbation family \"" + fam + "\"");
}

json function_json(const FunctionSpec& f) {
  return std::visit(overloaded{
                        [](const ExactExponential& e) { return exact_json(e); },
                        [](const PerturbedFunction& p) {
                          json terms = json::array();
                          for (const auto& t : p.terms) terms.push_back(perturbation_json(t));
                          return json{{"kind", "perturbed"},
                                      {"base", exact_json(p.base)},
                                      {"perturbations", terms}};
                        },
                        [](const TableFunction& t) {
                          return json{{"kind", "table"},
                                      {"entries", element_map_json(t.entries)},
                                      {"orbit_depth", t.orbit_depth}};
                        },
                    },
                    f);
}

FunctionSpec function_from(const json& j, const std::string& path) {
  std::string kind = string_field(j, "kind", path);
  if (kind == "exact_exponential") return exact_from(j, path);
  if (kind == "perturbed") {
    PerturbedFunction p{exact_from(field(j, "base", path), path + ".base"), {}};
    const json& terms = field(j, "perturbations", path);
    if (!terms.is_array()) bad(path + ".perturbations", "expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      p.terms.push_back(perturbation_from(terms[i], path + ".perturbations[" + std::to_string(i) + "]"));
    }
    return p;
  }
  if (kind == "table") {
    const json& depth = field(j, "orbit_depth", path);
    if (!depth.is_number_integer()) bad(path + ".orbit_depth", "expected an integer");
    return TableFunction{element_map(field(j, "entries", path), path + ".entries"), depth.get<int>()};
  }
  bad(path + ".kind", "unknown function kind \"" + kind + "\"");
}

json exponent_json(const ExponentSpec& g) {
  return std::visit(
      overloaded{
          [](const IdentityExponent&) { return json{{"kind", "identity"}}; },
          [](const LinearFormExponent& l) { return json{{"kind", "linear_form"}, {"weights", l.weights}}; },
          [](const CharacterExponent& c) {
            return json{{"kind", "exponential_form"}, {"bases", map_json(c.map)}};
          },
          [](const BoundedExponent& b) {
            return json{{"kind", "bounded"},
                        {"family", b.family == BoundedFamily::Sine ? "sine" : "constant"},
                        {"bound", b.bound},
                        {"freq", b.freq},
                        {"phase", b.phase}};
          },
          [](const TableExponent& t) { return json{{"kind", "table"}, {"entries", element_map_json(t.entries)}}; },
      },
      g);
}

ExponentSpec exponent_from(const json& j, const std::string& path) {
  std::string kind = string_field(j, "kind", path);
  if (kind == "identity") return IdentityExponent{};
  if (kind == "linear_form") return LinearFormExponent{numbers(field(j, "weights", path), path + ".weights")};
  if (kind == "exponential_form") {
    return CharacterExponent{{numbers(field(j, "bases", path), path + ".bases")}};
  }
  if (kind == "bounded") {
    std::string fam = string_field(j, "family", path);
    BoundedExponent b;
    if (fam == "sine") {
      b.family = BoundedFamily::Sine;
    } else if (fam == "constant") {
      b.family = BoundedFamily::Constant;
    } else {
      bad(path + ".family", "unknown bounded family \"" + fam + "\"");
    }
    b.bound = number_field(j, "bound", path);
    b.freq = number_or(j, "freq", 1.0, path);
    b.phase = number_or(j, "phase", 0.0, path);
    return b;
  }
  if (kind == "table") return TableExponent{element_map(field(j, "entries", path), path + ".entries")};
  bad(path + ".kind", "unknown exponent kind \"" + kind + "\"");
}

json factor_json(const PowerFactor& f) { return {{"coef", f.coef}, {"power", f.power}}; }

PowerFactor factor_from(const json& j, const std::string& path) {
  return {number_field(j, "coef", path), number_or(j, "power", 0.0, path)};
}

json bound_json(const BoundSpec& psi) {
  return std::visit(overloaded{
                        [](const ConstantBound& c) { return json{{"kind", "constant"}, {"delta", c.delta}}; },
                        [](const SeparableBound& s) {
                          return json{{"kind", "separable"}, {"u", factor_json(s.u)}, {"v", factor_json(s.v)}};
                        },
                        [](const TableBound& t) {
                          json entries = json::array();
                          for (const auto& [xy, v] : t.entries) {
                            entries.push_back({{"x", to_json(xy.first)}, {"y", to_json(xy.second)}, {"value", v}});
                          }
                          return json{{"kind", "table"}, {"entries", entries}, {"default", t.fallback}};
                        },
                    },
                    psi);
}

BoundSpec bound_from(const json& j, const std::string& path) {
  std::string kind = string_field(j, "kind", path);
  if (kind == "constant") return ConstantBound{number_field(j, "delta", path)};
  if (kind == "separable") {
    return SeparableBound{factor_from(field(j, "u", path), path + ".u"),
                          factor_from(field(j, "v", path), path + ".v")};
  }
  if (kind == "table") {
    TableBound t;
    t.fallback = number_or(j, "default", 0.0, path);
    const json& entries = field(j, "entries", path);
    if (!entries.is_array()) bad(path + ".entries", "expected an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      std::string p = path + ".entries[" + std::to_string(i) + "]";
      t.entries[{element_from_json(field(entries[i], "x", p), p + ".x"),
                 element_from_json(field(entries[i], "y", p), p + ".y")}] = number_field(entries[i], "value", p);
    }
    return t;
  }
  bad(path + ".kind", "unknown bound kind \"" + kind + "\"");
}

json failure_json(const ValidationFailure& f) {
  return {{"kind", f.kind == FailureKind::Ratio ? "ratio" : "monotonicity"},
          {"x", to_json(f.x)},
          {"y", to_json(f.y)},
          {"anchor", f.anchor ? to_json(*f.anchor) : json(nullptr)},
          {"orbit_step", f.orbit_step},
          {"magnitude", num(f.magnitude)}};
}

json conclusion_json(const ConclusionResidual& c) {
  return {{"residual", num(c.residual)},
          {"identity_residual", num(c.identity_residual)},
          {"raw_residual", num(c.raw_residual)},
          {"raw_identity_residual", num(c.raw_identity_residual)},
          {"evaluated_pairs", c.evaluated_pairs},
          {"identity_pairs", c.identity_pairs},
          {"skipped_pairs", c.skipped_pairs}};
}

}  // namespace

json to_json(const Element& e) {
  if (e.is_real()) return {{"real", e.value()}};
  return {{"exp", e.exps()}};
}

Element element_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an element object {\"real\": x} or {\"exp\": [...]}");
  try {
    if (j.contains("real")) return Element::real(number(j.at("real"), path + ".real"));
    if (j.contains("exp")) {
      const json& v = j.at("exp");
      if (!v.is_array()) bad(path + ".exp", "expected an array of integers");
      ExpVector exps;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer()) bad(path + ".exp[" + std::to_string(i) + "]", "expected an integer");
        exps.push_back(v[i].get<Exponent>());
      }
      return Element::exponents(std::move(exps));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    bad(path, e.what());
  }
  bad(path, "expected \"real\" or \"exp\"");
}

json to_json(const Semigroup& s) {
  return {{"kind", to_string(s.kind())}, {"generators", s.generator_names()}};
}

json to_json(const Instance& inst) {
  json grid = json::array();
  for (const auto& x : inst.grid) grid.push_back(to_json(x));
  return {{"semigroup", to_json(inst.semigroup)},
          {"f", function_json(inst.f)},
          {"g", exponent_json(inst.g)},
          {"psi", bound_json(inst.psi)},
          {"grid", grid}};
}

Instance instance_from_json(const json& j) {
  const std::string root = "$";
  Instance inst;
  const json& sg = field(j, "semigroup", root);
  std::string kind = string_field(sg, "kind", "$.semigroup");
  if (kind == "positive_reals") {
    inst.semigroup = Semigroup::positive_reals();
  } else if (kind == "free_commutative_monoid") {
    const json& gens = field(sg, "generators", "$.semigroup");
    if (!gens.is_array() || gens.empty()) bad("$.semigroup.generators", "expected a nonempty array of names");
    std::vector<std::string> names;
    for (const auto& n : gens) {
      if (!n.is_string()) bad("$.semigroup.generators", "expected strings");
      names.push_back(n.get<std::string>());
    }
    inst.semigroup = Semigroup::free_monoid(std::move(names));
  } else {
    bad("$.semigroup.kind", "unknown semigroup kind \"" + kind + "\"");
  }
  inst.f = function_from(field(j, "f", root), "$.f");
  inst.g = exponent_from(field(j, "g", root), "$.g");
  inst.psi = bound_from(field(j, "psi", root), "$.psi");
  const json& grid = field(j, "grid", root);
  if (!grid.is_array()) bad("$.grid", "expected an array of elements");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    inst.grid.push_back(element_from_json(grid[i], "$.grid[" + std::to_string(i) + "]"));
  }
  try {
    check_instance(inst);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("$.") + e.what());
  }
  return inst;
}

Instance parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": malformed JSON");
  }
  return instance_from_json(j);
}

json to_json(const ValidationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(failure_json(f));
  json per_anchor = json::array();
  for (const auto& a : r.per_anchor) {
    per_anchor.push_back({{"anchor", to_json(a.anchor)}, {"holds", a.holds}, {"worst_increase", num(a.worst_increase)}});
  }
  return {{"hypothesis_holds", r.hypothesis_holds},
          {"worst_violation", num(r.worst_violation)},
          {"monotonicity_holds", r.monotonicity_holds},
          {"anchor_set_nonempty", r.anchor_set_nonempty},
          {"checked_pairs", r.checked_pairs},
          {"truncated_orbits", r.truncated_orbits},
          {"failure_count", r.failure_count},
          {"failures", failures},
          {"per_anchor", per_anchor}};
}

json to_json(const IterationTrace& t) {
  json out = json::array();
  for (const auto& s : t.steps) {
    out.push_back({{"n", s.n}, {"distance", num(s.distance)}, {"ratio", s.ratio ? num(*s.ratio) : json(nullptr)}});
  }
  return out;
}

json to_json(const ContractionCertificate& c) {
  return {{"lipschitz_bound", num(c.lipschitz_bound)},
          {"measured_ratio", num(c.measured_ratio)},
          {"aposteriori_bound", num(c.aposteriori_bound)},
          {"final_distance", num(c.final_distance)},
          {"fixed_point_residual", num(c.fixed_point_residual)},
          {"iterations", c.iterations},
          {"converged", c.converged},
          {"contraction_holds", c.contraction_holds},
          {"aposteriori_holds", c.aposteriori_holds}};
}

json to_json(const BoundCheck& b) {
  return {{"anchor", to_json(b.anchor)}, {"y", to_json(b.y)},   {"n", b.n},
          {"lhs", num(b.lhs)},           {"rhs", num(b.rhs)},   {"orbit_sum", num(b.orbit_sum)},
          {"holds", b.holds},            {"sum_consistent", b.sum_consistent}, {"slack", num(b.slack)}};
}

json to_json(const TheoremReport& r) {
  json anchors = json::array();
  for (const auto& a : r.anchors) anchors.push_back({{"element", to_json(a.element)}, {"g", num(a.g)}});

  json limits = json::array();
  for (const auto& l : r.limits) {
    json values = json::array();
    for (const auto& [y, v] : l.values.values()) values.push_back({{"y", to_json(y)}, {"T", num(v)}});
    limits.push_back({{"anchor", to_json(l.anchor)},
                      {"g_anchor", num(l.g_anchor)},
                      {"certificate", to_json(l.certificate)},
                      {"trace", to_json(l.trace)},
                      {"uniqueness_gap", num(l.uniqueness_gap)},
                      {"values", values}});
  }

  json checks = json::array();
  double min_slack = std::numeric_limits<double>::infinity();
  for (const auto& b : r.bound_checks) {
    checks.push_back(to_json(b));
    min_slack = std::min(min_slack, b.slack);
  }

  json bounds = json::array();
  for (const auto& p : r.final_bounds) {
    bounds.push_back({{"y", to_json(p.y)},
                      {"bound", num(p.bound)},
                      {"gap", num(p.gap)},
                      {"holds", p.holds},
                      {"orbit_bound", num(p.orbit_bound)}});
  }

  return {{"verdict", to_string(r.verdict)},
          {"failed_stage", r.failed_stage},
          {"hypothesis_verified_on_sample", r.hypothesis_verified_on_sample},
          {"classification", to_string(r.classification)},
          {"validation", to_json(r.validation)},
          {"anchors", anchors},
          {"limits", limits},
          {"bound_checks",
           {{"count", r.bound_checks.size()},
            {"failures", r.bound_check_failures},
            {"min_slack", r.bound_checks.empty() ? json(nullptr) : num(min_slack)},
            {"checks", checks}}},
          {"anchor_agreement", num(r.anchor_agreement)},
          {"final_bounds", bounds},
          {"conclusion", conclusion_json(r.conclusion)}};
}

json to_json(const BakerResult& r) {
  return {{"residual", num(r.residual)},
          {"log_residual", num(r.log_residual)},
          {"sup_f", num(r.sup_f)},
          {"pairs", r.pairs},
          {"classification", to_string(r.classification)}};
}

json to_json(const GerResult& r) {
  json worst = nullptr;
  if (r.worst) worst = {{"x", to_json(r.worst->first)}, {"y", to_json(r.worst->second)}};
  return {{"residual", num(r.residual)}, {"pairs", r.pairs}, {"worst_pair", worst}};
}

json to_json(const JungAlpha& a) { return {{"alpha", num(a.value)}, {"terms", a.terms}}; }

json to_json(const SandwichCheck& c) {
  return {{"x", num(c.x)},         {"delta", num(c.delta)}, {"alpha", num(c.alpha)}, {"lower", num(c.lower)},
          {"upper", num(c.upper)}, {"ratio", num(c.ratio)}, {"holds", c.holds}};
}

json to_json(const JungResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"log_base", num(r.log_base)},
          {"base", num(r.base)},
          {"worst_quotient_error", num(r.worst_quotient_error)},
          {"recovery_verdict", to_string(r.recovery.verdict)},
          {"checks", checks}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string sandwich_csv(const JungResult& r) {
  std::string out = "x,alpha,lower,ratio,upper,holds\n";
  for (const auto& c : r.checks) {
    out += shortest(c.x) + "," + shortest(c.alpha) + "," + shortest(c.lower) + "," + shortest(c.ratio) + "," +
           shortest(c.upper) + "," + (c.holds ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace superstab
