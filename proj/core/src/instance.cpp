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

#include "superstab/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "superstab/errors.hpp"

namespace superstab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr double kEps = std::numeric_limits<double>::epsilon();

double finite_or_throw(double v, const char* what, const Element& x) {
  if (!std::isfinite(v)) {
    throw RangeError(std::string(what) + " is not finite at " + x.key() +
                     "; reduce the orbit depth");
  }
  return v;
}

template <class Map>
double table_lookup(const Map& entries, const Element& x, const char* name) {
  auto it = entries.find(x);
  if (it == entries.end()) {
    throw CoverageError(std::string(name) + " table has no entry for element " + x.key(),
                        x.key());
  }
  return it->second;
}

void check_map(const Semigroup& s, const MultiplicativeMap& m, const std::string& where) {
  if (s.kind() == SemigroupKind::PositiveReals) {
    if (!m.bases.empty()) {
      throw PreconditionError(where + ": positive reals take no map bases");
    }
    return;
  }
  if (m.bases.size() != s.arity()) {
    throw PreconditionError(where + ": expected " + std::to_string(s.arity()) +
                            " map bases, got " + std::to_string(m.bases.size()));
  }
  for (double b : m.bases) {
    if (!std::isfinite(b) || b <= 0.0) {
      throw PreconditionError(where + ": map bases must be finite and > 0");
    }
  }
}

void check_members(const Semigroup& s, const Element& x, const std::string& where) {
  if (!s.contains(x)) {
    throw PreconditionError(where + ": element " + x.key() + " is not in the semigroup");
  }
}

}  // namespace

double eval_map(const Semigroup& s, const MultiplicativeMap& m, const Element& x) {
  if (s.kind() == SemigroupKind::PositiveReals) return x.value();
  const auto& e = x.exps();
  if (e.size() != m.bases.size()) throw DomainError("map arity mismatch at " + x.key());
  double v = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) v *= std::pow(m.bases[i], static_cast<double>(e[i]));
  }
  return finite_or_throw(v, "multiplicative map", x);
}

double eval_log_map(const Semigroup& s, const MultiplicativeMap& m, const Element& x) {
  if (s.kind() == SemigroupKind::PositiveReals) return x.log_value();
  const auto& e = x.exps();
  if (e.size() != m.bases.size()) throw DomainError("map arity mismatch at " + x.key());
  double v = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) v += static_cast<double>(e[i]) * std::log(m.bases[i]);
  }
  return v;
}

void check_instance(const Instance& inst) {
  const Semigroup& s = inst.semigroup;
  if (inst.grid.empty()) throw PreconditionError("grid: must be nonempty");
  for (const auto& x : inst.grid) check_members(s, x, "grid");

  auto check_base = [&](const ExactExponential& b, const std::string& where) {
    if (!std::isfinite(b.c)) throw PreconditionError(where + ": c must be finite");
    check_map(s, b.map, where);
  };
  std::visit(overloaded{
                 [&](const ExactExponential& e) { check_base(e, "f"); },
                 [&](const PerturbedFunction& p) {
                   check_base(p.base, "f.base");
                   for (const auto& t : p.terms) {
                     if (!std::isfinite(t.amp) || !std::isfinite(t.param)) {
                       throw PreconditionError("f.perturbations: parameters must be finite");
                     }
                     if (t.family == PerturbationFamily::InversePower && t.amp < 0.0) {
                       throw PreconditionError("f.perturbations: inverse_power needs amp >= 0");
                     }
                   }
                 },
                 [&](const TableFunction& t) {
                   if (t.orbit_depth < 0) {
                     throw PreconditionError("f.orbit_depth: must be nonnegative");
                   }
                   for (const auto& [x, v] : t.entries) {
                     check_members(s, x, "f.entries");
                     if (!std::isfinite(v) || v <= 0.0) {
                       throw PreconditionError("f.entries: value at " + x.key() +
                                               " must be finite and > 0");
                     }
                   }
                 },
             },
             inst.f);

  bool reals = s.kind() == SemigroupKind::PositiveReals;
  std::visit(overloaded{
                 [&](const IdentityExponent&) {
                   if (!reals) throw PreconditionError("g: identity needs the positive reals");
                 },
                 [&](const LinearFormExponent& l) {
                   if (reals || l.weights.size() != s.arity()) {
                     throw PreconditionError("g: linear_form needs one weight per generator");
                   }
                 },
                 [&](const CharacterExponent& c) { check_map(s, c.map, "g"); },
                 [&](const BoundedExponent& b) {
                   if (!std::isfinite(b.bound) || b.bound < 0.0 || !std::isfinite(b.freq) ||
                       !std::isfinite(b.phase)) {
                     throw PreconditionError("g: bounded family needs finite bound >= 0");
                   }
                 },
                 [&](const TableExponent& t) {
                   for (const auto& [x, v] : t.entries) {
                     check_members(s, x, "g.entries");
                     if (!std::isfinite(v)) throw PreconditionError("g.entries: must be finite");
                   }
                 },
             },
             inst.g);

  auto nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  std::visit(overloaded{
                 [&](const ConstantBound& c) {
                   if (!nonneg(c.delta)) throw PreconditionError("psi.delta: must be >= 0");
                 },
                 [&](const SeparableBound& b) {
                   if (!nonneg(b.u.coef) || !nonneg(b.v.coef) || !std::isfinite(b.u.power) ||
                       !std::isfinite(b.v.power)) {
                     throw PreconditionError("psi: separable factors need finite coef >= 0");
                   }
                 },
                 [&](const TableBound& t) {
                   if (!nonneg(t.fallback)) throw PreconditionError("psi.default: must be >= 0");
                   for (const auto& [xy, v] : t.entries) {
                     check_members(s, xy.first, "psi.entries");
                     check_members(s, xy.second, "psi.entries");
                     if (!nonneg(v)) throw PreconditionError("psi.entries: must be >= 0");
                   }
                 },
             },
             inst.psi);
}

namespace {

double eval_exact(const Semigroup& s, const ExactExponential& e, const Element& x) {
  if (e.c == 0.0) return 0.0;
  return e.c * eval_map(s, e.map, x);
}

double eval_term(const Semigroup& s, const MultiplicativeMap& m, const Perturbation& t,
                 const Element& x) {
  switch (t.family) {
    case PerturbationFamily::InversePower:
      if (t.amp == 0.0) return 0.0;
      return std::log1p(t.amp * std::exp(-t.param * eval_log_map(s, m, x)));
    case PerturbationFamily::Sine:
      return t.amp * std::sin(t.param * eval_map(s, m, x));
    case PerturbationFamily::Constant:
      return t.amp;
  }
  return 0.0;
}

}  // namespace

double eval_log_f(const Instance& inst, const Element& x) {
  const Semigroup& s = inst.semigroup;
  double v = std::visit(overloaded{
                            [&](const ExactExponential& e) { return eval_exact(s, e, x); },
                            [&](const PerturbedFunction& p) {
                              double sum = eval_exact(s, p.base, x);
                              for (const auto& t : p.terms) sum += eval_term(s, p.base.map, t, x);
                              return sum;
                            },
                            [&](const TableFunction& t) {
                              return std::log(table_lookup(t.entries, x, "f"));
                            },
                        },
                        inst.f);
  return finite_or_throw(v, "ln f", x);
}

double eval_g(const Instance& inst, const Element& x) {
  const Semigroup& s = inst.semigroup;
  double v = std::visit(
      overloaded{
          [&](const IdentityExponent&) { return x.value(); },
          [&](const LinearFormExponent& l) {
            const auto& e = x.exps();
            if (e.size() != l.weights.size()) throw DomainError("g arity mismatch at " + x.key());
            double dot = 0.0;
            for (std::size_t i = 0; i < e.size(); ++i) dot += l.weights[i] * static_cast<double>(e[i]);
            return dot;
          },
          [&](const CharacterExponent& c) { return eval_map(s, c.map, x); },
          [&](const BoundedExponent& b) {
            if (b.family == BoundedFamily::Constant) return b.bound;
            return b.bound * std::sin(b.freq * s.magnitude(x) + b.phase);
          },
          [&](const TableExponent& t) { return table_lookup(t.entries, x, "g"); },
      },
      inst.g);
  return finite_or_throw(v, "g", x);
}

double eval_psi(const Instance& inst, const Element& x, const Element& y, bool tilde) {
  const Semigroup& s = inst.semigroup;
  double v = std::visit(overloaded{
                            [&](const ConstantBound& c) { return c.delta; },
                            [&](const SeparableBound& b) {
                              double u = b.u.coef * std::pow(s.magnitude(x), b.u.power);
                              double w = b.v.coef * std::pow(s.magnitude(y), b.v.power);
                              return u * w;
                            },
                            [&](const TableBound& t) {
                              auto it = t.entries.find({x, y});
                              return it == t.entries.end() ? t.fallback : it->second;
                            },
                        },
                        inst.psi);
  return tilde ? 1.0 + v : v;
}

std::vector<Anchor> anchor_candidates(const Instance& inst) {
  std::vector<Anchor> out;
  for (const auto& a : inst.grid) {
    double g = eval_g(inst, a);
    if (std::abs(g) > 1.0) out.push_back({a, g});
  }
  std::sort(out.begin(), out.end(), [](const Anchor& l, const Anchor& r) {
    double gl = std::abs(l.g), gr = std::abs(r.g);
    if (gl != gr) return gl > gr;
    return l.element < r.element;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Anchor& l, const Anchor& r) { return l.element == r.element; }),
            out.end());
  return out;
}

namespace {

/// y, ay, ..., a^depth y, stopping early if the orbit overflows.
std::vector<Element> orbit(const Semigroup& s, const Element& a, const Element& y, int depth,
                           bool& truncated) {
  std::vector<Element> pts{y};
  truncated = false;
  for (int k = 1; k <= depth; ++k) {
    try {
      pts.push_back(s.combine(a, pts.back()));
    } catch (const RangeError&) {
      truncated = true;
      break;
    }
  }
  return pts;
}

struct RatioOutcome {
  double raw = 0.0;
  double excess = 0.0;
};

RatioOutcome ratio_violation(const Instance& inst, const Element& x, const Element& y,
                             double rel_tol) {
  double lf_xy = eval_log_f(inst, inst.semigroup.combine(x, y));
  double gx_lf_y = eval_g(inst, x) * eval_log_f(inst, y);
  double psi = eval_psi(inst, x, y, false);
  double delta = lf_xy - gx_lf_y;
  if (!std::isfinite(delta)) {
    return {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }
  double r = std::expm1(delta);
  double raw = std::max(-r, r - psi);
  double scale = std::max({1.0, std::abs(lf_xy), std::abs(gx_lf_y)});
  double allowance = rel_tol * std::max(1.0, psi) + 8.0 * kEps * scale * (1.0 + std::abs(r));
  return {raw, raw - allowance};
}

}  // namespace

ValidationReport validate_instance(const Instance& inst, std::span<const Element> anchors,
                                   int orbit_depth, const ValidationOptions& opts) {
  if (orbit_depth < 0) throw PreconditionError("orbit_depth must be nonnegative");
  const Semigroup& s = inst.semigroup;
  ValidationReport rep;

  auto candidates = anchor_candidates(inst);
  rep.anchor_set_nonempty = !candidates.empty();
  std::vector<Element> used;
  if (anchors.empty()) {
    for (const auto& c : candidates) used.push_back(c.element);
  } else {
    used.assign(anchors.begin(), anchors.end());
  }

  auto record = [&](ValidationFailure f) {
    ++rep.failure_count;
    if (rep.failures.size() < opts.max_failures) rep.failures.push_back(std::move(f));
  };

  auto check_pair = [&](const Element& x, const Element& y, const std::optional<Element>& a,
                        int step) {
    ++rep.checked_pairs;
    RatioOutcome o = ratio_violation(inst, x, y, opts.rel_tol);
    if (o.excess > 0.0) {
      rep.hypothesis_holds = false;
      rep.worst_violation = std::max(rep.worst_violation, o.excess);
      record({FailureKind::Ratio, x, y, a, step, o.raw});
    }
  };

  // (i) the two-sided ratio condition on grid pairs and orbit pairs.
  for (const auto& x : inst.grid) {
    for (const auto& y : inst.grid) {
      check_pair(x, y, std::nullopt, 0);
      for (const auto& a : used) {
        bool truncated = false;
        auto pts = orbit(s, a, y, orbit_depth, truncated);
        if (truncated) ++rep.truncated_orbits;
        for (std::size_t k = 1; k < pts.size(); ++k) check_pair(x, pts[k], a, static_cast<int>(k));
      }
    }
  }

  // (ii) psi(x, a y') <= psi(x, y') along each anchor orbit.
  int mono_depth = std::max(orbit_depth, 1);
  for (const auto& a : used) {
    AnchorMonotonicity am{a, true, 0.0};
    for (const auto& x : inst.grid) {
      for (const auto& y : inst.grid) {
        bool truncated = false;
        auto pts = orbit(s, a, y, mono_depth, truncated);
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
          double before = eval_psi(inst, x, pts[k], false);
          double after = eval_psi(inst, x, pts[k + 1], false);
          double increase = after - before;
          am.worst_increase = std::max(am.worst_increase, increase);
          if (increase > opts.rel_tol * std::max(1.0, before)) {
            am.holds = false;
            rep.monotonicity_holds = false;
            record({FailureKind::Monotonicity, x, pts[k], a, static_cast<int>(k), increase});
          }
        }
      }
    }
    rep.per_anchor.push_back(std::move(am));
  }
  return rep;
}

}  // namespace superstab
