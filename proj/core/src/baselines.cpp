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

#include "superstab/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "superstab/errors.hpp"

namespace superstab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string pair_key(const ElementPair& p) {
  return "(" + p.first.key() + ", " + p.second.key() + ")";
}

struct PairLogs {
  double x, y, xy;
};

PairLogs logs_for(const Semigroup& s, const LogFunction& log_f, const ElementPair& p) {
  return {log_f.at(p.first), log_f.at(p.second), log_f.at(s.combine(p.first, p.second))};
}

}  // namespace

std::vector<ElementPair> grid_pairs(std::span<const Element> grid) {
  std::vector<ElementPair> out;
  out.reserve(grid.size() * grid.size());
  for (const auto& x : grid) {
    for (const auto& y : grid) out.emplace_back(x, y);
  }
  return out;
}

LogFunction tabulate_pairs(const Instance& inst, std::span<const ElementPair> pairs) {
  LogFunction out;
  auto put = [&](const Element& e) {
    if (!out.contains(e)) out.set(e, eval_log_f(inst, e));
  };
  for (const auto& [x, y] : pairs) {
    put(x);
    put(y);
    put(inst.semigroup.combine(x, y));
  }
  return out;
}

BakerResult baker_residual(const Semigroup& s, const LogFunction& log_f,
                           std::span<const ElementPair> pairs, const BakerOptions& opts) {
  BakerResult r;
  double scale = 1.0;
  for (const auto& p : pairs) {
    PairLogs l = logs_for(s, log_f, p);
    double prod = std::exp(l.x + l.y);
    double fxy = std::exp(l.xy);
    double diff = std::abs(fxy - prod);
    r.residual = std::max(r.residual, std::isnan(diff) ? std::numeric_limits<double>::infinity() : diff);
    r.log_residual = std::max(r.log_residual, std::abs(l.xy - l.x - l.y));
    r.sup_f = std::max({r.sup_f, std::exp(l.x), std::exp(l.y), fxy});
    scale = std::max({scale, std::abs(l.x), std::abs(l.y), std::abs(l.xy)});
    ++r.pairs;
  }
  if (r.log_residual <= opts.log_tol + 4.0 * kEps * scale) {
    r.classification = BakerClass::NearExponential;
  } else if (r.sup_f <= opts.bound) {
    r.classification = BakerClass::Bounded;
  } else {
    r.classification = BakerClass::Neither;
  }
  return r;
}

GerResult ger_residual(const Semigroup& s, const LogFunction& log_f,
                       std::span<const ElementPair> pairs, GerForm form) {
  GerResult r;
  for (const auto& p : pairs) {
    PairLogs l = logs_for(s, log_f, p);
    double log_den = 0.0;
    if (form == GerForm::Multiplicative) {
      log_den = l.x + l.y;
    } else {
      double hi = std::max(l.x, l.y), lo = std::min(l.x, l.y);
      log_den = hi + std::log1p(std::exp(lo - hi));
    }
    if (!std::isfinite(log_den) || !std::isfinite(l.xy)) {
      throw Error("Ger quotient has a vanishing or non-finite denominator at pair " + pair_key(p));
    }
    double q = std::abs(std::expm1(l.xy - log_den));
    if (!r.worst || q > r.residual) {
      r.residual = q;
      r.worst = p;
    }
    ++r.pairs;
  }
  return r;
}

JungAlpha jung_alpha(double x, double tol) {
  if (!(x > 1.0)) {
    throw PreconditionError("alpha(x) requires x > 1; the series diverges for x <= 1");
  }
  if (!(tol > 0.0)) throw PreconditionError("alpha tolerance must be > 0");
  // prod_{i<n} x^(2^i) = x^(2^n - 1)
  const double lx = std::log(x);
  JungAlpha a;
  for (int n = 1; n <= 64; ++n) {
    double term = std::exp(-(std::ldexp(1.0, n) - 1.0) * lx);
    if (n > 1 && term < tol * a.value) break;
    a.value += term;
    a.terms = n;
  }
  return a;
}

JungResult jung_sandwich(const Instance& inst, double delta, std::span<const double> xs,
                         const JungOptions& opts) {
  if (inst.semigroup.kind() != SemigroupKind::PositiveReals ||
      !std::holds_alternative<IdentityExponent>(inst.g)) {
    throw PreconditionError("the sandwich needs the positive reals with g = identity");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw PreconditionError("delta must lie in (0, 1), got " + std::to_string(delta));
  }

  JungResult res;
  const Semigroup& s = inst.semigroup;
  for (const auto& x : inst.grid) {
    const double lf_x = eval_log_f(inst, x);
    for (const auto& y : inst.grid) {
      double q = std::abs(std::expm1(eval_log_f(inst, s.combine(x, y)) - y.value() * lf_x));
      res.worst_quotient_error = std::max(res.worst_quotient_error, q);
      if (!(q <= delta * (1.0 + opts.rel_tol))) {
        throw PreconditionError("|f(xy)/f(x)^y - 1| = " + std::to_string(q) + " exceeds delta at (" +
                                x.key() + ", " + y.key() + ")");
      }
    }
  }

  res.recovery = run_superstability(inst, opts.pipeline);
  if (res.recovery.limits.empty() || !res.recovery.limits.front().certificate.converged) {
    throw Error("base estimation needs a converged recovery of T");
  }
  res.log_base = res.recovery.limits.front().values.at(s.identity());
  res.base = std::exp(res.log_base);

  for (double x : xs) {
    if (!(x > 1.0)) continue;
    SandwichCheck c;
    c.x = x;
    c.delta = delta;
    c.alpha = jung_alpha(x).value;
    c.lower = std::pow(1.0 - delta, c.alpha);
    c.upper = std::pow(1.0 + delta, c.alpha);
    c.ratio = std::exp(x * res.log_base - eval_log_f(inst, Element::real(x)));
    c.holds = c.lower * (1.0 - opts.rel_tol) <= c.ratio && c.ratio <= c.upper * (1.0 + opts.rel_tol);
    res.checks.push_back(c);
  }
  return res;
}

const char* to_string(BakerClass c) noexcept {
  switch (c) {
    case BakerClass::NearExponential:
      return "NearExponential";
    case BakerClass::Bounded:
      return "Bounded";
    case BakerClass::Neither:
      return "Neither";
  }
  return "unknown";
}

const char* to_string(GerForm f) noexcept {
  return f == GerForm::Multiplicative ? "multiplicative" : "literal_additive";
}

}  // namespace superstab
