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

#include "superstab/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "superstab/errors.hpp"

namespace superstab {

LogFunction LogFunction::tabulate(std::span<const Element> domain,
                                  const std::function<double(const Element&)>& source) {
  LogFunction out;
  for (const auto& y : domain) out.set(y, source(y));
  return out;
}

double LogFunction::at(const Element& x) const {
  auto it = values_.find(x);
  if (it == values_.end()) {
    throw CoverageError("log function is not defined at " + x.key(), x.key());
  }
  return it->second;
}

std::vector<Element> LogFunction::domain() const {
  std::vector<Element> out;
  out.reserve(values_.size());
  for (const auto& [x, v] : values_) out.push_back(x);
  return out;
}

namespace {

double anchor_value(const Instance& inst, const Element& a) {
  double ga = eval_g(inst, a);
  if (!(std::abs(ga) > 1.0)) {
    throw AnchorError("element " + a.key() + " is not an anchor: |g(a)| = " +
                      std::to_string(std::abs(ga)) + " <= 1");
  }
  return ga;
}

double weighted_gap(double lhs, double rhs, double weight) {
  double diff = std::abs(lhs - rhs);
  if (!std::isfinite(diff)) return std::numeric_limits<double>::infinity();
  return diff / weight;
}

}  // namespace

LogFunction apply_contraction(const Instance& inst, const Element& a, const LogFunction& h,
                              std::span<const Element> domain) {
  double ga = anchor_value(inst, a);
  LogFunction out;
  for (const auto& y : domain) out.set(y, h.at(inst.semigroup.combine(a, y)) / ga);
  return out;
}

double generalized_distance(const LogFunction& h1, const LogFunction& h2, const Instance& inst,
                            const Element& a) {
  double sup = 0.0;
  for (const auto& [y, v] : h1.values()) {
    sup = std::max(sup, weighted_gap(v, h2.at(y), eval_psi(inst, a, y, true)));
  }
  return sup;
}

FixedPointResult iterate_fixed_point(const Instance& inst, const Element& a, const LogSource& h0,
                                     std::span<const Element> domain,
                                     const IterationOptions& opts) {
  if (!(opts.tol > 0.0)) throw PreconditionError("tol must be > 0");
  if (opts.n_max < 1) throw PreconditionError("n_max must be >= 1");
  if (domain.empty()) throw PreconditionError("iteration domain is empty");
  const double ga = anchor_value(inst, a);
  const double lipschitz = 1.0 / std::abs(ga);
  const Semigroup& s = inst.semigroup;
  const std::size_t m = domain.size();

  std::vector<double> weight(m);
  std::vector<Element> orbit(domain.begin(), domain.end());
  std::vector<double> start(m), current(m), next(m);
  for (std::size_t i = 0; i < m; ++i) {
    weight[i] = eval_psi(inst, a, domain[i], true);
    start[i] = h0(domain[i]);
    if (!std::isfinite(start[i])) {
      throw RangeError("start point is not finite at " + domain[i].key());
    }
  }
  current = start;

  auto as_function = [&](const std::vector<double>& vals) {
    LogFunction f;
    for (std::size_t i = 0; i < m; ++i) f.set(domain[i], vals[i]);
    return f;
  };
  auto distance = [&](const std::vector<double>& u, const std::vector<double>& v) {
    double sup = 0.0;
    for (std::size_t i = 0; i < m; ++i) sup = std::max(sup, weighted_gap(u[i], v[i], weight[i]));
    return sup;
  };
  // J^n h0 on every domain point, from the orbit point a^n y.
  auto step = [&](int n) {
    for (std::size_t i = 0; i < m; ++i) {
      orbit[i] = s.combine(a, orbit[i]);
      double v = h0(orbit[i]);
      for (int k = 0; k < n; ++k) v /= ga;
      next[i] = v;
    }
  };

  FixedPointResult res;
  if (opts.record_iterates) res.iterates.push_back(as_function(start));

  auto& cert = res.certificate;
  cert.lipschitz_bound = lipschitz;
  double previous = 0.0;
  double first = 0.0;
  bool orbit_available = true;
  for (int n = 1;; ++n) {
    try {
      step(n);
    } catch (const Error&) {
      // The orbit left the representable range or the table; the first step
      // is mandatory, later ones end the iteration unconverged.
      if (n == 1) throw;
      orbit_available = false;
      break;
    }
    double d = distance(next, current);
    if (n == 1) {
      if (!std::isfinite(d)) {
        throw Error("d(J h0, h0) is infinite for anchor " + a.key() +
                    "; the start point is not admissible");
      }
      first = d;
    }
    TraceStep ts{n - 1, d, std::nullopt};
    if (n > 1 && previous > 0.0) {
      ts.ratio = d / previous;
      cert.measured_ratio = std::max(cert.measured_ratio, *ts.ratio);
    }
    res.trace.steps.push_back(ts);
    current.swap(next);
    if (opts.record_iterates) res.iterates.push_back(as_function(current));
    cert.iterations = n;
    previous = d;
    if (d < opts.tol) {
      cert.converged = true;
      break;
    }
    if (n == opts.n_max) break;
  }

  // d(J T, T) is the next successive distance.
  cert.fixed_point_residual = std::numeric_limits<double>::quiet_NaN();
  if (orbit_available) {
    try {
      step(cert.iterations + 1);
      cert.fixed_point_residual = distance(next, current);
    } catch (const Error&) {
    }
  }

  res.limit = as_function(current);
  cert.aposteriori_bound = first / (1.0 - lipschitz);
  cert.final_distance = distance(start, current);
  cert.contraction_holds = cert.measured_ratio <= lipschitz + 1e-9;
  cert.aposteriori_holds = cert.final_distance <= cert.aposteriori_bound + opts.tol;
  return res;
}

FixedPointResult iterate_fixed_point(const Instance& inst, const Element& a,
                                     std::span<const Element> domain,
                                     const IterationOptions& opts) {
  return iterate_fixed_point(
      inst, a, [&inst](const Element& y) { return eval_log_f(inst, y); }, domain, opts);
}

}  // namespace superstab
