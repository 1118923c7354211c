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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "superstab/element.hpp"
#include "superstab/instance.hpp"

namespace superstab {

/// A finite real-valued function on elements: a candidate for ln f or an
/// iterate of the contraction.
class LogFunction {
 public:
  LogFunction() = default;
  explicit LogFunction(std::map<Element, double> values) : values_(std::move(values)) {}

  /// Tabulates `source` on `domain`.
  static LogFunction tabulate(std::span<const Element> domain,
                              const std::function<double(const Element&)>& source);

  /// Throws CoverageError if x is not tabulated.
  double at(const Element& x) const;
  bool contains(const Element& x) const { return values_.contains(x); }
  void set(const Element& x, double v) { values_[x] = v; }

  std::vector<Element> domain() const;
  std::size_t size() const noexcept { return values_.size(); }
  const std::map<Element, double>& values() const noexcept { return values_; }

  friend bool operator==(const LogFunction&, const LogFunction&) = default;

 private:
  std::map<Element, double> values_;
};

/// J_a h: y -> h(ay) / g(a) on `domain`.
/// Throws AnchorError if |g(a)| <= 1 and CoverageError if h lacks some ay.
LogFunction apply_contraction(const Instance& inst, const Element& a, const LogFunction& h,
                              std::span<const Element> domain);

/// sup over the domain of h1 of |h1(y) - h2(y)| / (1 + psi(a, y)).
/// Returns +inf when the supremum overflows. Throws CoverageError if h2 is
/// missing a point of h1's domain.
double generalized_distance(const LogFunction& h1, const LogFunction& h2, const Instance& inst,
                            const Element& a);

struct TraceStep {
  int n = 0;
  double distance = 0.0;        ///< d(J^{n+1} h0, J^n h0)
  std::optional<double> ratio;  ///< distance / previous distance, if defined
};

struct IterationTrace {
  std::vector<TraceStep> steps;
};

struct ContractionCertificate {
  double lipschitz_bound = 0.0;     ///< L = 1 / |g(a)|
  double measured_ratio = 0.0;      ///< max recorded d_n / d_{n-1}
  double aposteriori_bound = 0.0;   ///< d(J h0, h0) / (1 - L)
  double final_distance = 0.0;      ///< d(h0, T)
  double fixed_point_residual = 0.0;  ///< d(J T, T)
  int iterations = 0;
  bool converged = false;
  bool contraction_holds = false;   ///< measured_ratio <= L + 1e-9
  bool aposteriori_holds = false;   ///< final_distance <= aposteriori_bound + tol
};

struct IterationOptions {
  double tol = 1e-10;
  int n_max = 60;
  /// Keep every iterate J^n h0 (n = 0..iterations) in the result.
  bool record_iterates = false;
};

struct FixedPointResult {
  LogFunction limit;
  IterationTrace trace;
  ContractionCertificate certificate;
  std::vector<LogFunction> iterates;  ///< only with record_iterates
};

using LogSource = std::function<double(const Element&)>;

/// Iterates h <- J_a h from h0 until successive iterates are closer than
/// `tol` in the generalized metric, or `n_max` steps have run. The start
/// point is read along the orbits a^n y of every domain point, so h0 must be
/// evaluable there; the n-th iterate on y is h0(a^n y) divided n times by
/// g(a), which is J_a applied n times.
///
/// Throws AnchorError if |g(a)| <= 1, PreconditionError for tol <= 0 or
/// n_max < 1, and Error if d(J h0, h0) is infinite. Non-convergence is
/// reported through certificate.converged, not thrown.
FixedPointResult iterate_fixed_point(const Instance& inst, const Element& a, const LogSource& h0,
                                     std::span<const Element> domain,
                                     const IterationOptions& opts = {});

/// Same, with h0 = ln f.
FixedPointResult iterate_fixed_point(const Instance& inst, const Element& a,
                                     std::span<const Element> domain,
                                     const IterationOptions& opts = {});

}  // namespace superstab
