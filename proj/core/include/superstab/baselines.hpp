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

#include <span>
#include <utility>
#include <vector>

#include "superstab/fixed_point.hpp"
#include "superstab/instance.hpp"
#include "superstab/pipeline.hpp"

namespace superstab {

using ElementPair = std::pair<Element, Element>;

/// Every ordered pair of grid points.
std::vector<ElementPair> grid_pairs(std::span<const Element> grid);

/// ln f tabulated on the grid and on every product of two grid points.
LogFunction tabulate_pairs(const Instance& inst, std::span<const ElementPair> pairs);

// Baker: |f(xy) - f(x) f(y)| <= eps  =>  f bounded or exponential.

enum class BakerClass { NearExponential, Bounded, Neither };

struct BakerOptions {
  double log_tol = 1e-12;  ///< NearExponential if max |ln f(xy) - ln f(x) - ln f(y)| <= log_tol
  double bound = 1e3;      ///< Bounded if max f <= bound
};

struct BakerResult {
  double residual = 0.0;      ///< max |f(xy) - f(x) f(y)|
  double log_residual = 0.0;  ///< max |ln f(xy) - ln f(x) - ln f(y)|
  double sup_f = 0.0;
  long pairs = 0;
  BakerClass classification = BakerClass::Neither;
};

/// Throws CoverageError if x, y or xy is not tabulated.
BakerResult baker_residual(const Semigroup& s, const LogFunction& log_f,
                           std::span<const ElementPair> pairs, const BakerOptions& opts = {});

// Ger: relative error of the exponential equation.

enum class GerForm {
  Multiplicative,   ///< |f(xy) / (f(x) f(y)) - 1|
  LiteralAdditive,  ///< |f(xy) / (f(x) + f(y)) - 1|
};

struct GerResult {
  double residual = 0.0;
  long pairs = 0;
  std::optional<ElementPair> worst;
};

/// Throws Error naming the pair when a denominator vanishes.
GerResult ger_residual(const Semigroup& s, const LogFunction& log_f,
                       std::span<const ElementPair> pairs, GerForm form = GerForm::Multiplicative);

// Jung: alpha(x) = sum_{n>=1} x^-(2^n - 1) and the (1 +- delta)^alpha sandwich.

struct JungAlpha {
  double value = 0.0;
  int terms = 0;
};

/// Sums until the next term drops below tol * partial sum, at most 64
/// terms. Throws PreconditionError for x <= 1 (the series diverges) or
/// tol <= 0.
JungAlpha jung_alpha(double x, double tol = 1e-17);

struct SandwichCheck {
  double x = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  double lower = 0.0;  ///< (1 - delta)^alpha
  double upper = 0.0;  ///< (1 + delta)^alpha
  double ratio = 0.0;  ///< a^x / f(x)
  bool holds = false;
};

struct JungResult {
  double log_base = 0.0;  ///< T(1) = ln a
  double base = 0.0;      ///< a
  double worst_quotient_error = 0.0;  ///< max |f(xy)/f(x)^y - 1| on grid pairs
  TheoremReport recovery;
  std::vector<SandwichCheck> checks;
};

struct JungOptions {
  double rel_tol = 1e-9;
  PipelineConfig pipeline;
};

/// Estimates a = exp(T(1)) from the recovered limit and checks
/// (1 - delta)^alpha(x) <= a^x / f(x) <= (1 + delta)^alpha(x) at every x > 1
/// of `xs`. Requires the positive reals with g = identity, delta in (0, 1),
/// and |f(xy)/f(x)^y - 1| <= delta on all grid pairs; throws
/// PreconditionError otherwise and Error if the recovery does not converge.
JungResult jung_sandwich(const Instance& inst, double delta, std::span<const double> xs,
                         const JungOptions& opts = {});

const char* to_string(BakerClass c) noexcept;
const char* to_string(GerForm f) noexcept;

}  // namespace superstab
