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

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "superstab/element.hpp"
#include "superstab/semigroup.hpp"

namespace superstab {

// ---------------------------------------------------------------------------
// Function specifications. Every f is described through ln f.
// ---------------------------------------------------------------------------

/// A multiplicative map m: S -> (0, inf). On the positive reals m(y) = y; on
/// the free monoid m(e) = prod_i bases[i]^e_i.
struct MultiplicativeMap {
  std::vector<double> bases;  ///< empty for the positive reals

  friend bool operator==(const MultiplicativeMap&, const MultiplicativeMap&) = default;
};

double eval_map(const Semigroup& s, const MultiplicativeMap& m, const Element& x);
double eval_log_map(const Semigroup& s, const MultiplicativeMap& m, const Element& x);

/// ln f(y) = c * m(y). With g = m this solves f(xy) = f(y)^{g(x)} exactly.
struct ExactExponential {
  double c = 1.0;
  MultiplicativeMap map;

  friend bool operator==(const ExactExponential&, const ExactExponential&) = default;
};

enum class PerturbationFamily {
  InversePower,  ///< ln(1 + amp * m(y)^-param), amp >= 0
  Sine,          ///< amp * sin(param * m(y))
  Constant,      ///< amp
};

/// A bounded additive term of ln f, evaluated on the base map m(y).
struct Perturbation {
  PerturbationFamily family = PerturbationFamily::InversePower;
  double amp = 0.0;
  double param = 2.0;

  friend bool operator==(const Perturbation&, const Perturbation&) = default;
};

struct PerturbedFunction {
  ExactExponential base;
  std::vector<Perturbation> terms;

  friend bool operator==(const PerturbedFunction&, const PerturbedFunction&) = default;
};

/// Raw positive values of f on a finite set of elements. `orbit_depth` is
/// the declared closure depth of the table under the anchors.
struct TableFunction {
  std::map<Element, double> entries;
  int orbit_depth = 0;

  friend bool operator==(const TableFunction&, const TableFunction&) = default;
};

using FunctionSpec = std::variant<ExactExponential, PerturbedFunction, TableFunction>;

// ---------------------------------------------------------------------------
// Exponent specifications (g).
// ---------------------------------------------------------------------------

/// g(x) = x, positive reals only.
struct IdentityExponent {
  friend bool operator==(const IdentityExponent&, const IdentityExponent&) = default;
};

/// g(e) = dot(weights, e), free monoid only.
struct LinearFormExponent {
  std::vector<double> weights;

  friend bool operator==(const LinearFormExponent&, const LinearFormExponent&) = default;
};

/// g = m for a multiplicative map m. Pairs with ExactExponential of the same
/// map to give exact solutions on the free monoid.
struct CharacterExponent {
  MultiplicativeMap map;

  friend bool operator==(const CharacterExponent&, const CharacterExponent&) = default;
};

enum class BoundedFamily {
  Sine,      ///< bound * sin(freq * magnitude(x) + phase)
  Constant,  ///< bound
};

/// A g with |g| <= bound everywhere.
struct BoundedExponent {
  BoundedFamily family = BoundedFamily::Sine;
  double bound = 1.0;
  double freq = 1.0;
  double phase = 0.0;

  friend bool operator==(const BoundedExponent&, const BoundedExponent&) = default;
};

struct TableExponent {
  std::map<Element, double> entries;

  friend bool operator==(const TableExponent&, const TableExponent&) = default;
};

using ExponentSpec = std::variant<IdentityExponent, LinearFormExponent, CharacterExponent,
                                  BoundedExponent, TableExponent>;

// ---------------------------------------------------------------------------
// Bound specifications (psi).
// ---------------------------------------------------------------------------

/// coef * magnitude(y)^power
struct PowerFactor {
  double coef = 0.0;
  double power = 0.0;

  friend bool operator==(const PowerFactor&, const PowerFactor&) = default;
};

struct ConstantBound {
  double delta = 0.0;

  friend bool operator==(const ConstantBound&, const ConstantBound&) = default;
};

/// psi(x, y) = u(x) * v(y). Monotone in the anchor sense when v.power <= 0.
struct SeparableBound {
  PowerFactor u;
  PowerFactor v;

  friend bool operator==(const SeparableBound&, const SeparableBound&) = default;
};

/// Tabulated psi with a fallback for pairs that are not listed.
struct TableBound {
  std::map<std::pair<Element, Element>, double> entries;
  double fallback = 0.0;

  friend bool operator==(const TableBound&, const TableBound&) = default;
};

using BoundSpec = std::variant<ConstantBound, SeparableBound, TableBound>;

// ---------------------------------------------------------------------------
// Instances.
// ---------------------------------------------------------------------------

/// The hypothesis bundle (S, f, g, psi) together with the sample grid.
struct Instance {
  Semigroup semigroup = Semigroup::positive_reals();
  FunctionSpec f;
  ExponentSpec g;
  BoundSpec psi;
  std::vector<Element> grid;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Structural checks: nonempty grid of members, matching arities, positive
/// table values, nonnegative psi parameters. Throws PreconditionError.
void check_instance(const Instance& inst);

/// ln f(x). Throws CoverageError outside a table, RangeError on overflow.
double eval_log_f(const Instance& inst, const Element& x);
/// g(x). Throws CoverageError outside a table.
double eval_g(const Instance& inst, const Element& x);
/// psi(x, y), or 1 + psi(x, y) when `tilde` is set.
double eval_psi(const Instance& inst, const Element& x, const Element& y, bool tilde);

struct Anchor {
  Element element;
  double g = 0.0;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// Grid elements with |g(a)| > 1, by descending |g(a)|, ties by element order.
std::vector<Anchor> anchor_candidates(const Instance& inst);

// ---------------------------------------------------------------------------
// Hypothesis validation.
// ---------------------------------------------------------------------------

enum class FailureKind {
  Ratio,         ///< 0 <= f(xy)/f(y)^g(x) - 1 <= psi(x, y) fails
  Monotonicity,  ///< psi(x, ay) <= psi(x, y) fails
};

struct ValidationFailure {
  FailureKind kind = FailureKind::Ratio;
  Element x;
  Element y;
  std::optional<Element> anchor;  ///< orbit anchor, if y is an orbit point
  int orbit_step = 0;
  double magnitude = 0.0;  ///< raw violation before tolerance
};

struct AnchorMonotonicity {
  Element anchor;
  bool holds = true;
  double worst_increase = 0.0;
};

struct ValidationReport {
  bool hypothesis_holds = true;
  /// Largest excess over the per-pair tolerance; 0 iff hypothesis_holds.
  double worst_violation = 0.0;
  bool monotonicity_holds = true;
  bool anchor_set_nonempty = false;
  long checked_pairs = 0;
  long truncated_orbits = 0;
  long failure_count = 0;
  std::vector<ValidationFailure> failures;  ///< first `max_failures` only
  std::vector<AnchorMonotonicity> per_anchor;
};

struct ValidationOptions {
  /// A pair violates only if it exceeds its bound by more than this,
  /// relative to max(1, bound), plus a rounding allowance for the logs.
  double rel_tol = 1e-9;
  std::size_t max_failures = 64;
};

/// Samples the hypotheses over grid pairs (x, y) and orbit pairs (x, a^k y)
/// for k <= orbit_depth. An empty `anchors` span means every candidate.
/// Throws CoverageError when an orbit leaves a table.
ValidationReport validate_instance(const Instance& inst, std::span<const Element> anchors,
                                   int orbit_depth, const ValidationOptions& opts = {});

}  // namespace superstab
