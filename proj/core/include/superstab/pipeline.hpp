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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superstab/fixed_point.hpp"
#include "superstab/instance.hpp"

namespace superstab {

/// The recovered limit T_a on the evaluation domain.
struct LimitFunction {
  Element anchor;
  double g_anchor = 0.0;
  LogFunction values;
  ContractionCertificate certificate;
  IterationTrace trace;
  /// sup |T_a - T_a'| where T_a' is recovered from a bumped start point.
  double uniqueness_gap = 0.0;
};

/// Both sides of the geometric orbit bound
///   |ln f(y a^n) - g(a)^n ln f(y)| <= psi~(a,y) (|g(a)|^n - 1) / (|g(a)| - 1)
/// together with the sharper orbit sum sum_i psi~(a, y a^i) |g(a)|^{n-1-i}.
struct BoundCheck {
  Element anchor;
  Element y;
  int n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double orbit_sum = 0.0;
  bool holds = false;          ///< lhs <= rhs + tol
  bool sum_consistent = false;  ///< orbit_sum <= rhs + tol
  double slack = 0.0;          ///< rhs - lhs
};

/// Throws AnchorError if |g(a)| <= 1, RangeError if a^n y overflows.
BoundCheck check_partial_bound(const Instance& inst, const Element& a, const Element& y, int n,
                               double tol = 1e-9);

/// Recovers T_a and T_b on the grid and returns sup |T_a - T_b|.
/// Throws Error if either recovery fails to converge.
double check_anchor_independence(const Instance& inst, const Element& a, const Element& b,
                                 const IterationOptions& opts = {});

/// sup over the common domain of |T_a - T_b|.
double anchor_gap(const LimitFunction& ta, const LimitFunction& tb);

/// min over anchors of (1 + psi(a, y)) / (|g(a)| - 1).
/// Throws PreconditionError on an empty list, AnchorError on |g(a)| <= 1.
double final_error_bound(const Instance& inst, std::span<const Element> anchors,
                         const Element& y);

struct ConclusionResidual {
  double residual = 0.0;           ///< max |T(xy) - g(x) T(y)|, identity pairs excluded
  double identity_residual = 0.0;  ///< same over pairs with x or y the identity
  double raw_residual = 0.0;       ///< max |ln f(xy) - g(x) ln f(y)|, same pairs
  double raw_identity_residual = 0.0;
  long evaluated_pairs = 0;
  long identity_pairs = 0;
  long skipped_pairs = 0;  ///< xy outside the domain of T
};

/// Log-domain conclusion residual of T over grid pairs whose product lies in
/// T's domain. Throws CoverageError when every pair is skipped.
ConclusionResidual check_conclusion(const Instance& inst, const LogFunction& T,
                                    bool include_identity_pairs = false);

/// Raw-f variant of the same residual, without a recovered T.
ConclusionResidual raw_conclusion(const Instance& inst, bool include_identity_pairs = false);

enum class GClassification { Bounded, UnboundedOnSample, Inconclusive };

struct ClassifyOptions {
  double growth_threshold = 1e6;
  int probe_depth = 60;
};

/// Sample-relative reading of the bounded/unbounded dichotomy. Bounded when
/// sup |g| <= 1 on the grid; UnboundedOnSample when |g| exceeds
/// growth_threshold along an anchor or generator orbit; Inconclusive
/// otherwise.
GClassification classify_g(const Instance& inst, const ClassifyOptions& opts = {});

enum class Verdict { SuperstableRecovered, BoundedG, HypothesisFailed };

struct PipelineConfig {
  double tol = 1e-10;
  int n_max = 60;
  int anchor_count = 3;
  int validation_orbit_depth = 2;
  int bound_check_depth = 20;
  double check_tol = 1e-9;         ///< orbit bound and final bound slack
  double conclusion_tol = 1e-8;    ///< residual of T accepted as zero
  bool require_hypothesis = false;  ///< ratio violations on the sample are fatal
  bool include_identity_pairs = false;
  bool check_uniqueness = true;
  ClassifyOptions classify;
};

struct PointBound {
  Element y;
  double bound = 0.0;  ///< min over used anchors
  double gap = 0.0;    ///< |ln f(y) - T(y)|
  bool holds = false;
  /// min over the orbit a^n of the primary anchor of the same quotient;
  /// tends to 0 along the orbit exactly when |g(a^n)| grows.
  double orbit_bound = 0.0;
};

struct TheoremReport {
  ValidationReport validation;
  GClassification classification = GClassification::Inconclusive;
  std::vector<Anchor> anchors;
  std::vector<LimitFunction> limits;  ///< one per anchor, primary first
  std::vector<BoundCheck> bound_checks;
  long bound_check_failures = 0;
  double anchor_agreement = 0.0;
  std::vector<PointBound> final_bounds;
  ConclusionResidual conclusion;
  Verdict verdict = Verdict::HypothesisFailed;
  std::string failed_stage;  ///< empty unless verdict is HypothesisFailed
  bool hypothesis_verified_on_sample = false;
};

/// Runs validation, classification, recovery from each anchor, the orbit
/// bound suite, anchor agreement, the pointwise final bound, and the
/// conclusion residual. Stage errors are rethrown as StageError.
TheoremReport run_superstability(const Instance& inst, const PipelineConfig& config = {});

/// Grid plus the identity, when ln f is evaluable there.
std::vector<Element> evaluation_domain(const Instance& inst);

const char* to_string(Verdict v) noexcept;
const char* to_string(GClassification c) noexcept;

}  // namespace superstab
