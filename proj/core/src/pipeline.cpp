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

#include "superstab/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "superstab/errors.hpp"

namespace superstab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double anchor_value(const Instance& inst, const Element& a) {
  double ga = eval_g(inst, a);
  if (!(std::abs(ga) > 1.0)) {
    throw AnchorError("element " + a.key() + " is not an anchor: |g(a)| <= 1");
  }
  return ga;
}

int table_depth(const Instance& inst, int requested) {
  if (const auto* t = std::get_if<TableFunction>(&inst.f)) {
    return std::min(requested, t->orbit_depth);
  }
  return requested;
}

template <class F>
auto in_stage(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(stage, e.what());
  }
}

}  // namespace

std::vector<Element> evaluation_domain(const Instance& inst) {
  std::vector<Element> dom = inst.grid;
  Element id = inst.semigroup.identity();
  try {
    eval_log_f(inst, id);
    dom.push_back(id);
  } catch (const Error&) {
    // A table without the identity; T(1) is then simply not recovered.
  }
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  return dom;
}

BoundCheck check_partial_bound(const Instance& inst, const Element& a, const Element& y, int n,
                               double tol) {
  if (n < 0) throw PreconditionError("orbit step must be nonnegative");
  const double ga = anchor_value(inst, a);
  const double G = std::abs(ga);
  const Semigroup& s = inst.semigroup;

  BoundCheck bc{a, y, n};
  std::vector<Element> pts{y};
  for (int i = 1; i <= n; ++i) pts.push_back(s.combine(a, pts.back()));

  const double lf_y = eval_log_f(inst, y);
  const double lf_end = eval_log_f(inst, pts.back());
  const double scaled = std::pow(ga, n) * lf_y;
  bc.lhs = std::abs(lf_end - scaled);
  bc.rhs = eval_psi(inst, a, y, true) * (std::pow(G, n) - 1.0) / (G - 1.0);
  for (int i = 0; i < n; ++i) {
    bc.orbit_sum += eval_psi(inst, a, pts[static_cast<std::size_t>(i)], true) *
                    std::pow(G, n - 1 - i);
  }
  // Rounding in the orbit values grows with their magnitude.
  double allowance = tol + 4.0 * (n + 1) * kEps *
                               std::max({bc.rhs, std::abs(lf_end), std::abs(scaled)});
  bc.holds = bc.lhs <= bc.rhs + allowance;
  bc.sum_consistent = bc.orbit_sum <= bc.rhs + allowance;
  bc.slack = bc.rhs - bc.lhs;
  return bc;
}

double anchor_gap(const LimitFunction& ta, const LimitFunction& tb) {
  double sup = 0.0;
  for (const auto& [y, v] : ta.values.values()) {
    if (!tb.values.contains(y)) continue;
    double d = std::abs(v - tb.values.at(y));
    sup = std::max(sup, std::isfinite(d) ? d : std::numeric_limits<double>::infinity());
  }
  return sup;
}

namespace {

LimitFunction recover(const Instance& inst, const Anchor& a, std::span<const Element> domain,
                      const IterationOptions& opts, bool uniqueness) {
  auto res = iterate_fixed_point(inst, a.element, domain, opts);
  LimitFunction lim{a.element, a.g, std::move(res.limit), res.certificate, std::move(res.trace)};
  if (uniqueness) {
    // A start point at finite distance from ln f must reach the same limit.
    const Semigroup& s = inst.semigroup;
    auto bumped = [&](const Element& y) {
      return eval_log_f(inst, y) + 0.5 * std::cos(s.magnitude(y));
    };
    auto other = iterate_fixed_point(inst, a.element, bumped, domain, opts);
    LimitFunction alt{a.element, a.g, std::move(other.limit), other.certificate, {}};
    lim.uniqueness_gap = anchor_gap(lim, alt);
  }
  return lim;
}

}  // namespace

double check_anchor_independence(const Instance& inst, const Element& a, const Element& b,
                                 const IterationOptions& opts) {
  auto dom = evaluation_domain(inst);
  LimitFunction ta = recover(inst, {a, anchor_value(inst, a)}, dom, opts, false);
  LimitFunction tb = recover(inst, {b, anchor_value(inst, b)}, dom, opts, false);
  if (!ta.certificate.converged || !tb.certificate.converged) {
    throw Error("anchor independence needs converged recoveries for " + a.key() + " and " +
                b.key());
  }
  return anchor_gap(ta, tb);
}

double final_error_bound(const Instance& inst, std::span<const Element> anchors,
                         const Element& y) {
  if (anchors.empty()) throw PreconditionError("final error bound needs at least one anchor");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : anchors) {
    double G = std::abs(anchor_value(inst, a));
    best = std::min(best, eval_psi(inst, a, y, true) / (G - 1.0));
  }
  return best;
}

ConclusionResidual check_conclusion(const Instance& inst, const LogFunction& T,
                                    bool include_identity_pairs) {
  const Semigroup& s = inst.semigroup;
  const Element id = s.identity();
  ConclusionResidual out;
  for (const auto& x : inst.grid) {
    const double gx = eval_g(inst, x);
    for (const auto& y : inst.grid) {
      Element xy;
      try {
        xy = s.combine(x, y);
      } catch (const RangeError&) {
        ++out.skipped_pairs;
        continue;
      }
      if (!T.contains(xy) || !T.contains(y)) {
        ++out.skipped_pairs;
        continue;
      }
      double r = std::abs(T.at(xy) - gx * T.at(y));
      double raw = std::abs(eval_log_f(inst, xy) - gx * eval_log_f(inst, y));
      bool identity_pair = x == id || y == id;
      if (identity_pair) {
        ++out.identity_pairs;
        out.identity_residual = std::max(out.identity_residual, r);
        out.raw_identity_residual = std::max(out.raw_identity_residual, raw);
        if (!include_identity_pairs) continue;
      }
      ++out.evaluated_pairs;
      out.residual = std::max(out.residual, r);
      out.raw_residual = std::max(out.raw_residual, raw);
    }
  }
  if (out.evaluated_pairs == 0 && out.identity_pairs == 0) {
    throw CoverageError("no grid pair has its product inside the domain of T", "");
  }
  return out;
}

ConclusionResidual raw_conclusion(const Instance& inst, bool include_identity_pairs) {
  auto dom = evaluation_domain(inst);
  auto lf = LogFunction::tabulate(dom, [&](const Element& y) { return eval_log_f(inst, y); });
  return check_conclusion(inst, lf, include_identity_pairs);
}

GClassification classify_g(const Instance& inst, const ClassifyOptions& opts) {
  auto candidates = anchor_candidates(inst);
  if (candidates.empty()) return GClassification::Bounded;

  const Semigroup& s = inst.semigroup;
  std::vector<Element> probes;
  for (const auto& c : candidates) probes.push_back(c.element);
  if (s.kind() == SemigroupKind::FreeCommutativeMonoid) {
    for (std::size_t i = 0; i < s.arity(); ++i) probes.push_back(s.generator(i));
  }
  for (const auto& p : probes) {
    for (int n = 1; n <= opts.probe_depth; ++n) {
      double gv = 0.0;
      try {
        gv = eval_g(inst, s.power(p, n));
      } catch (const Error&) {
        break;
      }
      if (std::abs(gv) > opts.growth_threshold) return GClassification::UnboundedOnSample;
    }
  }
  return GClassification::Inconclusive;
}

TheoremReport run_superstability(const Instance& inst, const PipelineConfig& cfg) {
  in_stage("instance", [&] { check_instance(inst); });
  if (!(cfg.tol > 0.0) || cfg.n_max < 1 || cfg.anchor_count < 1) {
    throw StageError("config", "tol > 0, n_max >= 1 and anchor_count >= 1 are required");
  }

  TheoremReport rep;
  auto fail = [&](std::string stage) {
    if (rep.failed_stage.empty()) rep.failed_stage = std::move(stage);
  };

  rep.validation = in_stage("validation", [&] {
    return validate_instance(inst, {}, table_depth(inst, cfg.validation_orbit_depth));
  });
  rep.hypothesis_verified_on_sample =
      rep.validation.hypothesis_holds && rep.validation.monotonicity_holds;
  if (!rep.validation.monotonicity_holds) {
    rep.verdict = Verdict::HypothesisFailed;
    rep.failed_stage = "validation: psi(x, ay) <= psi(x, y) fails";
    return rep;
  }
  if (cfg.require_hypothesis && !rep.validation.hypothesis_holds) {
    rep.verdict = Verdict::HypothesisFailed;
    rep.failed_stage = "validation: ratio hypothesis fails on the sample";
    return rep;
  }

  rep.classification = in_stage("classification", [&] { return classify_g(inst, cfg.classify); });
  if (rep.classification == GClassification::Bounded) {
    // N_g is empty: no contraction exists and nothing is divided by g(a).
    rep.conclusion =
        in_stage("conclusion", [&] { return raw_conclusion(inst, cfg.include_identity_pairs); });
    rep.verdict = Verdict::BoundedG;
    return rep;
  }

  auto candidates = anchor_candidates(inst);
  std::size_t k = std::min(candidates.size(), static_cast<std::size_t>(cfg.anchor_count));
  rep.anchors.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Element> anchor_elems;
  for (const auto& a : rep.anchors) anchor_elems.push_back(a.element);

  const auto domain = evaluation_domain(inst);
  IterationOptions iopts{cfg.tol, table_depth(inst, cfg.n_max), false};
  if (iopts.n_max < 1) throw StageError("recovery", "table orbit depth is zero");

  in_stage("recovery", [&] {
    for (const auto& a : rep.anchors) {
      rep.limits.push_back(recover(inst, a, domain, iopts, cfg.check_uniqueness));
      const auto& lim = rep.limits.back();
      if (!lim.certificate.converged) {
        fail("recovery: anchor " + a.element.key() + " did not converge");
      } else if (!lim.certificate.contraction_holds || !lim.certificate.aposteriori_holds) {
        fail("recovery: contraction certificate fails for anchor " + a.element.key());
      } else if (cfg.check_uniqueness && !(lim.uniqueness_gap <= 10.0 * cfg.tol)) {
        fail("recovery: bumped start point reaches a different limit for anchor " +
             a.element.key());
      }
    }
  });

  in_stage("orbit bounds", [&] {
    for (const auto& a : rep.anchors) {
      for (const auto& y : inst.grid) {
        for (int n = 0; n <= cfg.bound_check_depth; ++n) {
          BoundCheck bc;
          try {
            bc = check_partial_bound(inst, a.element, y, n, cfg.check_tol);
          } catch (const RangeError&) {
            break;
          }
          if (!bc.holds || !bc.sum_consistent) ++rep.bound_check_failures;
          rep.bound_checks.push_back(std::move(bc));
        }
      }
    }
    if (rep.bound_check_failures > 0) fail("orbit bounds: geometric bound violated");
  });

  for (std::size_t i = 0; i < rep.limits.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.limits.size(); ++j) {
      rep.anchor_agreement = std::max(rep.anchor_agreement, anchor_gap(rep.limits[i], rep.limits[j]));
    }
  }
  if (!(rep.anchor_agreement <= 10.0 * cfg.tol)) fail("anchor agreement: T_a differs from T_b");

  const LogFunction& T = rep.limits.front().values;
  in_stage("final bound", [&] {
    const Semigroup& s = inst.semigroup;
    const Element& primary = rep.anchors.front().element;
    for (const auto& y : inst.grid) {
      PointBound pb{y};
      pb.bound = final_error_bound(inst, anchor_elems, y);
      pb.gap = std::abs(eval_log_f(inst, y) - T.at(y));
      pb.holds = pb.gap <= pb.bound + cfg.check_tol;
      pb.orbit_bound = pb.bound;
      for (int n = 2; n <= cfg.classify.probe_depth; ++n) {
        try {
          Element q = s.power(primary, n);
          double G = std::abs(eval_g(inst, q));
          if (G > 1.0) pb.orbit_bound = std::min(pb.orbit_bound, eval_psi(inst, q, y, true) / (G - 1.0));
        } catch (const Error&) {
          break;
        }
      }
      if (!pb.holds) fail("final bound: |ln f(y) - T(y)| exceeds the anchor bound");
      rep.final_bounds.push_back(std::move(pb));
    }
  });

  rep.conclusion =
      in_stage("conclusion", [&] { return check_conclusion(inst, T, cfg.include_identity_pairs); });
  if (!(rep.conclusion.residual <= cfg.conclusion_tol)) {
    fail("conclusion: |T(xy) - g(x) T(y)| exceeds tolerance");
  }

  rep.verdict = rep.failed_stage.empty() ? Verdict::SuperstableRecovered : Verdict::HypothesisFailed;
  return rep;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::SuperstableRecovered:
      return "SuperstableRecovered";
    case Verdict::BoundedG:
      return "BoundedG";
    case Verdict::HypothesisFailed:
      return "HypothesisFailed";
  }
  return "unknown";
}

const char* to_string(GClassification c) noexcept {
  switch (c) {
    case GClassification::Bounded:
      return "Bounded";
    case GClassification::UnboundedOnSample:
      return "UnboundedOnSample";
    case GClassification::Inconclusive:
      return "Inconclusive";
  }
  return "unknown";
}

}  // namespace superstab
