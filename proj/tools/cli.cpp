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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "superstab/baselines.hpp"
#include "superstab/errors.hpp"
#include "superstab/json_io.hpp"
#include "superstab/pipeline.hpp"

namespace superstab::cli {

namespace {

struct Common {
  std::string instance_path;
  std::string out_path;
  std::string format = "json";
};

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open instance file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write output file " + out_path);
  f << text;
  if (!f.flush()) throw Error("failed writing output file " + out_path);
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string row(const std::string& stage, const std::string& value, const std::string& status) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-28s %-34s %s\n", stage.c_str(), value.c_str(), status.c_str());
  return buf;
}

std::string summary(const TheoremReport& r) {
  std::string s = row("stage", "value", "status");
  const auto& v = r.validation;
  s += row("validation: ratio", "worst excess " + fmt("%.3e", v.worst_violation),
           v.hypothesis_holds ? "holds on sample" : "violated on sample");
  s += row("validation: monotonicity", std::to_string(v.per_anchor.size()) + " anchors",
           v.monotonicity_holds ? "holds" : "FAILS");
  s += row("classification", to_string(r.classification), "");
  for (const auto& l : r.limits) {
    const auto& c = l.certificate;
    s += row("recovery a=" + l.anchor.key(),
             std::to_string(c.iterations) + " iters, ratio " + fmt("%.3e", c.measured_ratio),
             c.converged ? "converged" : "NOT CONVERGED");
  }
  if (!r.limits.empty()) {
    s += row("orbit bounds", std::to_string(r.bound_checks.size()) + " checks",
             r.bound_check_failures == 0 ? "hold" : std::to_string(r.bound_check_failures) + " FAIL");
    s += row("anchor agreement", fmt("%.3e", r.anchor_agreement), "");
    long bad = 0;
    for (const auto& p : r.final_bounds) bad += p.holds ? 0 : 1;
    s += row("final bound", std::to_string(r.final_bounds.size()) + " points",
             bad == 0 ? "holds" : std::to_string(bad) + " FAIL");
    s += row("conclusion residual of T", fmt("%.3e", r.conclusion.residual), "");
  }
  s += row("conclusion residual of ln f", fmt("%.3e", r.conclusion.raw_residual), "");
  s += row("verdict", to_string(r.verdict), r.failed_stage);
  return s;
}

std::string analyze_csv(const Instance& inst, const TheoremReport& r) {
  std::string s = "y,ln_f,T,bound,gap,holds\n";
  if (r.limits.empty()) return s;
  const auto& T = r.limits.front().values;
  for (const auto& p : r.final_bounds) {
    s += "\"" + p.y.key() + "\"," + fmt("%.17g", eval_log_f(inst, p.y)) + "," + fmt("%.17g", T.at(p.y)) + "," +
         fmt("%.17g", p.bound) + "," + fmt("%.17g", p.gap) + "," + (p.holds ? "true" : "false") + "\n";
  }
  return s;
}

void report_failures(const ValidationReport& v, std::ostream& err) {
  for (const auto& f : v.failures) {
    if (f.kind != FailureKind::Monotonicity) continue;
    err << "psi monotonicity violated at x=" << f.x.key() << " y=" << f.y.key()
        << " a=" << (f.anchor ? f.anchor->key() : "-") << " (increase " << f.magnitude << ")\n";
    return;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"superstab: superstability recovery and certificates for f(xy) = f(y)^g(x)"};
  app.require_subcommand(1);

  // generate
  PresetParams pp;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a preset instance as JSON");
  gen->add_option("preset", pp.preset, "exact-cor23 | perturbed-cor23 | bounded-g | free-monoid | jung")
      ->required()
      ->check(CLI::IsMember(preset_names()));
  gen->add_option("--c", pp.c, "coefficient c in ln f = c m(y)");
  gen->add_option("--grid", pp.grid, "grid: a..b or comma list (exponent range for free-monoid)");
  gen->add_option("--amp", pp.amp, "perturbation amplitude");
  gen->add_option("--delta", pp.delta, "constant psi");
  gen->add_option("--seed", pp.seed, "seed for randomized parameters")->capture_default_str();
  gen->add_option("--bound", pp.bound, "bound of g for bounded-g")->capture_default_str();
  gen->add_option("--k", pp.generators, "generators for free-monoid")->capture_default_str();
  gen->add_option("--bases", pp.bases, "character bases for free-monoid");
  gen->add_option("--base", pp.base, "a in f(x) = a^x for jung")->capture_default_str();
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // validate
  Common val;
  int orbit_depth = 2;
  auto* validate = app.add_subcommand("validate", "Check the hypotheses on the sample grid");
  validate->add_option("--instance", val.instance_path)->required();
  validate->add_option("--orbit-depth", orbit_depth)->capture_default_str()->check(CLI::NonNegativeNumber);
  validate->add_option("--out", val.out_path);

  // analyze
  Common ana;
  PipelineConfig cfg;
  auto* analyze = app.add_subcommand("analyze", "Run the full superstability pipeline");
  analyze->add_option("--instance", ana.instance_path)->required();
  analyze->add_option("--tol", cfg.tol, "iteration tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  analyze->add_option("--nmax", cfg.n_max, "maximum iterations")->capture_default_str()->check(CLI::PositiveNumber);
  analyze->add_option("--anchors", cfg.anchor_count, "anchors with largest |g|")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  analyze->add_option("--format", ana.format)->capture_default_str()->check(CLI::IsMember({"json", "csv", "summary"}));
  analyze->add_option("--out", ana.out_path);
  analyze->add_flag("--require-hypothesis", cfg.require_hypothesis, "ratio violations on the sample are fatal");

  // baker / ger
  Common bak;
  auto* baker = app.add_subcommand("baker", "Baker residual over grid pairs");
  baker->add_option("--instance", bak.instance_path)->required();
  baker->add_option("--out", bak.out_path);

  Common gr;
  std::string form = "multiplicative";
  auto* ger = app.add_subcommand("ger", "Ger relative residual over grid pairs");
  ger->add_option("--instance", gr.instance_path)->required();
  ger->add_option("--form", form)->capture_default_str()->check(CLI::IsMember({"multiplicative", "literal"}));
  ger->add_option("--out", gr.out_path);

  // alpha
  double alpha_x = 0.0;
  double alpha_tol = 1e-17;
  bool alpha_json = false;
  auto* alpha = app.add_subcommand("alpha", "Evaluate alpha(x) = sum_n x^-(2^n - 1) for x > 1");
  alpha->add_option("x", alpha_x)->required();
  alpha->add_option("--tol", alpha_tol, "relative truncation tolerance")->capture_default_str();
  alpha->add_flag("--json", alpha_json);

  // jung
  Common jg;
  std::optional<double> jung_delta;
  auto* jung = app.add_subcommand("jung", "Check the (1 +- delta)^alpha sandwich with a = exp(T(1))");
  jung->add_option("--instance", jg.instance_path)->required();
  jung->add_option("--delta", jung_delta, "default: the instance's constant psi");
  jung->add_option("--tol", cfg.tol)->capture_default_str()->check(CLI::PositiveNumber);
  jung->add_option("--nmax", cfg.n_max)->capture_default_str()->check(CLI::PositiveNumber);
  jung->add_option("--format", jg.format)->capture_default_str()->check(CLI::IsMember({"json", "csv", "summary"}));
  jung->add_option("--out", jg.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      emit(dump(to_json(make_preset(pp))), gen_out, out);
      return kOk;
    }
    if (*validate) {
      Instance inst = load_instance(val.instance_path);
      auto rep = validate_instance(inst, {}, orbit_depth);
      emit(dump(to_json(rep)), val.out_path, out);
      report_failures(rep, err);
      return rep.hypothesis_holds && rep.monotonicity_holds ? kOk : kCheckFailed;
    }
    if (*analyze) {
      Instance inst = load_instance(ana.instance_path);
      TheoremReport rep = run_superstability(inst, cfg);
      if (ana.format == "summary") {
        emit(summary(rep), ana.out_path, out);
      } else if (ana.format == "csv") {
        emit(analyze_csv(inst, rep), ana.out_path, out);
      } else {
        emit(dump(to_json(rep)), ana.out_path, out);
      }
      if (rep.verdict == Verdict::HypothesisFailed) {
        err << "verdict HypothesisFailed: " << rep.failed_stage << "\n";
        report_failures(rep.validation, err);
        return kCheckFailed;
      }
      return kOk;
    }
    if (*baker) {
      Instance inst = load_instance(bak.instance_path);
      auto pairs = grid_pairs(inst.grid);
      auto lf = tabulate_pairs(inst, pairs);
      emit(dump(to_json(baker_residual(inst.semigroup, lf, pairs))), bak.out_path, out);
      return kOk;
    }
    if (*ger) {
      Instance inst = load_instance(gr.instance_path);
      auto pairs = grid_pairs(inst.grid);
      auto lf = tabulate_pairs(inst, pairs);
      GerForm gf = form == "literal" ? GerForm::LiteralAdditive : GerForm::Multiplicative;
      json j = to_json(ger_residual(inst.semigroup, lf, pairs, gf));
      j["form"] = to_string(gf);
      emit(dump(j), gr.out_path, out);
      return kOk;
    }
    if (*alpha) {
      if (!(alpha_x > 1.0)) {
        err << "usage error: alpha(x) requires x > 1 (the series diverges for x <= 1)\n";
        return kUsage;
      }
      JungAlpha a = jung_alpha(alpha_x, alpha_tol);
      if (alpha_json) {
        json j = to_json(a);
        j["x"] = alpha_x;
        out << dump(j);
      } else {
        out << "alpha(" << fmt("%.17g", alpha_x) << ") = " << fmt("%.17g", a.value) << " (" << a.terms
            << " terms)\n";
      }
      return kOk;
    }
    if (*jung) {
      Instance inst = load_instance(jg.instance_path);
      double delta = 0.0;
      if (jung_delta) {
        delta = *jung_delta;
      } else if (const auto* c = std::get_if<ConstantBound>(&inst.psi)) {
        delta = c->delta;
      } else {
        err << "usage error: --delta is required when psi is not constant\n";
        return kUsage;
      }
      std::vector<double> xs;
      for (const auto& x : inst.grid) {
        if (x.is_real()) xs.push_back(x.value());
      }
      JungOptions jo;
      jo.pipeline = cfg;
      JungResult res = jung_sandwich(inst, delta, xs, jo);
      if (jg.format == "csv") {
        emit(sandwich_csv(res), jg.out_path, out);
      } else if (jg.format == "summary") {
        std::string s = "a = exp(T(1)) = " + fmt("%.17g", res.base) + "\n" + sandwich_csv(res);
        emit(s, jg.out_path, out);
      } else {
        emit(dump(to_json(res)), jg.out_path, out);
      }
      bool all = std::all_of(res.checks.begin(), res.checks.end(), [](const SandwichCheck& c) { return c.holds; });
      return all ? kOk : kCheckFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return kUsage;
  } catch (const StageError& e) {
    err << "stage '" << e.stage() << "' failed: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace superstab::cli
