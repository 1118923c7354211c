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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "superstab/instance.hpp"

namespace superstab::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  ///< HypothesisFailed verdict, failed validation or sandwich
  kUsage = 2,        ///< bad flags or unparsable input
  kInternal = 3,     ///< stage or evaluation error
};

struct PresetParams {
  std::string preset;
  std::optional<double> c;
  std::optional<std::string> grid;
  std::optional<double> amp;
  std::optional<double> delta;
  std::uint64_t seed = 7;
  double bound = 1.0;
  int generators = 2;
  std::vector<double> bases;
  double base = 2.0;  ///< a in f(x) = a^x for the jung preset
};

/// Presets: exact-cor23, perturbed-cor23, bounded-g, free-monoid, jung.
/// Deterministic in all parameters, including the seed. Throws
/// PreconditionError for an unknown preset or malformed grid.
Instance make_preset(const PresetParams& p);

const std::vector<std::string>& preset_names();

/// "a..b" (integers, inclusive) or a comma-separated list of reals.
std::vector<double> parse_real_grid(const std::string& spec);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superstab::cli
