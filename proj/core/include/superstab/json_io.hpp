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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "superstab/baselines.hpp"
#include "superstab/fixed_point.hpp"
#include "superstab/instance.hpp"
#include "superstab/pipeline.hpp"

namespace superstab {

using json = nlohmann::json;

// Elements: {"real": 2} or {"exp": [1, 0, 2]}.
json to_json(const Element& e);
Element element_from_json(const json& j, const std::string& path = "$");

json to_json(const Semigroup& s);
json to_json(const Instance& inst);
json to_json(const ValidationReport& r);
json to_json(const IterationTrace& t);
json to_json(const ContractionCertificate& c);
json to_json(const BoundCheck& b);
json to_json(const TheoremReport& r);
json to_json(const BakerResult& r);
json to_json(const GerResult& r);
json to_json(const JungAlpha& a);
json to_json(const SandwichCheck& c);
json to_json(const JungResult& r);

/// Throws ParseError naming the field path ("$.f.base.c") or the line and
/// column of a syntax error.
Instance parse_instance(std::string_view text);
Instance instance_from_json(const json& j);

/// Deterministic text form: two-space indent, sorted keys, shortest
/// round-trip doubles, trailing newline.
std::string dump(const json& j);

/// Columns x, alpha, lower, ratio, upper, holds.
std::string sandwich_csv(const JungResult& r);

}  // namespace superstab
