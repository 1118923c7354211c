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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "superstab/json_io.hpp"

namespace fs = std::filesystem;
using namespace superstab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "superstab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("superstab_cli_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string read(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_CASE("generate is deterministic in the seed") {
  auto a = call({"generate", "perturbed-cor23", "--amp", "0.1", "--delta", "0.2", "--seed", "7"});
  auto b = call({"generate", "perturbed-cor23", "--amp", "0.1", "--delta", "0.2", "--seed", "7"});
  auto c = call({"generate", "perturbed-cor23", "--amp", "0.1", "--delta", "0.2", "--seed", "8"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  Instance inst = parse_instance(a.out);
  CHECK(dump(to_json(inst)) == a.out);
}

TEST_CASE("generate exact preset") {
  auto r = call({"generate", "exact-cor23", "--c", "1.0", "--grid", "1..8"});
  REQUIRE(r.code == 0);
  Instance inst = parse_instance(r.out);
  CHECK(inst.grid.size() == 8);
  CHECK(std::holds_alternative<ExactExponential>(inst.f));
  CHECK(std::get<ConstantBound>(inst.psi).delta == 0.0);
  CHECK(call({"generate", "nonsense"}).code == cli::kUsage);

  TempDir dir;
  std::string path = dir.file("exact.json");
  REQUIRE(call({"generate", "exact-cor23", "--c", "1.0", "--grid", "1..8", "--out", path}).code == 0);
  CHECK(read(path) == r.out);
}

TEST_CASE("every preset analyzes with the documented exit status") {
  TempDir dir;
  for (const auto& preset : cli::preset_names()) {
    CAPTURE(preset);
    std::string path = dir.file(preset + ".json");
    REQUIRE(call({"generate", preset, "--out", path}).code == 0);
    auto r = call({"analyze", "--instance", path});
    CHECK(r.code == cli::kOk);
    json j = json::parse(r.out);
    if (preset == "bounded-g") {
      CHECK(j["verdict"] == "BoundedG");
    } else {
      CHECK(j["verdict"] == "SuperstableRecovered");
    }
  }
}

TEST_CASE("analyze formats") {
  TempDir dir;
  std::string path = dir.file("inst.json");
  REQUIRE(call({"generate", "perturbed-cor23", "--out", path}).code == 0);
  auto s = call({"analyze", "--instance", path, "--format", "summary"});
  CHECK(s.code == 0);
  CHECK(s.out.find("SuperstableRecovered") != std::string::npos);
  auto c = call({"analyze", "--instance", path, "--format", "csv"});
  CHECK(c.out.rfind("y,ln_f,T,bound,gap,holds\n", 0) == 0);
  CHECK(call({"analyze", "--instance", path, "--format", "xml"}).code == cli::kUsage);
  auto strict = call({"analyze", "--instance", path, "--require-hypothesis"});
  CHECK(strict.code == cli::kCheckFailed);
}

TEST_CASE("a psi growing along orbits exits 1 and names the triple") {
  TempDir dir;
  std::string path = dir.file("grow.json");
  write(path, R"({
    "semigroup": {"kind": "positive_reals", "generators": []},
    "f": {"kind": "exact_exponential", "c": 1},
    "g": {"kind": "identity"},
    "psi": {"kind": "separable", "u": {"coef": 1, "power": 0}, "v": {"coef": 1, "power": 1}},
    "grid": [{"real": 1}, {"real": 2}, {"real": 3}]
  })");
  auto r = call({"analyze", "--instance", path});
  CHECK(r.code == cli::kCheckFailed);
  CHECK(r.err.find("HypothesisFailed") != std::string::npos);
  CHECK(r.err.find("x=") != std::string::npos);
  CHECK(r.err.find(" y=") != std::string::npos);
  CHECK(r.err.find(" a=") != std::string::npos);
  CHECK(call({"validate", "--instance", path}).code == cli::kCheckFailed);
}

TEST_CASE("input errors are usage errors") {
  TempDir dir;
  std::string path = dir.file("bad.json");
  write(path, R"({"semigroup": {"kind": "positive_reals"}, "f": {"kind": "exact_exponential"}})");
  auto r = call({"analyze", "--instance", path});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("$.f.c") != std::string::npos);
  CHECK(call({"analyze", "--instance", dir.file("missing.json")}).code == cli::kUsage);
  CHECK(call({}).code == cli::kUsage);
}

TEST_CASE("alpha subcommand") {
  auto r = call({"alpha", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.632843018043786") != std::string::npos);
  auto j = call({"alpha", "3", "--json"});
  CHECK(json::parse(j.out)["terms"].get<int>() > 0);
  auto bad = call({"alpha", "1"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("x > 1") != std::string::npos);
}

TEST_CASE("baseline subcommands") {
  TempDir dir;
  std::string path = dir.file("exact.json");
  REQUIRE(call({"generate", "exact-cor23", "--out", path}).code == 0);
  auto b = call({"baker", "--instance", path});
  CHECK(b.code == 0);
  CHECK(json::parse(b.out).contains("classification"));
  auto g = call({"ger", "--instance", path, "--form", "literal"});
  CHECK(g.code == 0);
  CHECK(json::parse(g.out)["form"] == "literal_additive");

  std::string jpath = dir.file("jung.json");
  REQUIRE(call({"generate", "jung", "--out", jpath}).code == 0);
  auto jr = call({"jung", "--instance", jpath, "--format", "csv"});
  CHECK(jr.code == 0);
  CHECK(jr.out.rfind("x,alpha,lower,ratio,upper,holds\n", 0) == 0);
  CHECK(call({"jung", "--instance", path}).code == cli::kUsage);
}

TEST_CASE("grid specs") {
  CHECK(cli::parse_real_grid("1..4") == std::vector<double>{1, 2, 3, 4});
  CHECK(cli::parse_real_grid("0.5,2,3.25") == std::vector<double>{0.5, 2, 3.25});
  CHECK_THROWS(cli::parse_real_grid("4..1"));
  CHECK_THROWS(cli::parse_real_grid("a,b"));
}
