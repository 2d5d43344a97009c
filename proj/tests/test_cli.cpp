// Copyright 2026 The ltq-edhc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ltq/cli.hpp"
#include "ltq/construction.hpp"
#include "ltq/errors.hpp"
#include "ltq/export.hpp"
#include "mutations.hpp"

using namespace ltq;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
  args.insert(args.begin(), "ltq");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("topology edgelist and dot") {
  const auto r2 = run({"topology", "--dim", "2"});
  CHECK(r2.code == 0);
  CHECK(r2.out == "00 01\n00 10\n01 11\n10 11\n");
  const auto r4 = run({"topology", "--dim", "4", "--format", "edgelist"});
  CHECK(lines(r4.out) == 32);
  CHECK(run({"topology", "--dim", "4"}).out == r4.out);

  const auto dot = run({"topology", "--dim", "3", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph LTQ_3 {", 0) == 0);
  CHECK(dot.out.find("\"000\" -- \"001\";") != std::string::npos);
}

TEST_CASE("topology refusals") {
  const auto bad = run({"topology", "--dim", "1"});
  CHECK(bad.code == cli::kRefused);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"topology", "--dim", "4", "--format", "cycles-json"}).code == cli::kRefused);
  CHECK(run({"topology"}).code == cli::kRefused);
}

TEST_CASE("construct cycles-json") {
  const auto r = run({"construct", "--dim", "4", "--kind", "cycles"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim"] == 4);
  CHECK(j["kind"] == "cycles");
  CHECK(j["version"] == 1);
  CHECK(j["cycles"].size() == 2);
  CHECK(j["cycles"][0].size() == 16);
  CHECK(j["cycles"][1].size() == 16);
  CHECK(j["cycles"][0][0] == "0000");
}

TEST_CASE("construct paths starts at the expected labels") {
  const auto r = run({"construct", "--dim", "5", "--kind", "paths", "--format", "report-text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("first: 00010 ") != std::string::npos);
  CHECK(r.out.find("second: 00110 ") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"construct", "--dim", "5", "--kind", "paths"}).out);
  CHECK(j["cycles"][0][0] == "00010");
  CHECK(j["cycles"][1][0] == "00110");
  CHECK(j["cycles"][0][31] == "10010");
}

TEST_CASE("construct refuses dim 3") {
  const auto r = run({"construct", "--dim", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("degree 3") != std::string::npos);
  CHECK(run({"construct", "--dim", "5", "--kind", "trees"}).code == 2);
}

TEST_CASE("construct dot tags members") {
  const auto r = run({"construct", "--dim", "4", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 2 + 32);
  CHECK(r.out.find("style=dashed") != std::string::npos);
}

TEST_CASE("round trip: construct output verifies, dim 4..12") {
  for (int dim = 4; dim <= 12; ++dim) {
    for (const char* kind : {"cycles", "paths"}) {
      const auto doc = run({"construct", "--dim", std::to_string(dim), "--kind", kind});
      REQUIRE(doc.code == 0);
      const auto v = run({"verify"}, doc.out);
      CHECK_MESSAGE(v.code == 0, "dim " << dim << " " << kind << "\n" << v.out);
      CHECK(v.out.find("overall: PASS") != std::string::npos);
    }
  }
}

TEST_CASE("verify: tampered documents exit 1") {
  for (auto m : testing::all_mutations()) {
    auto doc = make_document(edh_cycles(5));
    doc.sequences[0] = testing::apply(m, 5, doc.sequences[0]);
    const auto v = run({"verify"}, render_cycles_json(doc));
    CHECK_MESSAGE(v.code == 1, testing::name(m));
    CHECK(v.out.find("FAIL ") != std::string::npos);
  }
}

TEST_CASE("verify: malformed documents exit 3") {
  const auto good = run({"construct", "--dim", "4"}).out;
  CHECK(run({"verify"}, good.substr(0, good.size() / 2)).code == 3);
  CHECK(run({"verify"}, "").code == 3);
  CHECK(run({"verify"}, "[]").code == 3);
  CHECK(run({"verify"}, R"({"dim": 4, "kind": "cycles"})").code == 3);
  CHECK(run({"verify"}, R"({"dim": 4, "kind": "cycles", "cycles": [["0000"]]})").code == 3);
  CHECK(run({"verify"}, R"({"dim": 4, "kind": "rings", "cycles": [[], []]})").code == 3);
  CHECK(run({"verify"}, R"({"dim": 4, "kind": "cycles", "cycles": [["000"], []]})").code == 3);
  CHECK(run({"verify"}, R"({"dim": 4, "kind": "cycles", "cycles": [["00x0"], []]})").code == 3);
  CHECK(run({"verify"}, R"({"version": 2, "dim": 4, "kind": "cycles", "cycles": [[], []]})").code == 3);
  CHECK(run({"verify", "--input", "/nonexistent/doc.json"}).code == 3);
}

TEST_CASE("verify: report-json") {
  const auto doc = run({"construct", "--dim", "6"}).out;
  const auto v = run({"verify", "--format", "report-json"}, doc);
  CHECK(v.code == 0);
  const auto j = nlohmann::json::parse(v.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 3);
}

TEST_CASE("oracle") {
  const auto p3 = run({"oracle", "--dim", "3", "--mode", "pair-existence"});
  CHECK(p3.code == 0);
  CHECK(p3.out.rfind("false\n", 0) == 0);
  CHECK(p3.out.find("degree 3 < 4") != std::string::npos);

  const auto p4 = run({"oracle", "--dim", "4", "--mode", "pair-existence"});
  CHECK(p4.code == 0);
  CHECK(p4.out.rfind("true\n", 0) == 0);
  CHECK(p4.out.find("witness_first: 0000 ") != std::string::npos);

  CHECK(run({"oracle", "--dim", "5", "--mode", "enumerate"}).code == 2);
  CHECK(run({"oracle", "--dim", "5", "--mode", "pair-existence"}).code == 2);

  const auto e3 = run({"oracle", "--dim", "3", "--mode", "enumerate"});
  CHECK(e3.code == 0);
  CHECK(e3.out.find("hamiltonian_cycles: 5 (exhaustive)") != std::string::npos);
  const auto e5 = run({"oracle", "--dim", "5", "--mode", "enumerate", "--limit", "2",
                       "--format", "report-json"});
  CHECK(e5.code == 0);
  CHECK(nlohmann::json::parse(e5.out)["count"] == 2);
}

TEST_CASE("simulate") {
  const auto s4 = run({"simulate", "--dim", "4", "--mode", "split"});
  CHECK(s4.code == 0);
  CHECK(s4.out.find("steps: 15\n") != std::string::npos);
  CHECK(s4.out.find("contention_events: 0\n") != std::string::npos);

  const auto s6 = run({"simulate", "--dim", "6", "--format", "report-json"});
  CHECK(s6.code == 0);
  const auto j = nlohmann::json::parse(s6.out);
  CHECK(j["contention_events"] == 0);
  CHECK(j["steps"] == 63);
  CHECK(j["per_edge_load"].size() == 128);

  const auto single = run({"simulate", "--dim", "5", "--mode", "single"});
  CHECK(single.out.find("edges_used: 32\n") != std::string::npos);

  CHECK(run({"simulate", "--dim", "3"}).code == 2);
  CHECK(run({"simulate", "--dim", "15"}).code == 2);
}

TEST_CASE("residual") {
  const auto r = run({"residual", "--dim", "6", "--budget", "100000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("unused_edges: 64\n") != std::string::npos);
  CHECK(r.out.find("residual_degree 2: 64 nodes\n") != std::string::npos);
  const auto j = nlohmann::json::parse(
      run({"residual", "--dim", "5", "--format", "report-json"}).out);
  CHECK(j["unused_edges"].size() == 16);
  CHECK(j["degree_histogram"]["1"] == 32);
  CHECK(run({"residual", "--dim", "5", "--budget", "0"}).code == 2);
}

TEST_CASE("--output writes a file, byte-identical to standard output") {
  const auto path = std::filesystem::temp_directory_path() / "ltq_cli_test_output.json";
  const auto to_file = run({"construct", "--dim", "7", "--output", path.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream f(path, std::ios::binary);
  const std::string written((std::istreambuf_iterator<char>(f)), {});
  CHECK(written == run({"construct", "--dim", "7"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("exporters are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"topology", "--dim", "6", "--format", "dot"},
           {"construct", "--dim", "8", "--format", "dot"},
           {"simulate", "--dim", "5", "--format", "report-json"},
           {"oracle", "--dim", "4", "--mode", "enumerate"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("--help exits 0") { CHECK(run({"--help"}).code == 0); }

}  // TEST_SUITE
