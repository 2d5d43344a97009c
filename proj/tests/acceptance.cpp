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

// Acceptance suite: one PASS/FAIL line per criterion, with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ltq/broadcast.hpp"
#include "ltq/cli.hpp"
#include "ltq/construction.hpp"
#include "ltq/export.hpp"
#include "ltq/topology.hpp"
#include "ltq/verify.hpp"
#include "mutations.hpp"

using namespace ltq;

namespace {

struct Criterion {
  const char* id;
  const char* title;
  double limit_ms;
  std::function<std::string()> body;  // empty string on success
};

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

std::string base_case() {
  const auto pair = base_paths_ltq4();
  const std::vector<const char*> P = {"0010", "0110", "0111", "0101", "0100", "1100",
                                      "1110", "1010", "1000", "1001", "1011", "1101",
                                      "1111", "0011", "0001", "0000"};
  const std::vector<const char*> Q = {"0110", "1110", "1111", "1001", "0101", "0011",
                                      "0010", "1010", "1011", "0111", "0001", "1101",
                                      "1100", "1000", "0000", "0100"};
  for (std::size_t i = 0; i < 16; ++i) {
    if (pair.first.at(i).to_string() != P[i]) return "P differs at " + std::to_string(i);
    if (pair.second.at(i).to_string() != Q[i]) return "Q differs at " + std::to_string(i);
  }
  if (!is_hamiltonian_path(4, pair.first)) return "P not Hamiltonian";
  if (!is_hamiltonian_path(4, pair.second)) return "Q not Hamiltonian";
  if (!are_edge_disjoint(pair.first, pair.second)) return "P, Q share an edge";
  return expect(pair.first.start().to_string() == "0010" &&
                    pair.first.end().to_string() == "0000" &&
                    pair.second.start().to_string() == "0110" &&
                    pair.second.end().to_string() == "0100",
                "endpoints differ");
}

std::string theorem() {
  for (int dim = 4; dim <= 14; ++dim) {
    const auto paths = edh_paths(dim);
    const auto e = expected_endpoints(dim);
    if (paths.first.start() != e.start_first || paths.first.end() != e.end_first ||
        paths.second.start() != e.start_second || paths.second.end() != e.end_second) {
      return "endpoints differ at dim " + std::to_string(dim);
    }
    const auto cycles = edh_cycles(dim);
    if (!is_hamiltonian_cycle(dim, cycles.first) || !is_hamiltonian_cycle(dim, cycles.second)) {
      return "not Hamiltonian at dim " + std::to_string(dim);
    }
    if (!are_edge_disjoint(cycles.first, cycles.second)) {
      return "shared edge at dim " + std::to_string(dim);
    }
  }
  return "";
}

std::string impossibility() {
  const auto r = exists_two_edge_disjoint_hc(3);
  if (!r.excluded_by_degree) return "degree argument did not exclude";
  if (r.cycles_enumerated == 0) return "no Hamiltonian cycles enumerated";
  if (r.disjoint_pairs != 0) return std::to_string(r.disjoint_pairs) + " disjoint pairs";
  return expect(!r.exists, "reported existence");
}

std::string definition() {
  for (int dim = 2; dim <= 10; ++dim) {
    const std::uint32_t n = 1U << dim;
    for (std::uint32_t v = 0; v < n; ++v) {
      const NodeLabel x(dim, v);
      auto closed = neighbors(x);
      std::sort(closed.begin(), closed.end());
      if (closed != neighbors_recursive(x)) return "neighbors differ at " + x.to_string();
    }
    const auto all = edges(dim);
    if (all.size() != static_cast<std::size_t>(dim) << (dim - 1)) {
      return "edge count at dim " + std::to_string(dim);
    }
    if (LtqGraph(dim).vertex_count() != n) return "vertex count";
    for (const auto& e : all) {
      if (!successive_bits_property(e.a(), e.b())) return "successive bits violated";
    }
  }
  return "";
}

std::string broadcast() {
  for (int dim = 4; dim <= 10; ++dim) {
    const auto r = simulate_split_broadcast(edh_cycles(dim));
    if (r.contention_events != 0) return "contention at dim " + std::to_string(dim);
    if (r.steps != (std::uint64_t{1} << dim) - 1) return "steps at dim " + std::to_string(dim);
    if (!r.complete) return "incomplete at dim " + std::to_string(dim);
  }
  return "";
}

std::string residual() {
  for (int dim = 4; dim <= 12; ++dim) {
    const auto r = residual_analysis(edh_cycles(dim));
    const std::size_t expected =
        (std::size_t(dim) << (dim - 1)) - (std::size_t{1} << (dim + 1));
    if (r.unused_edges.size() != expected) return "unused count at dim " + std::to_string(dim);
    if (r.degree_histogram.size() != 1 || r.degree_histogram.begin()->first != dim - 4) {
      return "residual degree at dim " + std::to_string(dim);
    }
  }
  return "";
}

std::string mutation_battery() {
  const auto doc = make_document(edh_cycles(6));
  for (auto m : testing::all_mutations()) {
    auto tampered = doc;
    tampered.sequences[0] = testing::apply(m, 6, tampered.sequences[0]);
    std::istringstream in(render_cycles_json(tampered));
    std::ostringstream out, err;
    const int code = cli::run({"ltq", "verify"}, in, out, err);
    if (code != cli::kVerificationFailed) {
      return testing::name(m) + " gave exit " + std::to_string(code);
    }
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "base-case fidelity", 1.0, base_case},
      {"AC2", "theorem reproduction, dim 4..14", 5000.0, theorem},
      {"AC3", "no two edge-disjoint Hamiltonian cycles in LTQ_3", 1000.0, impossibility},
      {"AC4", "definition fidelity, dim 2..10", 10000.0, definition},
      {"AC5", "split broadcast without contention, dim 4..10", 30000.0, broadcast},
      {"AC6", "residual arithmetic, dim 4..12", 10000.0, residual},
      {"AC7", "mutation battery rejected with exit 1", 1000.0, mutation_battery},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (problem.empty() && ms > c.limit_ms) {
      problem = "took " + std::to_string(ms) + " ms, limit " + std::to_string(c.limit_ms) + " ms";
    }
    const bool ok = problem.empty();
    if (!ok) ++failed;
    std::printf("[%s] %s %s (%.3f ms, limit %.0f ms)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title, ms, c.limit_ms, ok ? "" : ": ", problem.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
