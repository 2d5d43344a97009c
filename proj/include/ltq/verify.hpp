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

#pragma once

// Checkers and exhaustive oracles for the constructed paths and cycles.
//
// The checkers work on raw node sequences so that malformed input (repeated
// nodes, broken steps) can be judged rather than rejected at construction.
// They never throw for well-typed input; a failure carries a detail string.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ltq/construction.hpp"
#include "ltq/topology.hpp"

namespace ltq {

struct CheckResult {
  bool ok = true;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
  static CheckResult pass(std::string detail = {}) {
    return {true, std::move(detail)};
  }
  static CheckResult fail(std::string detail) {
    return {false, std::move(detail)};
  }
};

CheckResult is_hamiltonian_path(int dim, std::span<const std::uint32_t> nodes);
CheckResult is_hamiltonian_path(int dim, const Path& p);

/// Distinct nodes, at least 3 of them, consecutive and closing steps all
/// edges. Need not visit every node.
CheckResult is_simple_cycle(int dim, std::span<const std::uint32_t> nodes);

/// Hamiltonian path plus adjacency of the last and first nodes.
CheckResult is_hamiltonian_cycle(int dim, std::span<const std::uint32_t> nodes);
CheckResult is_hamiltonian_cycle(int dim, const Cycle& c);

/// Direction-insensitive edge-set intersection test. Sequences are read as
/// paths, or as cycles when the matching flag is set. Non-edges between
/// consecutive nodes are ignored here; the Hamiltonicity checks catch them.
CheckResult are_edge_disjoint(int dim, std::span<const std::uint32_t> a,
                              bool a_closed, std::span<const std::uint32_t> b,
                              bool b_closed);
CheckResult are_edge_disjoint(const Path& a, const Path& b);
CheckResult are_edge_disjoint(const Cycle& a, const Cycle& b);

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<VerificationCheck> checks;

  bool passed() const noexcept;
  void add(std::string name, const CheckResult& r);
  std::vector<std::string> failures() const;
};

/// Hamiltonicity of both members, disjointness, and (for paths) endpoints
/// against expected_endpoints() when dim >= 4.
VerificationReport verify_pair(const PathPair& pair);
VerificationReport verify_pair(const CyclePair& pair);

/// Same checks on raw sequences, for documents that may be malformed.
VerificationReport verify_sequences(int dim, bool cycles,
                                    std::span<const std::uint32_t> first,
                                    std::span<const std::uint32_t> second);

inline constexpr int kMaxExhaustiveDim = 4;

/// Every Hamiltonian cycle of LTQ_dim, each once in canonical form, in the
/// order a depth-first search from node 0 meets them (smallest neighbor
/// first). Without a limit only dim <= 4 is accepted (RefusalError);
/// with one, the search stops after `limit` cycles.
std::vector<Cycle> enumerate_hamiltonian_cycles(
    int dim, std::optional<std::size_t> limit = std::nullopt);

struct PairExistence {
  int dim = 0;
  bool exists = false;
  /// Two edge-disjoint Hamiltonian cycles need degree >= 4 everywhere.
  bool excluded_by_degree = false;
  std::size_t cycles_enumerated = 0;
  std::size_t disjoint_pairs = 0;
  std::optional<CyclePair> witness;
};

/// Exhaustive answer for dim 3 and 4; RefusalError otherwise. For dim 4 the
/// witness is the constructed pair, which must appear among the enumerated
/// cycles.
PairExistence exists_two_edge_disjoint_hc(int dim);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

struct ThirdCycleSearch {
  std::optional<Cycle> cycle;
  std::uint64_t expansions = 0;
  bool budget_exhausted = false;
};

/// Bounded Hamiltonian cycle search restricted to `residual` edges. No
/// result is not a proof of non-existence unless budget_exhausted is false.
ThirdCycleSearch search_third_cycle(int dim, std::span<const Edge> residual,
                                    std::uint64_t budget = kDefaultSearchBudget);

struct ResidualAnalysis {
  int dim = 0;
  std::vector<Edge> unused_edges;
  std::map<int, std::size_t> degree_histogram;
  std::optional<Cycle> third_cycle;
  std::optional<ThirdCycleSearch> search;
};

/// Edges of LTQ_dim used by neither cycle. Throws PreconditionError unless
/// the pair verifies. The third-cycle search runs only when a budget is
/// given.
ResidualAnalysis residual_analysis(
    const CyclePair& pair, std::optional<std::uint64_t> search_budget = {});

}  // namespace ltq
