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

#include "ltq/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <utility>

#include "ltq/errors.hpp"

namespace ltq {

namespace {

std::string label(int dim, std::uint32_t v) {
  return NodeLabel(dim, v).to_string();
}

bool in_range(int dim, std::uint32_t v) {
  return (static_cast<std::uint64_t>(v) >> dim) == 0;
}

// Used-edge bitmap indexed by edge_index(). Non-edges are skipped.
void mark_edges(int dim, std::span<const std::uint32_t> v, bool closed,
                std::vector<bool>& used) {
  const auto mark = [&](std::uint32_t x, std::uint32_t y) {
    if (in_range(dim, x) && in_range(dim, y) && values_adjacent(dim, x, y)) {
      used[edge_index(dim, x, y)] = true;
    }
  };
  for (std::size_t i = 1; i < v.size(); ++i) mark(v[i - 1], v[i]);
  if (closed && v.size() >= 3) mark(v.back(), v.front());
}

std::size_t edge_count(int dim) { return static_cast<std::size_t>(dim) << (dim - 1); }

using Adjacency = std::vector<std::vector<std::uint32_t>>;

Adjacency ltq_adjacency(int dim) {
  const std::uint32_t n = std::uint32_t{1} << dim;
  Adjacency adj(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (int k = 0; k < dim; ++k) adj[v].push_back(neighbor_value(v, k));
    std::sort(adj[v].begin(), adj[v].end());
  }
  return adj;
}

// Depth-first Hamiltonian cycle search anchored at node 0. Neighbors are
// tried in ascending order, so cycles are met in lexicographic order. A
// branch is cut when an unvisited node is left with fewer than two
// neighbors that are not interior to the current path.
class CycleSearch {
 public:
  using Visitor = std::function<bool(std::span<const std::uint32_t>)>;

  CycleSearch(const Adjacency& adj, std::uint64_t budget)
      : adj_(adj), budget_(budget), visited_(adj.size(), false),
        available_(adj.size(), 0) {
    for (std::size_t v = 0; v < adj.size(); ++v) {
      available_[v] = static_cast<int>(adj[v].size());
    }
  }

  /// Runs until the visitor returns false, the space is exhausted, or the
  /// budget runs out.
  void run(const Visitor& visit) {
    if (adj_.empty()) return;
    visit_ = &visit;
    path_.clear();
    path_.push_back(0);
    visited_[0] = true;
    dfs(0);
    visited_[0] = false;
  }

  std::uint64_t expansions() const noexcept { return expansions_; }
  bool budget_exhausted() const noexcept { return out_of_budget_; }

 private:
  void dfs(std::uint32_t head) {
    if (stopped_) return;
    if (expansions_ >= budget_) {
      out_of_budget_ = true;
      stopped_ = true;
      return;
    }
    ++expansions_;

    if (path_.size() == adj_.size()) {
      const auto& nb = adj_[head];
      const bool closes = std::binary_search(nb.begin(), nb.end(), 0U);
      // Each cycle is seen in both directions; keep the canonical one.
      if (closes && path_.size() >= 3 && path_[1] < path_.back()) {
        if (!(*visit_)(path_)) stopped_ = true;
      }
      return;
    }

    const bool head_becomes_interior = head != 0;
    for (std::uint32_t next : adj_[head]) {
      if (visited_[next]) continue;
      if (head_becomes_interior) {
        for (std::uint32_t u : adj_[head]) --available_[u];
      }
      visited_[next] = true;
      path_.push_back(next);

      bool feasible = true;
      if (head_becomes_interior) {
        for (std::uint32_t u : adj_[head]) {
          if (!visited_[u] && available_[u] < 2) {
            feasible = false;
            break;
          }
        }
      }
      if (feasible) dfs(next);

      path_.pop_back();
      visited_[next] = false;
      if (head_becomes_interior) {
        for (std::uint32_t u : adj_[head]) ++available_[u];
      }
      if (stopped_) return;
    }
  }

  const Adjacency& adj_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool out_of_budget_ = false;
  bool stopped_ = false;
  const Visitor* visit_ = nullptr;
  std::vector<bool> visited_;
  std::vector<int> available_;
  std::vector<std::uint32_t> path_;
};

}  // namespace

CheckResult is_hamiltonian_path(int dim, std::span<const std::uint32_t> nodes) {
  if (dim < kMinDim || dim > kMaxDim) {
    return CheckResult::fail("unsupported dimension " + std::to_string(dim));
  }
  const std::size_t n = std::size_t{1} << dim;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto v = nodes[i];
    if (!in_range(dim, v)) {
      return CheckResult::fail("position " + std::to_string(i) + ": value " +
                               std::to_string(v) + " is not a node of LTQ_" +
                               std::to_string(dim));
    }
    if (seen[v]) {
      return CheckResult::fail("node " + label(dim, v) + " repeats at position " +
                               std::to_string(i));
    }
    seen[v] = true;
    if (i > 0 && !values_adjacent(dim, nodes[i - 1], v)) {
      return CheckResult::fail("step " + label(dim, nodes[i - 1]) + " -> " +
                               label(dim, v) + " at position " +
                               std::to_string(i) + " is not an edge");
    }
  }
  if (nodes.size() != n) {
    return CheckResult::fail("visits " + std::to_string(nodes.size()) + " of " +
                             std::to_string(n) + " nodes");
  }
  return CheckResult::pass("visits all " + std::to_string(n) + " nodes");
}

CheckResult is_hamiltonian_path(int dim, const Path& p) {
  if (p.dim() != dim) return CheckResult::fail("path has dimension " + std::to_string(p.dim()));
  return is_hamiltonian_path(dim, p.values());
}

CheckResult is_simple_cycle(int dim, std::span<const std::uint32_t> nodes) {
  if (dim < kMinDim || dim > kMaxDim) {
    return CheckResult::fail("unsupported dimension " + std::to_string(dim));
  }
  if (nodes.size() < 3) return CheckResult::fail("a cycle needs at least 3 nodes");
  std::vector<std::uint32_t> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return CheckResult::fail("a node repeats");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto x = nodes[i];
    const auto y = nodes[(i + 1) % nodes.size()];
    if (!in_range(dim, x)) {
      return CheckResult::fail("value " + std::to_string(x) + " is not a node");
    }
    if (!in_range(dim, y) || !values_adjacent(dim, x, y)) {
      return CheckResult::fail("step at position " + std::to_string(i) +
                               " is not an edge");
    }
  }
  return CheckResult::pass();
}

CheckResult is_hamiltonian_cycle(int dim, std::span<const std::uint32_t> nodes) {
  auto r = is_hamiltonian_path(dim, nodes);
  if (!r) return r;
  if (nodes.size() < 3) return CheckResult::fail("a cycle needs at least 3 nodes");
  if (!values_adjacent(dim, nodes.back(), nodes.front())) {
    return CheckResult::fail("closing step " + label(dim, nodes.back()) + " -> " +
                             label(dim, nodes.front()) + " is not an edge");
  }
  return CheckResult::pass("closed tour through all " +
                           std::to_string(nodes.size()) + " nodes");
}

CheckResult is_hamiltonian_cycle(int dim, const Cycle& c) {
  if (c.dim() != dim) return CheckResult::fail("cycle has dimension " + std::to_string(c.dim()));
  return is_hamiltonian_cycle(dim, c.values());
}

CheckResult are_edge_disjoint(int dim, std::span<const std::uint32_t> a,
                              bool a_closed, std::span<const std::uint32_t> b,
                              bool b_closed) {
  if (dim < kMinDim || dim > kMaxDim) {
    return CheckResult::fail("unsupported dimension " + std::to_string(dim));
  }
  std::vector<bool> used(edge_count(dim), false);
  mark_edges(dim, a, a_closed, used);

  std::size_t shared = 0;
  std::string first;
  const auto probe = [&](std::uint32_t x, std::uint32_t y) {
    if (!in_range(dim, x) || !in_range(dim, y) || !values_adjacent(dim, x, y)) {
      return;
    }
    if (used[edge_index(dim, x, y)]) {
      if (shared++ == 0) first = label(dim, std::min(x, y)) + "-" + label(dim, std::max(x, y));
    }
  };
  for (std::size_t i = 1; i < b.size(); ++i) probe(b[i - 1], b[i]);
  if (b_closed && b.size() >= 3) probe(b.back(), b.front());

  if (shared > 0) {
    return CheckResult::fail(std::to_string(shared) +
                             " shared edge(s), first " + first);
  }
  return CheckResult::pass("no shared edges");
}

CheckResult are_edge_disjoint(const Path& a, const Path& b) {
  if (a.dim() != b.dim()) return CheckResult::fail("dimension mismatch");
  return are_edge_disjoint(a.dim(), a.values(), false, b.values(), false);
}

CheckResult are_edge_disjoint(const Cycle& a, const Cycle& b) {
  if (a.dim() != b.dim()) return CheckResult::fail("dimension mismatch");
  return are_edge_disjoint(a.dim(), a.values(), true, b.values(), true);
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& c) { return c.passed; });
}

void VerificationReport::add(std::string name, const CheckResult& r) {
  checks.push_back({std::move(name), r.ok, r.detail});
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

VerificationReport verify_sequences(int dim, bool cycles,
                                    std::span<const std::uint32_t> first,
                                    std::span<const std::uint32_t> second) {
  VerificationReport report;
  report.subject = std::string(cycles ? "cycles" : "paths") + " of LTQ_" +
                   std::to_string(dim);
  const auto ham = [&](std::span<const std::uint32_t> s) {
    return cycles ? is_hamiltonian_cycle(dim, s) : is_hamiltonian_path(dim, s);
  };
  report.add(cycles ? "first.hamiltonian_cycle" : "first.hamiltonian_path",
             ham(first));
  report.add(cycles ? "second.hamiltonian_cycle" : "second.hamiltonian_path",
             ham(second));
  report.add("edge_disjoint",
             are_edge_disjoint(dim, first, cycles, second, cycles));

  if (!cycles && dim >= 4 && dim <= kMaxDim) {
    const Endpoints e = expected_endpoints(dim);
    const auto ends = [&](std::span<const std::uint32_t> s, const NodeLabel& a,
                          const NodeLabel& b) {
      if (s.empty()) return CheckResult::fail("empty path");
      if (s.front() != a.value() || s.back() != b.value()) {
        const auto show = [&](std::uint32_t v) {
          return in_range(dim, v) ? label(dim, v) : std::to_string(v);
        };
        return CheckResult::fail("runs " + show(s.front()) + " -> " +
                                 show(s.back()) + ", expected " +
                                 a.to_string() + " -> " + b.to_string());
      }
      return CheckResult::pass(a.to_string() + " -> " + b.to_string());
    };
    report.add("first.endpoints", ends(first, e.start_first, e.end_first));
    report.add("second.endpoints", ends(second, e.start_second, e.end_second));
  }
  return report;
}

VerificationReport verify_pair(const PathPair& pair) {
  if (pair.first.dim() != pair.dim || pair.second.dim() != pair.dim) {
    VerificationReport r;
    r.subject = "paths of LTQ_" + std::to_string(pair.dim);
    r.add("dimension", CheckResult::fail("member dimension mismatch"));
    return r;
  }
  return verify_sequences(pair.dim, false, pair.first.values(),
                          pair.second.values());
}

VerificationReport verify_pair(const CyclePair& pair) {
  if (pair.first.dim() != pair.dim || pair.second.dim() != pair.dim) {
    VerificationReport r;
    r.subject = "cycles of LTQ_" + std::to_string(pair.dim);
    r.add("dimension", CheckResult::fail("member dimension mismatch"));
    return r;
  }
  return verify_sequences(pair.dim, true, pair.first.values(),
                          pair.second.values());
}

std::vector<Cycle> enumerate_hamiltonian_cycles(int dim,
                                                std::optional<std::size_t> limit) {
  require_dim(dim, kMinDim, 20);
  if (!limit && dim > kMaxExhaustiveDim) {
    throw RefusalError("exhaustive enumeration of LTQ_" + std::to_string(dim) +
                       " refused; pass a limit");
  }
  std::vector<Cycle> out;
  if (limit && *limit == 0) return out;

  const Adjacency adj = ltq_adjacency(dim);
  CycleSearch search(adj, std::numeric_limits<std::uint64_t>::max());
  search.run([&](std::span<const std::uint32_t> cycle) {
    out.emplace_back(dim, std::vector<std::uint32_t>(cycle.begin(), cycle.end()));
    return !limit || out.size() < *limit;
  });
  return out;
}

PairExistence exists_two_edge_disjoint_hc(int dim) {
  if (dim != 3 && dim != 4) {
    throw RefusalError("exhaustive pair search is limited to dimensions 3 and 4");
  }
  PairExistence result;
  result.dim = dim;
  // Every node has degree dim; two edge-disjoint Hamiltonian cycles use four
  // edges at each node.
  result.excluded_by_degree = dim < 4;

  const auto cycles = enumerate_hamiltonian_cycles(dim);
  result.cycles_enumerated = cycles.size();

  // Edge sets as bitmasks; LTQ_4 has 32 edges.
  std::vector<std::uint64_t> masks;
  masks.reserve(cycles.size());
  for (const auto& c : cycles) {
    std::uint64_t m = 0;
    const auto v = c.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
      m |= std::uint64_t{1} << edge_index(dim, v[i], v[(i + 1) % v.size()]);
    }
    masks.push_back(m);
  }
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if ((masks[i] & masks[j]) == 0) ++result.disjoint_pairs;
    }
  }

  if (dim == 4) {
    CyclePair witness = edh_cycles(4);
    const bool listed =
        std::find(cycles.begin(), cycles.end(), witness.first) != cycles.end() &&
        std::find(cycles.begin(), cycles.end(), witness.second) != cycles.end();
    if (listed && verify_pair(witness).passed()) {
      result.witness = std::move(witness);
    }
  }
  result.exists = result.disjoint_pairs > 0;
  return result;
}

ThirdCycleSearch search_third_cycle(int dim, std::span<const Edge> residual,
                                    std::uint64_t budget) {
  require_dim(dim, kMinDim, 24);
  ThirdCycleSearch result;
  if (budget == 0) return result;

  const std::uint32_t n = std::uint32_t{1} << dim;
  Adjacency adj(n);
  for (const auto& e : residual) {
    if (e.dim() != dim) {
      throw DimensionError("residual edge of dimension " + std::to_string(e.dim()));
    }
    adj[e.a().value()].push_back(e.b().value());
    adj[e.b().value()].push_back(e.a().value());
  }
  // A Hamiltonian cycle needs degree >= 2 at every node.
  for (auto& nb : adj) {
    if (nb.size() < 2) return result;
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  CycleSearch search(adj, budget);
  search.run([&](std::span<const std::uint32_t> cycle) {
    result.cycle = Cycle(dim, std::vector<std::uint32_t>(cycle.begin(), cycle.end()));
    return false;
  });
  result.expansions = search.expansions();
  result.budget_exhausted = search.budget_exhausted();
  return result;
}

ResidualAnalysis residual_analysis(const CyclePair& pair,
                                   std::optional<std::uint64_t> search_budget) {
  const auto report = verify_pair(pair);
  if (!report.passed()) {
    std::string failed;
    for (const auto& f : report.failures()) failed += " " + f;
    throw PreconditionError("residual analysis needs a verified pair; failed:" +
                            failed);
  }
  const int dim = pair.dim;
  std::vector<bool> used(edge_count(dim), false);
  mark_edges(dim, pair.first.values(), true, used);
  mark_edges(dim, pair.second.values(), true, used);

  ResidualAnalysis out;
  out.dim = dim;
  std::vector<int> degree(std::size_t{1} << dim, 0);
  for (const auto& e : edges(dim)) {
    if (!used[edge_index(e)]) {
      out.unused_edges.push_back(e);
      ++degree[e.a().value()];
      ++degree[e.b().value()];
    }
  }
  for (int d : degree) ++out.degree_histogram[d];

  if (search_budget) {
    out.search = search_third_cycle(dim, out.unused_edges, *search_budget);
    out.third_cycle = out.search->cycle;
  }
  return out;
}

}  // namespace ltq
