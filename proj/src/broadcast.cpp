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

#include "ltq/broadcast.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ltq/errors.hpp"
#include "ltq/verify.hpp"

namespace ltq {

namespace {

constexpr int kMaxSimulationDim = 14;

// One ring as seen by the simulator: for each position, the link key used
// when that position sends to its successor.
struct RingLinks {
  std::vector<std::uint64_t> key;
  bool forward = true;
};

struct StepTotals {
  std::uint64_t steps = 0;
  std::vector<std::uint64_t> load;
  std::uint64_t max_concurrent = 0;
  std::uint64_t contention = 0;
  bool complete = false;
};

// All rings share the same length m and run in lock step for m-1 steps.
StepTotals run_lockstep(const std::vector<RingLinks>& rings, std::size_t m,
                        std::size_t key_count) {
  StepTotals t;
  t.steps = m - 1;
  t.load.assign(key_count, 0);
  std::vector<std::uint32_t> step_load(key_count, 0);
  std::vector<std::uint32_t> step_rings(key_count, 0);
  std::vector<std::uint64_t> touched;

  // carry[r][i]: origin of the message position i forwards next.
  // holds[r][i * m + o]: position i has received origin o's part.
  std::vector<std::vector<std::uint32_t>> carry(rings.size());
  std::vector<std::vector<bool>> holds(rings.size());
  for (std::size_t r = 0; r < rings.size(); ++r) {
    carry[r].resize(m);
    holds[r].assign(m * m, false);
    for (std::size_t i = 0; i < m; ++i) {
      carry[r][i] = static_cast<std::uint32_t>(i);
      holds[r][i * m + i] = true;
    }
  }

  std::vector<std::uint32_t> next(m);
  for (std::uint64_t step = 1; step < m; ++step) {
    for (std::size_t r = 0; r < rings.size(); ++r) {
      const auto& ring = rings[r];
      for (std::size_t i = 0; i < m; ++i) {
        // Backward traversal sends over the link owned by the predecessor.
        const std::size_t succ = ring.forward ? (i + 1) % m : (i + m - 1) % m;
        const auto e = ring.forward ? ring.key[i] : ring.key[succ];
        ++t.load[e];
        if (step_load[e]++ == 0) touched.push_back(e);
        step_rings[e] |= 1U << r;
        holds[r][succ * m + carry[r][i]] = true;
        next[succ] = carry[r][i];
      }
      carry[r].swap(next);
    }
    for (auto e : touched) {
      t.max_concurrent = std::max<std::uint64_t>(t.max_concurrent, step_load[e]);
      if (std::popcount(step_rings[e]) > 1) ++t.contention;
      step_load[e] = 0;
      step_rings[e] = 0;
    }
    touched.clear();
  }

  t.complete = std::all_of(holds.begin(), holds.end(), [](const auto& h) {
    return std::all_of(h.begin(), h.end(), [](bool b) { return b; });
  });
  return t;
}

RingLinks ltq_links(const Cycle& ring, RingDirection dir) {
  RingLinks out;
  out.forward = dir == RingDirection::kForward;
  const auto v = ring.values();
  out.key.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.key.push_back(edge_index(ring.dim(), v[i], v[(i + 1) % v.size()]));
  }
  return out;
}

TrafficReport to_report(int dim, const StepTotals& t, std::size_t rings,
                        std::size_t m) {
  TrafficReport report;
  report.steps = t.steps;
  report.max_concurrent_per_edge = t.max_concurrent;
  report.contention_events = t.contention;
  report.complete = t.complete;
  report.messages_per_node = rings * m;
  for (const auto& e : edges(dim)) {
    const auto l = t.load[edge_index(e)];
    if (l > 0) report.per_edge_load.emplace(e, l);
  }
  return report;
}

std::size_t edge_total(int dim) {
  return static_cast<std::size_t>(dim) << (dim - 1);
}

}  // namespace

RingPositionsReport simulate_ring_positions(std::size_t length) {
  if (length < 3) throw std::invalid_argument("a ring needs at least 3 positions");
  RingLinks ring;
  for (std::size_t i = 0; i < length; ++i) ring.key.push_back(i);
  const auto t = run_lockstep({ring}, length, length);
  return RingPositionsReport{t.steps, t.load, t.complete};
}

TrafficReport simulate_ring_broadcast(const RingSchedule& schedule) {
  const auto& ring = schedule.ring;
  const auto check = is_simple_cycle(ring.dim(), ring.values());
  if (!check) throw PreconditionError("ring is not a cycle: " + check.detail);
  require_dim(ring.dim(), kMinDim, kMaxSimulationDim);
  const auto t = run_lockstep({ltq_links(ring, schedule.direction)}, ring.size(),
                              edge_total(ring.dim()));
  return to_report(ring.dim(), t, 1, ring.size());
}

TrafficReport simulate_ring_broadcast(const Cycle& ring) {
  return simulate_ring_broadcast(RingSchedule{ring, RingDirection::kForward, "all"});
}

TrafficReport simulate_split_broadcast(const CyclePair& pair) {
  const auto report = verify_pair(pair);
  if (!report.passed()) {
    std::string failed;
    for (const auto& f : report.failures()) failed += " " + f;
    throw PreconditionError("split broadcast needs two verified edge-disjoint "
                            "Hamiltonian cycles; failed:" + failed);
  }
  require_dim(pair.dim, kMinDim, kMaxSimulationDim);
  const auto t = run_lockstep({ltq_links(pair.first, RingDirection::kForward),
                               ltq_links(pair.second, RingDirection::kForward)},
                              pair.first.size(), edge_total(pair.dim));
  return to_report(pair.dim, t, 2, pair.first.size());
}

}  // namespace ltq
