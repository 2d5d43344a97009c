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

// All-to-all broadcast over ring embeddings in a synchronous step model.
//
// On an m-node ring every node starts with its own unit message. In step s
// (1 <= s <= m-1) each node forwards to its ring successor the message it
// received in step s-1 (its own message in step 1). After m-1 steps every
// node holds all m messages.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ltq/construction.hpp"

namespace ltq {

enum class RingDirection { kForward, kBackward };

struct RingSchedule {
  Cycle ring;
  RingDirection direction = RingDirection::kForward;
  std::string message_class;
};

struct TrafficReport {
  std::uint64_t steps = 0;
  /// Directed traversals summed per undirected edge.
  std::map<Edge, std::uint64_t> per_edge_load;
  /// Largest number of messages on one undirected edge in one step.
  std::uint64_t max_concurrent_per_edge = 0;
  /// (edge, step) pairs carrying messages of more than one ring.
  std::uint64_t contention_events = 0;
  /// Every node received every message part.
  bool complete = false;
  std::uint64_t messages_per_node = 0;
};

/// Broadcast on a bare ring of `length` positions, link i joining position
/// i to i+1. Throws std::invalid_argument for length < 3.
struct RingPositionsReport {
  std::uint64_t steps = 0;
  std::vector<std::uint64_t> per_link_load;
  bool complete = false;
};
RingPositionsReport simulate_ring_positions(std::size_t length);

/// Throws PreconditionError unless the ring is a simple cycle of its LTQ.
/// Supported up to dimension 14.
TrafficReport simulate_ring_broadcast(const Cycle& ring);
TrafficReport simulate_ring_broadcast(const RingSchedule& schedule);

/// Each node halves its message and sends one half around each ring; both
/// rings run in the same steps. Throws PreconditionError unless the pair
/// verifies as two edge-disjoint Hamiltonian cycles.
TrafficReport simulate_split_broadcast(const CyclePair& pair);

}  // namespace ltq
