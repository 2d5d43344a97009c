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

// Two edge-disjoint Hamiltonian paths and cycles of LTQ_n, n >= 4.
//
// LTQ_4 uses a fixed pair of paths P (0010 ... 0000) and Q (0110 ... 0100).
// For n >= 5 both half-cubes carry a copy of the (n-1)-dimensional pair, and
//   P = P^0 => reverse(P^1),   Q = Q^0 => reverse(Q^1)
// where the junctions end(P^0) - end(P^1) and end(Q^0) - end(Q^1) are cross
// edges. Each path's endpoints are adjacent, so closing them yields cycles.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ltq/topology.hpp"

namespace ltq {

/// An ordered node sequence. Construction does not validate; use
/// Path::checked() or the verify module for that.
class Path {
 public:
  Path() = default;
  Path(int dim, std::vector<std::uint32_t> nodes);
  Path(int dim, std::span<const NodeLabel> nodes);

  /// Throws if nodes repeat (OverlapError) or a step is not an edge
  /// (JunctionError).
  static Path checked(int dim, std::vector<std::uint32_t> nodes);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  std::span<const std::uint32_t> values() const noexcept { return nodes_; }
  NodeLabel at(std::size_t i) const { return NodeLabel(dim_, nodes_.at(i)); }
  NodeLabel start() const { return at(0); }
  NodeLabel end() const { return at(nodes_.size() - 1); }
  std::vector<NodeLabel> labels() const;

  /// Edges between consecutive nodes, in traversal order.
  std::vector<Edge> edge_list() const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  int dim_ = kMinDim;
  std::vector<std::uint32_t> nodes_;
};

/// A node sequence read cyclically, stored in canonical rotation: it starts
/// at its minimum value and runs in the direction whose second node is
/// smaller.
class Cycle {
 public:
  Cycle() = default;
  Cycle(int dim, std::vector<std::uint32_t> nodes);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const std::uint32_t> values() const noexcept { return nodes_; }
  NodeLabel at(std::size_t i) const { return NodeLabel(dim_, nodes_.at(i)); }
  std::vector<NodeLabel> labels() const;

  /// Edges between consecutive nodes including the closing one.
  std::vector<Edge> edge_list() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle& l, const Cycle& r) {
    return l.nodes_ <=> r.nodes_;
  }

 private:
  int dim_ = kMinDim;
  std::vector<std::uint32_t> nodes_;
};

/// Rotation and direction normal form used by Cycle.
std::vector<std::uint32_t> canonical_rotation(std::vector<std::uint32_t> nodes);

template <typename Member>
struct HamiltonianPair {
  int dim = 0;
  Member first;
  Member second;
};

using PathPair = HamiltonianPair<Path>;
using CyclePair = HamiltonianPair<Cycle>;

Path reverse_path(const Path& p);

/// p followed by q. Throws DimensionError on mismatched dimensions,
/// OverlapError if they share a node and JunctionError if end(p) is not
/// adjacent to start(q). An empty operand yields the other one.
Path concat_paths(const Path& p, const Path& q);

/// Embeds p into the half-cube of dimension p.dim() + 1 selected by `bit`.
Path lift_to_subcube(const Path& p, int bit);

/// The fixed pair of LTQ_4 paths.
PathPair base_paths_ltq4();

/// start(P), end(P), start(Q), end(Q) of the dim-dimensional pair.
struct Endpoints {
  NodeLabel start_first;
  NodeLabel end_first;
  NodeLabel start_second;
  NodeLabel end_second;
};

/// Throws DimensionError for dim < 4.
Endpoints expected_endpoints(int dim);

/// Two edge-disjoint Hamiltonian paths of LTQ_dim. Throws DimensionError for
/// dim < 4 (LTQ_3 is 3-regular and cannot hold two edge-disjoint cycles).
PathPair edh_paths(int dim);

/// The paths of edh_paths() closed into cycles, in canonical rotation.
CyclePair edh_cycles(int dim);

}  // namespace ltq
