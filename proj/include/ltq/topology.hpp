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

// Node labels, edges and adjacency of the locally twisted cube LTQ_n.
//
// LTQ_2 is the 4-cycle 00-01-11-10. For n >= 3, LTQ_n joins two copies of
// LTQ_{n-1} (labels prefixed with 0 and 1) by connecting
//   0 b_{n-2} b_{n-3} ... b_0  with  1 (b_{n-2} xor b_0) b_{n-3} ... b_0.
//
// Unrolling the recursion gives the closed form used by neighbors(): the
// neighbors of x are x with bit 0 flipped, x with bit 1 flipped, and for
// every k >= 2, x with bit k flipped and bit k-1 xor-ed with b_0.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ltq {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 30;

/// Throws DimensionError unless lo <= dim <= hi.
void require_dim(int dim, int lo, int hi = kMaxDim);

/// An n-bit node label b_{n-1}...b_0, b_{n-1} most significant.
class NodeLabel {
 public:
  /// Throws DimensionError if dim is outside [2, 30] or value >= 2^dim.
  NodeLabel(int dim, std::uint32_t value);

  int dim() const noexcept { return dim_; }
  std::uint32_t value() const noexcept { return value_; }
  bool bit(int k) const noexcept { return ((value_ >> k) & 1U) != 0; }

  /// Exactly dim characters, most significant bit first.
  std::string to_string() const;

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
  friend auto operator<=>(const NodeLabel&, const NodeLabel&) = default;

 private:
  int dim_;
  std::uint32_t value_;
};

/// Parses a dim-character string of 0/1, most significant bit first.
/// Throws FormatError on a wrong length or an illegal character.
NodeLabel make_label(int dim, std::string_view bits);

/// Parses a label whose dimension is its length.
NodeLabel parse_label(std::string_view bits);

/// `pattern` concatenated `times` times, e.g. ("10", 2) -> "1010".
std::string repeat_bits(std::string_view pattern, int times);

/// Unordered pair of adjacent labels, stored smaller value first.
class Edge {
 public:
  /// Throws DimensionError on mismatched dimensions and std::invalid_argument
  /// if the labels are equal or not adjacent.
  Edge(NodeLabel x, NodeLabel y);

  const NodeLabel& a() const noexcept { return a_; }
  const NodeLabel& b() const noexcept { return b_; }
  int dim() const noexcept { return a_.dim(); }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  NodeLabel a_;
  NodeLabel b_;
};

/// The node of the other half-cube joined to x by the twist rule.
/// Throws DimensionError when x.dim() < 3.
NodeLabel cross_neighbor(const NodeLabel& x);

/// Closed-form neighbor set, ordered by the dimension index k = 0..dim-1.
std::vector<NodeLabel> neighbors(const NodeLabel& x);

/// Raw-value form of neighbors(): the k-th neighbor of `value`.
constexpr std::uint32_t neighbor_value(std::uint32_t value, int k) noexcept {
  if (k < 2) {
    return value ^ (1U << k);
  }
  return value ^ (1U << k) ^ ((value & 1U) << (k - 1));
}

/// Neighbor set computed by following the recursive definition literally on
/// label strings. Sorted by value. Used as an oracle for neighbors().
std::vector<NodeLabel> neighbors_recursive(const NodeLabel& x);

/// Throws DimensionError on mismatched dimensions.
bool is_adjacent(const NodeLabel& x, const NodeLabel& y);

/// Raw-value adjacency for labels of dimension `dim`.
bool values_adjacent(int dim, std::uint32_t x, std::uint32_t y) noexcept;

/// Every edge of LTQ_dim, sorted. Throws DimensionError outside [2, 30].
std::vector<Edge> edges(int dim);

/// Most significant bit: which half-cube LTQ_{n-1}^i the node belongs to.
/// Throws DimensionError when x.dim() < 3.
int subcube_of(const NodeLabel& x);

/// True iff the labels differ in nothing, one bit, or two adjacent bits.
/// Throws DimensionError on mismatched dimensions.
bool successive_bits_property(const NodeLabel& x, const NodeLabel& y);

/// Dense numbering of the dim * 2^(dim-1) edges. An edge of dimension k
/// (k = highest differing bit) is numbered k * 2^(dim-1) plus the value of
/// its bit-k-clear endpoint with bit k removed.
std::uint64_t edge_index(int dim, std::uint32_t x, std::uint32_t y);
std::uint64_t edge_index(const Edge& e);

/// The LTQ_n graph itself. Adjacency is computed, never stored.
class LtqGraph {
 public:
  explicit LtqGraph(int dim);

  int dim() const noexcept { return dim_; }
  std::size_t vertex_count() const noexcept { return std::size_t{1} << dim_; }
  std::size_t edge_count() const noexcept {
    return static_cast<std::size_t>(dim_) << (dim_ - 1);
  }
  std::vector<NodeLabel> neighbors(const NodeLabel& x) const;
  bool contains(const NodeLabel& x) const noexcept { return x.dim() == dim_; }

 private:
  int dim_;
};

}  // namespace ltq
