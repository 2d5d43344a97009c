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

#include "ltq/topology.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <utility>

#include "ltq/errors.hpp"

namespace ltq {

void require_dim(int dim, int lo, int hi) {
  if (dim < lo || dim > hi) {
    throw DimensionError("dimension " + std::to_string(dim) +
                         " outside supported range [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]");
  }
}

namespace {

void require_same_dim(const NodeLabel& x, const NodeLabel& y) {
  if (x.dim() != y.dim()) {
    throw DimensionError("labels " + x.to_string() + " and " + y.to_string() +
                         " have different dimensions");
  }
}

char xor_char(char p, char q) { return p == q ? '0' : '1'; }

// Literal recursion over label strings.
std::vector<std::string> recursive_neighbor_strings(const std::string& s) {
  if (s.size() == 2) {
    static const std::array<std::pair<const char*, const char*>, 4> kBase{{
        {"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}}};
    std::vector<std::string> out;
    for (const auto& [u, v] : kBase) {
      if (s == u) out.emplace_back(v);
      if (s == v) out.emplace_back(u);
    }
    return out;
  }

  // Neighbors inside the same half: recurse on the suffix, keep the prefix.
  const char prefix = s.front();
  const std::string suffix = s.substr(1);
  std::vector<std::string> out;
  for (const auto& n : recursive_neighbor_strings(suffix)) {
    out.push_back(prefix + n);
  }

  // The cross edge joins 0 b_{n-2} ... b_0 to 1 (b_{n-2} xor b_0) ... b_0.
  // Viewed from the 1-side node 1 c_{n-2} ... c_0 the partner has
  // b_{n-2} = c_{n-2} xor c_0, which is the same formula.
  std::string cross;
  cross.push_back(prefix == '0' ? '1' : '0');
  cross.push_back(xor_char(s[1], s.back()));
  cross.append(s, 2);
  out.push_back(std::move(cross));
  return out;
}

}  // namespace

NodeLabel::NodeLabel(int dim, std::uint32_t value) : dim_(dim), value_(value) {
  require_dim(dim, kMinDim);
  if ((static_cast<std::uint64_t>(value) >> dim) != 0) {
    throw DimensionError("value " + std::to_string(value) +
                         " does not fit in " + std::to_string(dim) + " bits");
  }
}

std::string NodeLabel::to_string() const {
  std::string s(static_cast<std::size_t>(dim_), '0');
  for (int k = 0; k < dim_; ++k) {
    if (bit(k)) s[static_cast<std::size_t>(dim_ - 1 - k)] = '1';
  }
  return s;
}

NodeLabel make_label(int dim, std::string_view bits) {
  if (bits.size() != static_cast<std::size_t>(dim)) {
    throw FormatError("label '" + std::string(bits) + "' must have exactly " +
                      std::to_string(dim) + " bits");
  }
  std::uint32_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw FormatError("label '" + std::string(bits) +
                        "' contains a character other than 0 or 1");
    }
    value = (value << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return NodeLabel(dim, value);
}

NodeLabel parse_label(std::string_view bits) {
  if (bits.size() < static_cast<std::size_t>(kMinDim) ||
      bits.size() > static_cast<std::size_t>(kMaxDim)) {
    throw FormatError("label '" + std::string(bits) +
                      "' has an unsupported length");
  }
  return make_label(static_cast<int>(bits.size()), bits);
}

std::string repeat_bits(std::string_view pattern, int times) {
  std::string out;
  if (times <= 0) return out;
  out.reserve(pattern.size() * static_cast<std::size_t>(times));
  for (int i = 0; i < times; ++i) out.append(pattern);
  return out;
}

Edge::Edge(NodeLabel x, NodeLabel y) : a_(x), b_(y) {
  require_same_dim(x, y);
  if (!is_adjacent(x, y)) {
    throw std::invalid_argument(x.to_string() + " and " + y.to_string() +
                                " are not adjacent");
  }
  if (b_.value() < a_.value()) std::swap(a_, b_);
}

NodeLabel cross_neighbor(const NodeLabel& x) {
  require_dim(x.dim(), 3);
  return NodeLabel(x.dim(), neighbor_value(x.value(), x.dim() - 1));
}

std::vector<NodeLabel> neighbors(const NodeLabel& x) {
  std::vector<NodeLabel> out;
  out.reserve(static_cast<std::size_t>(x.dim()));
  for (int k = 0; k < x.dim(); ++k) {
    out.emplace_back(x.dim(), neighbor_value(x.value(), k));
  }
  return out;
}

std::vector<NodeLabel> neighbors_recursive(const NodeLabel& x) {
  std::vector<NodeLabel> out;
  for (const auto& s : recursive_neighbor_strings(x.to_string())) {
    out.push_back(make_label(x.dim(), s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool values_adjacent(int dim, std::uint32_t x, std::uint32_t y) noexcept {
  const std::uint32_t diff = x ^ y;
  if (diff == 0) return false;
  const int k = std::bit_width(diff) - 1;
  return k < dim && neighbor_value(x, k) == y;
}

bool is_adjacent(const NodeLabel& x, const NodeLabel& y) {
  require_same_dim(x, y);
  return values_adjacent(x.dim(), x.value(), y.value());
}

std::vector<Edge> edges(int dim) {
  require_dim(dim, kMinDim);
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(dim) << (dim - 1));
  const std::uint32_t count = std::uint32_t{1} << dim;
  for (std::uint32_t v = 0; v < count; ++v) {
    for (int k = 0; k < dim; ++k) {
      const std::uint32_t w = neighbor_value(v, k);
      if (v < w) out.emplace_back(NodeLabel(dim, v), NodeLabel(dim, w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int subcube_of(const NodeLabel& x) {
  require_dim(x.dim(), 3);
  return x.bit(x.dim() - 1) ? 1 : 0;
}

bool successive_bits_property(const NodeLabel& x, const NodeLabel& y) {
  require_same_dim(x, y);
  const std::uint32_t diff = x.value() ^ y.value();
  if (diff == 0) return true;
  const std::uint32_t low = diff & (~diff + 1);
  return diff == low || diff == (low | (low << 1));
}

std::uint64_t edge_index(int dim, std::uint32_t x, std::uint32_t y) {
  if (!values_adjacent(dim, x, y)) {
    throw std::invalid_argument("edge_index of a non-adjacent pair");
  }
  const int k = std::bit_width(x ^ y) - 1;
  const std::uint32_t low_end = ((x >> k) & 1U) == 0 ? x : y;
  const std::uint32_t below = low_end & ((std::uint32_t{1} << k) - 1);
  const std::uint32_t above = (low_end >> (k + 1)) << k;
  return (static_cast<std::uint64_t>(k) << (dim - 1)) + (above | below);
}

std::uint64_t edge_index(const Edge& e) {
  return edge_index(e.dim(), e.a().value(), e.b().value());
}

LtqGraph::LtqGraph(int dim) : dim_(dim) { require_dim(dim, kMinDim); }

std::vector<NodeLabel> LtqGraph::neighbors(const NodeLabel& x) const {
  if (!contains(x)) {
    throw DimensionError("label " + x.to_string() + " is not a node of LTQ_" +
                         std::to_string(dim_));
  }
  return ltq::neighbors(x);
}

}  // namespace ltq
