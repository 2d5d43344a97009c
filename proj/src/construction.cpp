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

#include "ltq/construction.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>

#include "ltq/errors.hpp"

namespace ltq {

namespace {

std::vector<std::uint32_t> parse_listing(std::initializer_list<const char*> l) {
  std::vector<std::uint32_t> out;
  out.reserve(l.size());
  for (const char* s : l) out.push_back(make_label(4, s).value());
  return out;
}

std::vector<NodeLabel> to_labels(int dim, std::span<const std::uint32_t> v) {
  std::vector<NodeLabel> out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(dim, x);
  return out;
}

std::vector<std::uint32_t> to_values(int dim, std::span<const NodeLabel> l) {
  std::vector<std::uint32_t> out;
  out.reserve(l.size());
  for (const auto& x : l) {
    if (x.dim() != dim) {
      throw DimensionError("label " + x.to_string() + " is not " +
                           std::to_string(dim) + "-dimensional");
    }
    out.push_back(x.value());
  }
  return out;
}

std::vector<Edge> consecutive_edges(int dim, std::span<const std::uint32_t> v,
                                    bool closed) {
  std::vector<Edge> out;
  if (v.size() < 2) return out;
  out.reserve(v.size());
  for (std::size_t i = 1; i < v.size(); ++i) {
    out.emplace_back(NodeLabel(dim, v[i - 1]), NodeLabel(dim, v[i]));
  }
  if (closed) out.emplace_back(NodeLabel(dim, v.back()), NodeLabel(dim, v[0]));
  return out;
}

void check_values(int dim, std::span<const std::uint32_t> v) {
  require_dim(dim, kMinDim);
  for (auto x : v) {
    if ((static_cast<std::uint64_t>(x) >> dim) != 0) {
      throw DimensionError("value " + std::to_string(x) + " does not fit in " +
                           std::to_string(dim) + " bits");
    }
  }
}

// Closes a path into a cycle after checking the closing edge is unused.
Cycle close_path(const Path& p, const Path& other) {
  const auto v = p.values();
  if (!values_adjacent(p.dim(), v.front(), v.back())) {
    throw std::logic_error("path endpoints " + p.start().to_string() + " and " +
                           p.end().to_string() + " are not adjacent");
  }
  const auto closing = edge_index(p.dim(), v.front(), v.back());
  for (const Path* q : {&p, &other}) {
    const auto w = q->values();
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (edge_index(p.dim(), w[i - 1], w[i]) == closing) {
        throw std::logic_error("closing edge " + p.start().to_string() + "-" +
                               p.end().to_string() + " is already used");
      }
    }
  }
  return Cycle(p.dim(), std::vector<std::uint32_t>(v.begin(), v.end()));
}

}  // namespace

Path::Path(int dim, std::vector<std::uint32_t> nodes)
    : dim_(dim), nodes_(std::move(nodes)) {
  check_values(dim, nodes_);
}

Path::Path(int dim, std::span<const NodeLabel> nodes)
    : Path(dim, to_values(dim, nodes)) {}

Path Path::checked(int dim, std::vector<std::uint32_t> nodes) {
  Path p(dim, std::move(nodes));
  std::vector<bool> seen(std::size_t{1} << dim, false);
  for (std::size_t i = 0; i < p.nodes_.size(); ++i) {
    const auto x = p.nodes_[i];
    if (seen[x]) {
      throw OverlapError("node " + p.at(i).to_string() + " repeats");
    }
    seen[x] = true;
    if (i > 0 && !values_adjacent(dim, p.nodes_[i - 1], x)) {
      throw JunctionError(p.at(i - 1).to_string() + " -> " +
                          p.at(i).to_string() + " is not an edge");
    }
  }
  return p;
}

std::vector<NodeLabel> Path::labels() const { return to_labels(dim_, nodes_); }

std::vector<Edge> Path::edge_list() const {
  return consecutive_edges(dim_, nodes_, false);
}

std::vector<std::uint32_t> canonical_rotation(std::vector<std::uint32_t> v) {
  if (v.size() < 2) return v;
  const auto min_it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), min_it, v.end());
  if (v.back() < v[1]) std::reverse(v.begin() + 1, v.end());
  return v;
}

Cycle::Cycle(int dim, std::vector<std::uint32_t> nodes)
    : dim_(dim), nodes_(canonical_rotation(std::move(nodes))) {
  check_values(dim, nodes_);
}

std::vector<NodeLabel> Cycle::labels() const {
  return to_labels(dim_, nodes_);
}

std::vector<Edge> Cycle::edge_list() const {
  return consecutive_edges(dim_, nodes_, nodes_.size() >= 3);
}

Path reverse_path(const Path& p) {
  std::vector<std::uint32_t> v(p.values().rbegin(), p.values().rend());
  return Path(p.dim(), std::move(v));
}

Path concat_paths(const Path& p, const Path& q) {
  if (p.dim() != q.dim()) {
    throw DimensionError("cannot concatenate paths of dimension " +
                         std::to_string(p.dim()) + " and " +
                         std::to_string(q.dim()));
  }
  if (q.empty()) return p;
  if (p.empty()) return q;

  std::vector<bool> in_p(std::size_t{1} << p.dim(), false);
  for (auto x : p.values()) in_p[x] = true;
  for (auto x : q.values()) {
    if (in_p[x]) {
      throw OverlapError("paths share node " +
                         NodeLabel(p.dim(), x).to_string());
    }
  }
  if (!values_adjacent(p.dim(), p.values().back(), q.values().front())) {
    throw JunctionError("end " + p.end().to_string() +
                        " is not adjacent to start " + q.start().to_string());
  }

  std::vector<std::uint32_t> v;
  v.reserve(p.size() + q.size());
  v.insert(v.end(), p.values().begin(), p.values().end());
  v.insert(v.end(), q.values().begin(), q.values().end());
  return Path(p.dim(), std::move(v));
}

Path lift_to_subcube(const Path& p, int bit) {
  const int dim = p.dim() + 1;
  require_dim(dim, 3);
  const std::uint32_t prefix = bit != 0 ? std::uint32_t{1} << p.dim() : 0;
  std::vector<std::uint32_t> v;
  v.reserve(p.size());
  for (auto x : p.values()) v.push_back(prefix | x);
  return Path(dim, std::move(v));
}

PathPair base_paths_ltq4() {
  static const std::vector<std::uint32_t> kFirst = parse_listing(
      {"0010", "0110", "0111", "0101", "0100", "1100", "1110", "1010",
       "1000", "1001", "1011", "1101", "1111", "0011", "0001", "0000"});
  static const std::vector<std::uint32_t> kSecond = parse_listing(
      {"0110", "1110", "1111", "1001", "0101", "0011", "0010", "1010",
       "1011", "0111", "0001", "1101", "1100", "1000", "0000", "0100"});
  return PathPair{4, Path(4, kFirst), Path(4, kSecond)};
}

Endpoints expected_endpoints(int dim) {
  require_dim(dim, 4);
  if (dim == 4) {
    return Endpoints{make_label(4, "0010"), make_label(4, "0000"),
                     make_label(4, "0110"), make_label(4, "0100")};
  }
  const std::string zeros = repeat_bits("0", dim - 5);
  return Endpoints{make_label(dim, "00" + zeros + "010"),
                   make_label(dim, "10" + zeros + "010"),
                   make_label(dim, "00" + zeros + "110"),
                   make_label(dim, "10" + zeros + "110")};
}

PathPair edh_paths(int dim) {
  require_dim(dim, 4);
  PathPair pair = base_paths_ltq4();
  for (int d = 5; d <= dim; ++d) {
    pair.first = concat_paths(lift_to_subcube(pair.first, 0),
                              reverse_path(lift_to_subcube(pair.first, 1)));
    pair.second = concat_paths(lift_to_subcube(pair.second, 0),
                               reverse_path(lift_to_subcube(pair.second, 1)));
    pair.dim = d;
  }
  return pair;
}

CyclePair edh_cycles(int dim) {
  const PathPair paths = edh_paths(dim);
  return CyclePair{dim, close_path(paths.first, paths.second),
                   close_path(paths.second, paths.first)};
}

}  // namespace ltq
