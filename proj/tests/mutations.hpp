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

// Tamperings of a valid node sequence, each of which must be rejected by at
// least one named check.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ltq/topology.hpp"

namespace ltq::testing {

enum class Mutation { kSwapInterior, kDropNode, kDuplicateNode, kBreakClosingEdge };

inline const std::vector<Mutation>& all_mutations() {
  static const std::vector<Mutation> kAll = {Mutation::kSwapInterior, Mutation::kDropNode,
                                             Mutation::kDuplicateNode,
                                             Mutation::kBreakClosingEdge};
  return kAll;
}

inline std::string name(Mutation m) {
  switch (m) {
    case Mutation::kSwapInterior: return "swap two interior nodes";
    case Mutation::kDropNode: return "drop a node";
    case Mutation::kDuplicateNode: return "duplicate a node";
    case Mutation::kBreakClosingEdge: return "break the closing edge";
  }
  return "?";
}

// The sequence must have at least 6 nodes.
inline std::vector<std::uint32_t> apply(Mutation m, int dim,
                                        std::vector<std::uint32_t> v) {
  switch (m) {
    case Mutation::kSwapInterior:
      std::swap(v[2], v[v.size() / 2]);
      break;
    case Mutation::kDropNode:
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2));
      break;
    case Mutation::kDuplicateNode:
      v.insert(v.begin() + 3, v[1]);
      break;
    case Mutation::kBreakClosingEdge: {
      // Reverse a suffix v[i..] where v[i-1] ~ v.back() but v[i] !~ v[0]:
      // every step stays an edge, only the closing one breaks.
      for (std::size_t i = 2; i + 1 < v.size(); ++i) {
        if (values_adjacent(dim, v[i - 1], v.back()) &&
            !values_adjacent(dim, v[i], v.front())) {
          std::reverse(v.begin() + static_cast<std::ptrdiff_t>(i), v.end());
          return v;
        }
      }
      // Triangle-free fallback: v[m-3] -> v[m-1] cannot be an edge.
      std::swap(v[v.size() - 1], v[v.size() - 2]);
      break;
    }
  }
  return v;
}

}  // namespace ltq::testing
