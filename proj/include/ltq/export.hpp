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

// Text renderings shared by the CLI. Every renderer is deterministic; labels
// are always written as dim-character binary strings.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ltq/broadcast.hpp"
#include "ltq/construction.hpp"
#include "ltq/verify.hpp"

namespace ltq {

inline constexpr int kCyclesDocumentVersion = 1;

enum class PairKind { kPaths, kCycles };

std::string_view to_string(PairKind kind);

/// In-memory form of a cycles-json document:
///   {"version": 1, "dim": N, "kind": "paths"|"cycles",
///    "cycles": [[label, ...], [label, ...]]}
/// Sequences are kept exactly as written so that tampered documents can be
/// judged by the checkers.
struct CyclesDocument {
  int version = kCyclesDocumentVersion;
  int dim = 0;
  PairKind kind = PairKind::kCycles;
  std::array<std::vector<std::uint32_t>, 2> sequences;
};

CyclesDocument make_document(const PathPair& pair);
CyclesDocument make_document(const CyclePair& pair);

/// Two-space indented JSON with a trailing newline.
std::string render_cycles_json(const CyclesDocument& doc);

/// Throws DocumentError on bad JSON, missing or mistyped fields, an
/// unsupported version or dimension, or labels that are not dim-bit strings.
CyclesDocument parse_cycles_json(std::string_view text);

/// One "a b" line per edge, lexicographic.
std::string render_edgelist(int dim);
std::string render_dot(int dim);

/// Both members, one line each: "first: 0010 0110 ...".
std::string render_pair_text(const CyclesDocument& doc);
/// Undirected graph whose edges are tagged by member (solid / dashed).
std::string render_pair_dot(const CyclesDocument& doc);

std::string render_report_text(const VerificationReport& report);
std::string render_report_json(const VerificationReport& report);

std::string render_traffic_text(const TrafficReport& report);
std::string render_traffic_json(const TrafficReport& report, int dim,
                                std::string_view mode);

}  // namespace ltq
