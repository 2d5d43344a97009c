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

#include "ltq/export.hpp"

#include <sstream>

#include "json.hpp"
#include "ltq/errors.hpp"

namespace ltq {

using nlohmann::json;

namespace {

std::string label(int dim, std::uint32_t v) {
  return NodeLabel(dim, v).to_string();
}

json labels_json(int dim, const std::vector<std::uint32_t>& seq) {
  json arr = json::array();
  for (auto v : seq) arr.push_back(label(dim, v));
  return arr;
}

std::vector<std::uint32_t> to_vector(std::span<const std::uint32_t> s) {
  return {s.begin(), s.end()};
}

}  // namespace

std::string_view to_string(PairKind kind) {
  return kind == PairKind::kPaths ? "paths" : "cycles";
}

CyclesDocument make_document(const PathPair& pair) {
  return CyclesDocument{kCyclesDocumentVersion, pair.dim, PairKind::kPaths,
                        {to_vector(pair.first.values()),
                         to_vector(pair.second.values())}};
}

CyclesDocument make_document(const CyclePair& pair) {
  return CyclesDocument{kCyclesDocumentVersion, pair.dim, PairKind::kCycles,
                        {to_vector(pair.first.values()),
                         to_vector(pair.second.values())}};
}

std::string render_cycles_json(const CyclesDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["dim"] = doc.dim;
  j["kind"] = std::string(to_string(doc.kind));
  j["cycles"] = json::array({labels_json(doc.dim, doc.sequences[0]),
                             labels_json(doc.dim, doc.sequences[1])});
  return j.dump(2) + "\n";
}

CyclesDocument parse_cycles_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document must be a JSON object");

  const auto field = [&](const char* name) -> const json& {
    if (!j.contains(name)) {
      throw DocumentError(std::string("missing field '") + name + "'");
    }
    return j.at(name);
  };

  CyclesDocument doc;
  if (j.contains("version")) {
    if (!j["version"].is_number_integer()) throw DocumentError("'version' must be an integer");
    doc.version = j["version"].get<int>();
    if (doc.version != kCyclesDocumentVersion) {
      throw DocumentError("unsupported document version " + std::to_string(doc.version));
    }
  }

  const json& dim = field("dim");
  if (!dim.is_number_integer()) throw DocumentError("'dim' must be an integer");
  doc.dim = dim.get<int>();
  if (doc.dim < kMinDim || doc.dim > kMaxDim) {
    throw DocumentError("'dim' " + std::to_string(doc.dim) + " out of range");
  }

  const json& kind = field("kind");
  if (!kind.is_string()) throw DocumentError("'kind' must be a string");
  if (kind == "paths") {
    doc.kind = PairKind::kPaths;
  } else if (kind == "cycles") {
    doc.kind = PairKind::kCycles;
  } else {
    throw DocumentError("'kind' must be \"paths\" or \"cycles\"");
  }

  const json& cycles = field("cycles");
  if (!cycles.is_array() || cycles.size() != 2) {
    throw DocumentError("'cycles' must be an array of two label arrays");
  }
  for (std::size_t m = 0; m < 2; ++m) {
    if (!cycles[m].is_array()) {
      throw DocumentError("'cycles' member " + std::to_string(m) + " is not an array");
    }
    for (const auto& l : cycles[m]) {
      if (!l.is_string()) throw DocumentError("labels must be strings");
      try {
        doc.sequences[m].push_back(make_label(doc.dim, l.get<std::string>()).value());
      } catch (const FormatError& e) {
        throw DocumentError(e.what());
      }
    }
  }
  return doc;
}

std::string render_edgelist(int dim) {
  std::string out;
  for (const auto& e : edges(dim)) {
    out += e.a().to_string();
    out += ' ';
    out += e.b().to_string();
    out += '\n';
  }
  return out;
}

std::string render_dot(int dim) {
  std::ostringstream os;
  os << "graph LTQ_" << dim << " {\n";
  const std::uint32_t n = std::uint32_t{1} << dim;
  for (std::uint32_t v = 0; v < n; ++v) {
    os << "  \"" << label(dim, v) << "\";\n";
  }
  for (const auto& e : edges(dim)) {
    os << "  \"" << e.a().to_string() << "\" -- \"" << e.b().to_string() << "\";\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_pair_text(const CyclesDocument& doc) {
  std::ostringstream os;
  os << "# " << to_string(doc.kind) << " of LTQ_" << doc.dim << "\n";
  const char* names[] = {"first", "second"};
  for (std::size_t m = 0; m < 2; ++m) {
    os << names[m] << ":";
    for (auto v : doc.sequences[m]) os << ' ' << label(doc.dim, v);
    os << "\n";
  }
  return os.str();
}

std::string render_pair_dot(const CyclesDocument& doc) {
  std::ostringstream os;
  os << "graph LTQ_" << doc.dim << "_" << to_string(doc.kind) << " {\n";
  const char* styles[] = {"solid", "dashed"};
  const bool closed = doc.kind == PairKind::kCycles;
  for (std::size_t m = 0; m < 2; ++m) {
    const auto& s = doc.sequences[m];
    const std::size_t steps = closed && s.size() >= 3 ? s.size() : (s.empty() ? 0 : s.size() - 1);
    for (std::size_t i = 0; i < steps; ++i) {
      os << "  \"" << label(doc.dim, s[i]) << "\" -- \""
         << label(doc.dim, s[(i + 1) % s.size()]) << "\" [style=" << styles[m]
         << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string render_report_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "subject: " << report.subject << "\n";
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << "overall: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_report_json(const VerificationReport& report) {
  json j;
  j["subject"] = report.subject;
  j["passed"] = report.passed();
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return j.dump(2) + "\n";
}

namespace {

std::pair<std::uint64_t, std::uint64_t> load_range(const TrafficReport& r) {
  if (r.per_edge_load.empty()) return {0, 0};
  std::uint64_t lo = UINT64_MAX, hi = 0;
  for (const auto& [e, l] : r.per_edge_load) {
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  return {lo, hi};
}

}  // namespace

std::string render_traffic_text(const TrafficReport& report) {
  const auto [lo, hi] = load_range(report);
  std::ostringstream os;
  os << "steps: " << report.steps << "\n"
     << "complete: " << (report.complete ? "true" : "false") << "\n"
     << "messages_per_node: " << report.messages_per_node << "\n"
     << "edges_used: " << report.per_edge_load.size() << "\n"
     << "edge_load_min: " << lo << "\n"
     << "edge_load_max: " << hi << "\n"
     << "max_concurrent_per_edge: " << report.max_concurrent_per_edge << "\n"
     << "contention_events: " << report.contention_events << "\n";
  return os.str();
}

std::string render_traffic_json(const TrafficReport& report, int dim,
                                std::string_view mode) {
  json j;
  j["dim"] = dim;
  j["mode"] = std::string(mode);
  j["steps"] = report.steps;
  j["complete"] = report.complete;
  j["messages_per_node"] = report.messages_per_node;
  j["max_concurrent_per_edge"] = report.max_concurrent_per_edge;
  j["contention_events"] = report.contention_events;
  json loads = json::array();
  for (const auto& [e, l] : report.per_edge_load) {
    loads.push_back({{"edge", {e.a().to_string(), e.b().to_string()}}, {"load", l}});
  }
  j["per_edge_load"] = std::move(loads);
  return j.dump(2) + "\n";
}

}  // namespace ltq
