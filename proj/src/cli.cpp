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

#include "ltq/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ltq/broadcast.hpp"
#include "ltq/construction.hpp"
#include "ltq/errors.hpp"
#include "ltq/export.hpp"
#include "ltq/topology.hpp"
#include "ltq/verify.hpp"

namespace ltq::cli {

namespace {

using nlohmann::json;

struct Options {
  int dim = 0;
  std::string format;
  std::string kind = "cycles";
  std::string mode;
  std::optional<std::size_t> limit;
  std::uint64_t budget = kDefaultSearchBudget;
  std::string output;
  std::string input;
};

// A command's result: text to emit plus the exit code to return.
struct Outcome {
  std::string text;
  int code = kSuccess;
};

std::string labels_line(int dim, std::span<const std::uint32_t> v) {
  std::string s;
  for (auto x : v) {
    if (!s.empty()) s += ' ';
    s += NodeLabel(dim, x).to_string();
  }
  return s;
}

json labels_array(int dim, std::span<const std::uint32_t> v) {
  json a = json::array();
  for (auto x : v) a.push_back(NodeLabel(dim, x).to_string());
  return a;
}

void require_construction_dim(int dim) {
  if (dim == 3 || dim == 2) {
    throw DimensionError("LTQ_" + std::to_string(dim) +
                         " has no two edge-disjoint Hamiltonian cycles: every "
                         "node has degree " + std::to_string(dim) +
                         " but two such cycles need degree 4");
  }
  require_dim(dim, 4, kMaxCliDim);
}

Outcome cmd_topology(const Options& o) {
  require_dim(o.dim, kMinDim, kMaxCliDim);
  if (o.format == "edgelist") return {render_edgelist(o.dim)};
  if (o.format == "dot") return {render_dot(o.dim)};
  throw RefusalError("topology supports --format edgelist|dot");
}

Outcome cmd_construct(const Options& o) {
  require_construction_dim(o.dim);
  CyclesDocument doc;
  if (o.kind == "paths") {
    doc = make_document(edh_paths(o.dim));
  } else if (o.kind == "cycles") {
    doc = make_document(edh_cycles(o.dim));
  } else {
    throw RefusalError("--kind must be paths or cycles");
  }
  if (o.format == "cycles-json") return {render_cycles_json(doc)};
  if (o.format == "report-text") return {render_pair_text(doc)};
  if (o.format == "dot") return {render_pair_dot(doc)};
  throw RefusalError("construct supports --format cycles-json|report-text|dot");
}

Outcome cmd_verify(const Options& o, std::istream& in) {
  if (o.format != "report-text" && o.format != "report-json") {
    throw RefusalError("verify supports --format report-text|report-json");
  }
  std::string text;
  if (o.input.empty() || o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(o.input, std::ios::binary);
    if (!f) throw DocumentError("cannot read " + o.input);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  const CyclesDocument doc = parse_cycles_json(text);
  const auto report = verify_sequences(doc.dim, doc.kind == PairKind::kCycles,
                                       doc.sequences[0], doc.sequences[1]);
  const int code = report.passed() ? kSuccess : kVerificationFailed;
  return {o.format == "report-json" ? render_report_json(report)
                                    : render_report_text(report),
          code};
}

Outcome cmd_oracle(const Options& o) {
  const bool as_json = o.format == "report-json";
  if (!as_json && o.format != "report-text") {
    throw RefusalError("oracle supports --format report-text|report-json");
  }
  if (o.mode == "enumerate") {
    const auto cycles = enumerate_hamiltonian_cycles(o.dim, o.limit);
    const bool exhaustive = !o.limit || cycles.size() < *o.limit;
    if (as_json) {
      json j;
      j["dim"] = o.dim;
      j["mode"] = o.mode;
      j["exhaustive"] = exhaustive;
      j["count"] = cycles.size();
      j["cycles"] = json::array();
      for (const auto& c : cycles) j["cycles"].push_back(labels_array(o.dim, c.values()));
      return {j.dump(2) + "\n"};
    }
    std::ostringstream os;
    os << "dim: " << o.dim << "\n"
       << "hamiltonian_cycles: " << cycles.size()
       << (exhaustive ? " (exhaustive)" : " (stopped at limit)") << "\n";
    for (const auto& c : cycles) os << labels_line(o.dim, c.values()) << "\n";
    return {os.str()};
  }
  if (o.mode == "pair-existence") {
    const auto r = exists_two_edge_disjoint_hc(o.dim);
    const std::string degree_note =
        r.excluded_by_degree
            ? "every node has degree " + std::to_string(o.dim) +
                  " < 4, so two edge-disjoint Hamiltonian cycles cannot exist"
            : "degree " + std::to_string(o.dim) + " >= 4 does not exclude a pair";
    if (as_json) {
      json j;
      j["dim"] = o.dim;
      j["mode"] = o.mode;
      j["exists"] = r.exists;
      j["excluded_by_degree"] = r.excluded_by_degree;
      j["degree_argument"] = degree_note;
      j["cycles_enumerated"] = r.cycles_enumerated;
      j["disjoint_pairs"] = r.disjoint_pairs;
      if (r.witness) {
        j["witness"] = json::array({labels_array(o.dim, r.witness->first.values()),
                                    labels_array(o.dim, r.witness->second.values())});
      }
      return {j.dump(2) + "\n"};
    }
    std::ostringstream os;
    os << (r.exists ? "true" : "false") << "\n"
       << "degree_argument: " << degree_note << "\n"
       << "hamiltonian_cycles: " << r.cycles_enumerated << "\n"
       << "edge_disjoint_pairs: " << r.disjoint_pairs << "\n";
    if (r.witness) {
      os << "witness_first: " << labels_line(o.dim, r.witness->first.values()) << "\n"
         << "witness_second: " << labels_line(o.dim, r.witness->second.values()) << "\n";
    }
    return {os.str()};
  }
  throw RefusalError("--mode must be enumerate or pair-existence");
}

Outcome cmd_simulate(const Options& o) {
  require_construction_dim(o.dim);
  const bool as_json = o.format == "report-json";
  if (!as_json && o.format != "report-text") {
    throw RefusalError("simulate supports --format report-text|report-json");
  }
  const CyclePair pair = edh_cycles(o.dim);
  const auto check = verify_pair(pair);
  if (!check.passed()) {
    return {render_report_text(check), kVerificationFailed};
  }
  TrafficReport report;
  if (o.mode == "single") {
    report = simulate_ring_broadcast(pair.first);
  } else if (o.mode == "split") {
    report = simulate_split_broadcast(pair);
  } else {
    throw RefusalError("--mode must be single or split");
  }
  return {as_json ? render_traffic_json(report, o.dim, o.mode)
                  : render_traffic_text(report)};
}

Outcome cmd_residual(const Options& o) {
  require_construction_dim(o.dim);
  const bool as_json = o.format == "report-json";
  if (!as_json && o.format != "report-text") {
    throw RefusalError("residual supports --format report-text|report-json");
  }
  if (o.budget == 0) throw RefusalError("--budget must be positive");
  const auto r = residual_analysis(edh_cycles(o.dim), o.budget);
  const auto& s = *r.search;
  const std::string outcome = s.cycle             ? "found"
                              : s.budget_exhausted ? "budget exhausted"
                                                   : "none exists in residual graph";
  if (as_json) {
    json j;
    j["dim"] = o.dim;
    j["unused_edges"] = json::array();
    for (const auto& e : r.unused_edges) {
      j["unused_edges"].push_back({e.a().to_string(), e.b().to_string()});
    }
    json hist = json::object();
    for (const auto& [deg, count] : r.degree_histogram) hist[std::to_string(deg)] = count;
    j["degree_histogram"] = hist;
    j["third_cycle"] = {{"outcome", outcome},
                        {"expansions", s.expansions},
                        {"budget", o.budget}};
    if (s.cycle) j["third_cycle"]["cycle"] = labels_array(o.dim, s.cycle->values());
    return {j.dump(2) + "\n"};
  }
  std::ostringstream os;
  os << "dim: " << o.dim << "\n"
     << "unused_edges: " << r.unused_edges.size() << "\n";
  for (const auto& [deg, count] : r.degree_histogram) {
    os << "residual_degree " << deg << ": " << count << " nodes\n";
  }
  os << "third_cycle: " << outcome << " after " << s.expansions
     << " expansions (budget " << o.budget << ")\n";
  if (s.cycle) os << "cycle: " << labels_line(o.dim, s.cycle->values()) << "\n";
  return {os.str()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Two edge-disjoint Hamiltonian cycles in locally twisted cubes",
               "ltq"};
  app.require_subcommand(1);
  // One Options per subcommand: CLI11 writes default values at definition
  // time, so a shared field would keep the last subcommand's default.
  Options topology_opts, construct_opts, verify_opts, oracle_opts, simulate_opts,
      residual_opts;

  auto* topology = app.add_subcommand("topology", "Render LTQ_n");
  topology->add_option("--dim", topology_opts.dim, "Dimension n")->required();
  topology->add_option("--format", topology_opts.format, "edgelist | dot")->default_val("edgelist");

  auto* construct = app.add_subcommand("construct", "Build the two edge-disjoint paths or cycles");
  construct->add_option("--dim", construct_opts.dim, "Dimension n >= 4")->required();
  construct->add_option("--kind", construct_opts.kind, "paths | cycles")->default_val("cycles");
  construct->add_option("--format", construct_opts.format, "cycles-json | report-text | dot")
      ->default_val("cycles-json");

  auto* verify = app.add_subcommand("verify", "Check a cycles-json document");
  verify->add_option("--input", verify_opts.input, "Document path (default: standard input)");
  verify->add_option("--format", verify_opts.format, "report-text | report-json")
      ->default_val("report-text");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive small-dimension searches");
  oracle->add_option("--dim", oracle_opts.dim, "Dimension")->required();
  oracle->add_option("--mode", oracle_opts.mode, "enumerate | pair-existence")->required();
  oracle->add_option("--limit", oracle_opts.limit, "Stop enumeration after this many cycles");
  oracle->add_option("--format", oracle_opts.format, "report-text | report-json")
      ->default_val("report-text");

  auto* simulate = app.add_subcommand("simulate", "All-to-all broadcast over the rings");
  simulate->add_option("--dim", simulate_opts.dim, "Dimension n >= 4")->required();
  simulate->add_option("--mode", simulate_opts.mode, "single | split")->default_val("split");
  simulate->add_option("--format", simulate_opts.format, "report-text | report-json")
      ->default_val("report-text");

  auto* residual = app.add_subcommand("residual", "Edges left unused by the two cycles");
  residual->add_option("--dim", residual_opts.dim, "Dimension n >= 4")->required();
  residual->add_option("--budget", residual_opts.budget, "Node expansions for the third-cycle search")
      ->default_val(kDefaultSearchBudget);
  residual->add_option("--format", residual_opts.format, "report-text | report-json")
      ->default_val("report-text");

  const std::pair<CLI::App*, Options*> subs[] = {
      {topology, &topology_opts}, {construct, &construct_opts},
      {verify, &verify_opts},     {oracle, &oracle_opts},
      {simulate, &simulate_opts}, {residual, &residual_opts}};
  for (const auto& [sub, opts] : subs) {
    sub->add_option("--output", opts->output,
                    "Write result here instead of standard output");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kRefused;
  }

  Outcome result;
  const Options* chosen = &residual_opts;
  for (const auto& [sub, opts] : subs) {
    if (sub->parsed()) chosen = opts;
  }
  const Options& o = *chosen;
  try {
    if (*topology) result = cmd_topology(o);
    else if (*construct) result = cmd_construct(o);
    else if (*verify) result = cmd_verify(o, in);
    else if (*oracle) result = cmd_oracle(o);
    else if (*simulate) result = cmd_simulate(o);
    else result = cmd_residual(o);
  } catch (const DocumentError& e) {
    err << "ltq: malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const PreconditionError& e) {
    err << "ltq: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "ltq: " << e.what() << "\n";
    return kRefused;
  }

  if (o.output.empty() || o.output == "-") {
    out << result.text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    f << result.text;
    if (!f) {
      err << "ltq: cannot write " << o.output << "\n";
      return kRefused;
    }
  }
  if (result.code == kVerificationFailed) {
    err << "ltq: verification failed\n";
  }
  return result.code;
}

}  // namespace ltq::cli
