// Copyright 2026 The antimagic Authors
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


#include "antimagic/report.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>

#include "antimagic/error.hpp"
#include "antimagic/io.hpp"
#include "json.hpp"

namespace antimagic {

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::kLabeledVerified: return "labeled+verified";
    case Outcome::kRejected: return "rejected";
    case Outcome::kError: return "error";
  }
  return "?";
}

std::string vertex_sum_digest(std::span<const Label> sums) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  bool first = true;
  const auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (Label s : sums) {
    if (!first) feed(" ");
    feed(std::to_string(s));
    first = false;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

BoundReport certify_result(const Graph& g, const AntimagicResult& result) {
  BoundReport report;
  for (const auto& run : result.components) {
    report.merge(certify_bounds(g, run.layering, run.decompositions,
                                result.labeling.label, result.k));
  }
  return report;
}

RunResult run_labeling(const Graph& g, const std::string& identity,
                       const LabelOptions& options, bool check_bounds,
                       bool timing) {
  RunResult run;
  RunRecord& rec = run.record;
  rec.graph = identity;
  rec.mode = options.mode;
  rec.nodes = g.node_count();
  rec.edges = g.edge_count();
  rec.k = regularity(g);
  const auto start = std::chrono::steady_clock::now();
  try {
    run.result = antimagic_label(g, options);
    const VertexSumReport report = verify_labeling(g, run.result->labeling.label);
    run.sums = report.sums;
    for (const auto& c : run.result->components) {
      rec.roots.push_back(c.root);
      rec.rejected_roots += c.rejected_roots.size();
    }
    if (check_bounds) run.bounds = certify_result(g, *run.result);
    if (report.antimagic) {
      rec.outcome = Outcome::kLabeledVerified;
      rec.digest = vertex_sum_digest(run.sums);
    } else {
      rec.outcome = Outcome::kError;
      rec.detail = "VerificationFailed: independent check rejected the labeling";
    }
  } catch (const Error& e) {
    run.result.reset();
    rec.outcome = is_rejection(e.code()) ? Outcome::kRejected : Outcome::kError;
    rec.detail = std::string(error_code_name(e.code())) + ": " + e.what();
  }
  if (timing) {
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  }
  return run;
}

std::string to_json_line(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["graph"] = r.graph;
  j["mode"] = std::string(mode_name(r.mode));
  j["roots"] = r.roots;
  j["rejected_roots"] = r.rejected_roots;
  j["nodes"] = r.nodes;
  j["edges"] = r.edges;
  j["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
  j["outcome"] = std::string(outcome_name(r.outcome));
  j["detail"] = r.detail;
  j["digest"] = r.digest;
  j["wall_ms"] =
      r.wall_ms ? nlohmann::ordered_json(*r.wall_ms) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

namespace {

std::string_view side_name(Side side) {
  return side == Side::kUpper ? "upper" : "lower";
}

void write_bounds(std::ostream& out, const BoundReport& b) {
  out << "# bounds " << (b.certified() ? "certified" : "violated")
      << " successive " << b.successive.size() << " p " << b.p_bounds.size()
      << " sigma " << b.sigma.size() << " noncontiguous "
      << b.noncontiguous_levels.size() << '\n';
  for (const auto& l : b.levels) {
    out << "# level " << l.level << " s " << l.trail.lo << " l " << l.trail.hi
        << '\n';
  }
  for (const auto& v : b.successive) {
    out << "# successive-violation level " << v.level << " node " << v.node
        << " labels " << v.first << ' ' << v.second << " side "
        << side_name(v.side) << '\n';
  }
  for (const auto& v : b.p_bounds) {
    out << "# p-violation level " << v.level << " node " << v.node << " p "
        << v.p << " bound " << v.bound << " side " << side_name(v.side) << '\n';
  }
  for (const auto& v : b.sigma) {
    out << "# sigma-violation level " << v.level << " node " << v.node
        << " label " << v.label << " side " << side_name(v.side) << '\n';
  }
  for (auto level : b.noncontiguous_levels) {
    out << "# noncontiguous-trail-labels level " << level << '\n';
  }
}

}  // namespace

void write_label_report(std::ostream& out, const Graph& g, const RunResult& run) {
  const RunRecord& r = run.record;
  out << "# outcome " << outcome_name(r.outcome) << '\n';
  out << "# mode " << mode_name(r.mode) << " nodes " << r.nodes << " edges "
      << r.edges << " k " << (r.k ? std::to_string(*r.k) : "none") << '\n';
  if (!run.result) {
    out << "# detail " << r.detail << '\n';
    return;
  }
  for (std::size_t c = 0; c < run.result->components.size(); ++c) {
    const auto& comp = run.result->components[c];
    out << "# component " << c << " root " << comp.root << " depth "
        << comp.layering.depth() << " rejected_roots";
    for (NodeId v : comp.rejected_roots) out << ' ' << v;
    out << '\n';
  }
  write_labeling(out, g, run.result->labeling.label);
  for (NodeId v = 0; v < run.sums.size(); ++v) {
    out << "# sum " << v << ' ' << run.sums[v] << '\n';
  }
  out << "# digest " << r.digest << '\n';
  if (run.bounds) write_bounds(out, *run.bounds);
}

}  // namespace antimagic
