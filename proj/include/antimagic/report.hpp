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


#ifndef ANTIMAGIC_REPORT_HPP_
#define ANTIMAGIC_REPORT_HPP_

// One labeling run packaged for the command line and the batch harness: the
// labeling, optional bound certificates, and a JSON-lines run record.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeler.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {

enum class Outcome { kLabeledVerified, kRejected, kError };

std::string_view outcome_name(Outcome outcome);

struct RunRecord {
  std::string graph;                    // file path or generator description
  Mode mode = Mode::kRegular;
  std::vector<NodeId> roots;            // per component
  std::size_t rejected_roots = 0;       // summed over components
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::optional<std::size_t> k;
  Outcome outcome = Outcome::kError;
  std::string detail;                   // error code and message, if any
  std::string digest;                   // of the vertex sums, if labeled
  std::optional<double> wall_ms;        // absent when timing is disabled
};

// FNV-1a 64 over the decimal sums joined by ' ', as 16 hex digits.
std::string vertex_sum_digest(std::span<const Label> sums);

struct RunResult {
  RunRecord record;
  std::optional<AntimagicResult> result;
  std::optional<BoundReport> bounds;
  std::vector<Label> sums;
};

// Never throws for library errors; they become the record's outcome.
RunResult run_labeling(const Graph& g, const std::string& identity,
                       const LabelOptions& options, bool check_bounds,
                       bool timing);

// Bound certificates of every component, merged.
BoundReport certify_result(const Graph& g, const AntimagicResult& result);

// Keys in fixed order, no trailing newline.
std::string to_json_line(const RunRecord& record);

// Labeling file with '#'-prefixed report lines: roots, sums and, when
// present, the bound report.
void write_label_report(std::ostream& out, const Graph& g, const RunResult& run);

}  // namespace antimagic

#endif  // ANTIMAGIC_REPORT_HPP_
