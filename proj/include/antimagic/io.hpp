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


#ifndef ANTIMAGIC_IO_HPP_
#define ANTIMAGIC_IO_HPP_

// Plain-text formats. Lines starting with '#' and blank lines are ignored by
// every reader; ids are 0-based.
//
//   graph:       "p <n> <m>" then m lines "u v"
//   labeling:    lines "u v label", one per edge, any order
//   liang:       "p <|S|> <|T|> <m>" then m lines "s t"
//   certificate: lines "m <s> <t>" and "link <u> <v> <w>"
//
// All readers throw kParseError with a line number on malformed input and
// pass graph validation errors through unchanged.

#include <iosfwd>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeler.hpp"
#include "antimagic/liang.hpp"

namespace antimagic {

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// Labels indexed by edge id of `g`. Every edge must appear exactly once.
std::vector<Label> read_labeling(std::istream& in, const Graph& g);
void write_labeling(std::ostream& out, const Graph& g,
                    const std::vector<Label>& labels);

LiangInstance read_liang_instance(std::istream& in);
void write_liang_instance(std::ostream& out, const LiangInstance& inst);

LiangCertificate read_liang_certificate(std::istream& in);
void write_liang_certificate(std::ostream& out, const LiangCertificate& cert);

// '#'-prefixed header naming the mode, followed by the instance itself, so
// the report is directly readable as an instance file.
void write_exhaustion_report(std::ostream& out, const LiangInstance& inst,
                             LiangMode mode);

std::string read_text_file(const std::string& path);

}  // namespace antimagic

#endif  // ANTIMAGIC_IO_HPP_
