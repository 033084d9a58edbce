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


#include "antimagic/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "antimagic/error.hpp"

namespace antimagic {

namespace {

// Yields the whitespace-separated tokens of each non-comment line.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream words(line);
      std::vector<std::string> tokens;
      for (std::string w; words >> w;) tokens.push_back(std::move(w));
      return tokens;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(number_) + ": " + why);
  }

  std::uint64_t number(const std::string& token) const {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      fail("expected a non-negative integer, got '" + token + "'");
    }
    try {
      return std::stoull(token);
    } catch (const std::out_of_range&) {
      fail("integer out of range: '" + token + "'");
    }
  }

  std::vector<std::uint64_t> numbers(const std::vector<std::string>& tokens,
                                     std::size_t from, std::size_t count) const {
    if (tokens.size() != from + count) {
      fail("expected " + std::to_string(from + count) + " fields, got " +
           std::to_string(tokens.size()));
    }
    std::vector<std::uint64_t> out;
    for (std::size_t i = from; i < tokens.size(); ++i) out.push_back(number(tokens[i]));
    return out;
  }

  std::vector<std::uint64_t> header(std::size_t count) {
    auto tokens = next();
    if (!tokens) fail("missing 'p' header");
    if ((*tokens)[0] != "p") fail("expected 'p' header, got '" + (*tokens)[0] + "'");
    return numbers(*tokens, 1, count);
  }

  void expect_end() {
    if (next()) fail("unexpected data after the declared edge count");
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

NodeId as_node(const LineReader& reader, std::uint64_t x) {
  if (x > 0xffffffffULL) reader.fail("id too large: " + std::to_string(x));
  return static_cast<NodeId>(x);
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  const auto head = reader.header(2);
  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i < head[1]; ++i) {
    auto tokens = reader.next();
    if (!tokens) reader.fail("expected " + std::to_string(head[1]) + " edges, got " + std::to_string(i));
    const auto uv = reader.numbers(*tokens, 0, 2);
    edges.push_back({as_node(reader, uv[0]), as_node(reader, uv[1])});
  }
  reader.expect_end();
  return build_graph(static_cast<std::size_t>(head[0]), std::move(edges));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph read_graph_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<Label> read_labeling(std::istream& in, const Graph& g) {
  std::map<std::pair<NodeId, NodeId>, EdgeId> index;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edge(e);
    index[{std::min(u, v), std::max(u, v)}] = e;
  }
  LineReader reader(in);
  std::vector<Label> labels(g.edge_count(), 0);
  std::vector<bool> seen(g.edge_count(), false);
  std::size_t count = 0;
  while (auto tokens = reader.next()) {
    const auto f = reader.numbers(*tokens, 0, 3);
    const NodeId u = as_node(reader, f[0]);
    const NodeId v = as_node(reader, f[1]);
    auto it = index.find({std::min(u, v), std::max(u, v)});
    if (it == index.end()) {
      reader.fail("edge " + std::to_string(u) + " " + std::to_string(v) + " is not in the graph");
    }
    if (seen[it->second]) {
      reader.fail("edge " + std::to_string(u) + " " + std::to_string(v) + " labeled twice");
    }
    seen[it->second] = true;
    labels[it->second] = static_cast<Label>(f[2]);
    ++count;
  }
  if (count != g.edge_count()) {
    throw Error(ErrorCode::kParseError,
                "labeling covers " + std::to_string(count) + " of " +
                    std::to_string(g.edge_count()) + " edges");
  }
  return labels;
}

void write_labeling(std::ostream& out, const Graph& g,
                    const std::vector<Label>& labels) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << labels[e] << '\n';
  }
}

LiangInstance read_liang_instance(std::istream& in) {
  LineReader reader(in);
  const auto head = reader.header(3);
  std::vector<LiangEdge> edges;
  for (std::uint64_t i = 0; i < head[2]; ++i) {
    auto tokens = reader.next();
    if (!tokens) reader.fail("expected " + std::to_string(head[2]) + " edges, got " + std::to_string(i));
    const auto st = reader.numbers(*tokens, 0, 2);
    edges.push_back({as_node(reader, st[0]), as_node(reader, st[1])});
  }
  reader.expect_end();
  return validate_instance(static_cast<std::size_t>(head[0]),
                           static_cast<std::size_t>(head[1]), std::move(edges));
}

void write_liang_instance(std::ostream& out, const LiangInstance& inst) {
  out << "p " << inst.s_count() << ' ' << inst.t_count() << ' '
      << inst.edges().size() << '\n';
  for (const auto& e : inst.edges()) out << e.s << ' ' << e.t << '\n';
}

LiangCertificate read_liang_certificate(std::istream& in) {
  LineReader reader(in);
  LiangCertificate cert;
  while (auto tokens = reader.next()) {
    const std::string& kind = (*tokens)[0];
    if (kind == "m") {
      const auto f = reader.numbers(*tokens, 1, 2);
      cert.matching.push_back({as_node(reader, f[0]), as_node(reader, f[1])});
    } else if (kind == "link") {
      const auto f = reader.numbers(*tokens, 1, 3);
      cert.links.push_back(
          {as_node(reader, f[0]), as_node(reader, f[1]), as_node(reader, f[2])});
    } else {
      reader.fail("expected 'm' or 'link', got '" + kind + "'");
    }
  }
  return cert;
}

void write_liang_certificate(std::ostream& out, const LiangCertificate& cert) {
  for (const auto& e : cert.matching) out << "m " << e.s << ' ' << e.t << '\n';
  for (const auto& l : cert.links) {
    out << "link " << l.u << ' ' << l.v << ' ' << l.w << '\n';
  }
}

void write_exhaustion_report(std::ostream& out, const LiangInstance& inst,
                             LiangMode mode) {
  out << "# liang search exhausted without a certificate\n"
      << "# mode " << liang_mode_name(mode) << '\n'
      << "# potential counterexample; instance follows\n";
  write_liang_instance(out, inst);
}

}  // namespace antimagic
