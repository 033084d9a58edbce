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


// Python bindings for the labeling engine, verifier, generators and the
// Liang checker. Library errors surface as antimagic.Error with
// args == (code_name, message).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "antimagic/error.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/io.hpp"
#include "antimagic/labeler.hpp"
#include "antimagic/liang.hpp"
#include "antimagic/report.hpp"
#include "antimagic/verify.hpp"

namespace py = pybind11;
namespace am = antimagic;

namespace {

using EdgeList = std::vector<std::pair<am::NodeId, am::NodeId>>;

am::Graph make_graph(std::size_t n, const EdgeList& edges) {
  std::vector<am::Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, v] : edges) list.push_back({u, v});
  return am::build_graph(n, std::move(list));
}

EdgeList edge_list(const am::Graph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

am::Mode parse_mode(const std::string& name) {
  if (name == "regular") return am::Mode::kRegular;
  if (name == "general") return am::Mode::kGeneral;
  throw am::Error(am::ErrorCode::kBadParameters, "unknown mode '" + name + "'");
}

py::dict label(const am::Graph& g, const std::string& mode,
               std::optional<am::NodeId> root, bool check_bounds) {
  const am::AntimagicResult r = am::antimagic_label(g, {parse_mode(mode), root});
  const am::VertexSumReport report = am::verify_labeling(g, r.labeling.label);
  py::dict out;
  out["labels"] = r.labeling.label;
  out["sums"] = report.sums;
  std::vector<am::NodeId> roots;
  std::vector<std::vector<am::NodeId>> rejected;
  for (const auto& c : r.components) {
    roots.push_back(c.root);
    rejected.push_back(c.rejected_roots);
  }
  out["roots"] = roots;
  out["rejected_roots"] = rejected;
  out["k"] = r.k;
  out["digest"] = am::vertex_sum_digest(report.sums);
  if (check_bounds) {
    const am::BoundReport b = am::certify_result(g, r);
    py::dict bounds;
    bounds["certified"] = b.certified();
    bounds["successive"] = b.successive.size();
    bounds["p_bounds"] = b.p_bounds.size();
    bounds["sigma"] = b.sigma.size();
    out["bounds"] = bounds;
  }
  return out;
}

py::dict verify(const am::Graph& g, const std::vector<am::Label>& labels) {
  const am::VertexSumReport r = am::verify_labeling(g, labels);
  py::dict out;
  out["antimagic"] = r.antimagic;
  out["injective"] = r.injective;
  out["in_range"] = r.in_range;
  out["sums"] = r.sums;
  out["collisions"] = r.collisions;
  return out;
}

am::Graph generate(const std::string& family, std::size_t n, std::size_t k,
                   std::size_t a, std::size_t b, std::vector<std::size_t> offsets,
                   std::size_t dimension, std::uint64_t seed, bool connected) {
  am::GenSpec spec;
  spec.family = am::parse_family(family);
  spec.n = n;
  spec.k = k;
  spec.a = a;
  spec.b = b;
  spec.offsets = std::move(offsets);
  spec.dimension = dimension;
  spec.seed = seed;
  spec.require_connected = connected;
  return am::make_family(spec);
}

using LiangEdges = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
using LinkList = std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>;

am::LiangInstance liang_instance(std::size_t s_count, std::size_t t_count,
                                 const LiangEdges& edges) {
  std::vector<am::LiangEdge> list;
  for (const auto& [s, t] : edges) list.push_back({s, t});
  return am::validate_instance(s_count, t_count, std::move(list));
}

std::optional<py::dict> liang_search(std::size_t s_count, std::size_t t_count,
                                     const LiangEdges& edges, const std::string& mode,
                                     std::size_t cap) {
  const am::LiangInstance inst = liang_instance(s_count, t_count, edges);
  const auto cert = am::find_liang_certificate(inst, am::parse_liang_mode(mode), cap);
  if (!cert) return std::nullopt;
  py::dict out;
  LiangEdges matching;
  for (const auto& e : cert->matching) matching.emplace_back(e.s, e.t);
  LinkList links;
  for (const auto& l : cert->links) links.emplace_back(l.u, l.v, l.w);
  out["matching"] = matching;
  out["links"] = links;
  return out;
}

py::dict liang_verify(std::size_t s_count, std::size_t t_count, const LiangEdges& edges,
                      const LiangEdges& matching, const LinkList& links,
                      const std::string& mode) {
  const am::LiangInstance inst = liang_instance(s_count, t_count, edges);
  am::LiangCertificate cert;
  for (const auto& [s, t] : matching) cert.matching.push_back({s, t});
  for (const auto& [u, v, w] : links) cert.links.push_back({u, v, w});
  const am::LiangVerdict verdict =
      am::verify_liang_certificate(inst, cert, am::parse_liang_mode(mode));
  py::dict out;
  out["ok"] = verdict.ok;
  out["problems"] = verdict.problems;
  return out;
}

}  // namespace

PYBIND11_MODULE(antimagic, m) {
  m.doc() = "Antimagic labeling of regular graphs";

  static py::exception<am::Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const am::Error& e) {
      py::tuple args = py::make_tuple(std::string(am::error_code_name(e.code())), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<am::Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("node_count"), py::arg("edges"))
      .def_property_readonly("node_count", &am::Graph::node_count)
      .def_property_readonly("edge_count", &am::Graph::edge_count)
      .def("edges", &edge_list)
      .def("degree", &am::Graph::degree, py::arg("node"))
      .def("__eq__", [](const am::Graph& a, const am::Graph& b) { return a == b; })
      .def("__repr__", [](const am::Graph& g) {
        return "<antimagic.Graph n=" + std::to_string(g.node_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("regularity", &am::regularity, py::arg("graph"));
  m.def("components", &am::components, py::arg("graph"));
  m.def("find_valid_root", &am::find_valid_root, py::arg("graph"));
  m.def("label", &label, py::arg("graph"), py::arg("mode") = "regular",
        py::arg("root") = py::none(), py::arg("check_bounds") = false,
        "Antimagic labeling; labels are indexed by edge id.");
  m.def("verify", &verify, py::arg("graph"), py::arg("labels"));
  m.def("brute_force", &am::exists_antimagic_bruteforce, py::arg("graph"),
        py::arg("cap") = am::kDefaultBruteForceCap);
  m.def("generate", &generate, py::arg("family"), py::arg("n") = 0, py::arg("k") = 0,
        py::arg("a") = 0, py::arg("b") = 0,
        py::arg("offsets") = std::vector<std::size_t>{}, py::arg("dimension") = 0,
        py::arg("seed") = 0, py::arg("connected") = false);
  m.def("random_regular", &am::random_regular, py::arg("n"), py::arg("k"),
        py::arg("seed"), py::arg("connected") = false);
  m.def("layered_monotone", &am::layered_monotone, py::arg("n"), py::arg("seed"));
  m.def("read_graph", [](const std::string& text) {
    std::istringstream in(text);
    return am::read_graph(in);
  }, py::arg("text"));
  m.def("write_graph", [](const am::Graph& g) {
    std::ostringstream out;
    am::write_graph(out, g);
    return out.str();
  }, py::arg("graph"));
  m.def("liang_search", &liang_search, py::arg("s_count"), py::arg("t_count"),
        py::arg("edges"), py::arg("mode") = "literal",
        py::arg("cap") = am::kDefaultLiangCap);
  m.def("liang_verify", &liang_verify, py::arg("s_count"), py::arg("t_count"),
        py::arg("edges"), py::arg("matching"), py::arg("links"),
        py::arg("mode") = "literal");
}
