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


// Command-line front end. Exit codes: 0 success, 2 malformed input or
// arguments, 3 input outside the construction (or no witness / certificate),
// 4 a produced result failed its independent check.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "antimagic/error.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/io.hpp"
#include "antimagic/liang.hpp"
#include "antimagic/report.hpp"
#include "antimagic/verify.hpp"

namespace am = antimagic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitRejected = 3;
constexpr int kExitFailed = 4;

// Writes to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw am::Error(am::ErrorCode::kParseError, "cannot write '" + out_path + "'");
  out << text;
}

am::Mode parse_mode(const std::string& name) {
  if (name == "regular") return am::Mode::kRegular;
  if (name == "general") return am::Mode::kGeneral;
  throw am::Error(am::ErrorCode::kBadParameters, "unknown mode '" + name + "'");
}

int exit_for(am::Outcome outcome) {
  switch (outcome) {
    case am::Outcome::kLabeledVerified: return kExitOk;
    case am::Outcome::kRejected: return kExitRejected;
    case am::Outcome::kError: return kExitFailed;
  }
  return kExitFailed;
}

struct Common {
  std::string out;
  std::string mode = "regular";
  std::optional<std::uint32_t> root;
  bool check_bounds = false;
};

struct GenFlags {
  std::string family;
  std::size_t n = 0, k = 0, a = 0, b = 0, dimension = 0;
  std::vector<std::size_t> offsets;
  std::uint64_t seed = 0;
  bool connected = false;

  am::GenSpec spec() const {
    am::GenSpec s;
    s.family = am::parse_family(family);
    s.n = n;
    s.k = k;
    s.a = a;
    s.b = b;
    s.offsets = offsets;
    s.dimension = dimension;
    s.seed = seed;
    s.require_connected = connected;
    return s;
  }
};

void add_gen_flags(CLI::App* app, GenFlags& f) {
  app->add_option("--family", f.family,
                  "cycle, complete, complete_bipartite, circulant, hypercube, "
                  "petersen, random_regular (gen also accepts liang)");
  app->add_option("--n", f.n, "node count");
  app->add_option("--k", f.k, "degree for random_regular");
  app->add_option("--a", f.a, "first side size (complete_bipartite, liang |S|)");
  app->add_option("--b", f.b, "second side size (complete_bipartite, liang |T|)");
  app->add_option("--offsets", f.offsets, "circulant offsets")->delimiter(',');
  app->add_option("--dimension", f.dimension, "hypercube dimension");
  app->add_flag("--connected", f.connected, "random_regular: reject disconnected samples");
}

int cmd_label(const std::string& path, const Common& c) {
  const am::Graph g = am::read_graph_file(path);
  am::LabelOptions options;
  options.mode = parse_mode(c.mode);
  options.root = c.root;
  const am::RunResult run = am::run_labeling(g, path, options, c.check_bounds, false);
  std::ostringstream text;
  am::write_label_report(text, g, run);
  if (run.result) emit(c.out, text.str());
  else std::cerr << text.str();
  if (run.record.outcome != am::Outcome::kLabeledVerified) {
    std::cerr << "error: " << run.record.detail << '\n';
  }
  return exit_for(run.record.outcome);
}

int cmd_verify(const std::string& graph_path, const std::string& labels_path,
               const Common& c) {
  const am::Graph g = am::read_graph_file(graph_path);
  std::istringstream in(am::read_text_file(labels_path));
  const auto labels = am::read_labeling(in, g);
  const am::VertexSumReport r = am::verify_labeling(g, labels);
  std::ostringstream text;
  text << "antimagic: " << (r.antimagic ? "true" : "false") << '\n';
  text << "bijection: " << (r.injective && r.in_range ? "true" : "false") << '\n';
  for (am::NodeId v = 0; v < r.sums.size(); ++v) {
    text << "sum " << v << ' ' << r.sums[v] << '\n';
  }
  for (const auto& [u, v] : r.collisions) {
    text << "collision " << u << ' ' << v << ' ' << r.sums[u] << '\n';
  }
  emit(c.out, text.str());
  return r.antimagic ? kExitOk : kExitRejected;
}

int cmd_gen(const GenFlags& f, const Common& c) {
  std::ostringstream text;
  if (f.family == "liang") {
    am::write_liang_instance(text, am::random_liang_instance(f.a, f.b, f.seed));
  } else {
    am::write_graph(text, am::make_family(f.spec()));
  }
  emit(c.out, text.str());
  return kExitOk;
}

struct BatchFlags {
  std::string dir;
  std::uint64_t seed_from = 0, seed_to = 0;
  bool seed_range = false;
  unsigned jobs = 1;
  bool no_timing = false;
};

int cmd_batch(const GenFlags& gen, const BatchFlags& bf, const Common& c) {
  std::vector<std::string> names;
  std::vector<std::function<am::Graph()>> makers;
  if (!bf.dir.empty()) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(bf.dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      names.push_back(f);
      makers.push_back([f] { return am::read_graph_file(f); });
    }
  } else {
    if (gen.family.empty()) {
      throw am::Error(am::ErrorCode::kBadParameters, "batch needs --dir or --family");
    }
    const std::uint64_t lo = bf.seed_range ? bf.seed_from : gen.seed;
    const std::uint64_t hi = bf.seed_range ? bf.seed_to : gen.seed;
    for (std::uint64_t s = lo; s <= hi; ++s) {
      GenFlags one = gen;
      one.seed = s;
      const am::GenSpec spec = one.spec();
      names.push_back(am::describe(spec));
      makers.push_back([spec] { return am::make_family(spec); });
      if (s == hi) break;
    }
  }

  am::LabelOptions options;
  options.mode = parse_mode(c.mode);
  options.root = c.root;
  std::vector<am::RunRecord> records(names.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < names.size();) {
      try {
        const am::Graph g = makers[i]();
        const am::RunResult run = am::run_labeling(g, names[i], options,
                                                   c.check_bounds, !bf.no_timing);
        records[i] = run.record;
        if (run.bounds && !run.bounds->certified()) {
          records[i].detail = "bounds violated: successive " +
                              std::to_string(run.bounds->successive.size()) +
                              " p " + std::to_string(run.bounds->p_bounds.size()) +
                              " sigma " + std::to_string(run.bounds->sigma.size());
        }
      } catch (const am::Error& e) {
        records[i].graph = names[i];
        records[i].mode = options.mode;
        records[i].outcome = am::Outcome::kError;
        records[i].detail =
            std::string(am::error_code_name(e.code())) + ": " + e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, bf.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream text;
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : records) {
    text << am::to_json_line(r) << '\n';
    ++counts[static_cast<int>(r.outcome)];
  }
  emit(c.out, text.str());
  std::cerr << "batch: " << records.size() << " records, " << counts[0]
            << " labeled+verified, " << counts[1] << " rejected, " << counts[2]
            << " error\n";
  return counts[2] ? kExitFailed : kExitOk;
}

int cmd_liang(const std::string& path, const std::string& mode_name,
              std::size_t cap, const Common& c) {
  std::istringstream in(am::read_text_file(path));
  const am::LiangInstance inst = am::read_liang_instance(in);
  const am::LiangMode mode = am::parse_liang_mode(mode_name);
  const auto cert = am::find_liang_certificate(inst, mode, cap);
  std::ostringstream text;
  if (!cert) {
    am::write_exhaustion_report(text, inst, mode);
    emit(c.out, text.str());
    std::cerr << "liang: search exhausted (" << am::liang_mode_name(mode)
              << " mode); instance reported as a potential counterexample\n";
    return kExitRejected;
  }
  const am::LiangVerdict verdict = am::verify_liang_certificate(inst, *cert, mode);
  text << "# certificate " << (verdict.ok ? "verified" : "REJECTED") << " mode "
       << am::liang_mode_name(mode) << '\n';
  for (const auto& p : verdict.problems) text << "# problem " << p << '\n';
  am::write_liang_certificate(text, *cert);
  emit(c.out, text.str());
  return verdict.ok ? kExitOk : kExitFailed;
}

int cmd_brute(const std::string& path, std::size_t cap, const Common& c) {
  const am::Graph g = am::read_graph_file(path);
  const auto witness = am::exists_antimagic_bruteforce(g, cap);
  std::ostringstream text;
  if (!witness) {
    text << "# no antimagic labeling exists\n";
    emit(c.out, text.str());
    return kExitRejected;
  }
  text << "# antimagic witness (lexicographically first)\n";
  am::write_labeling(text, g, *witness);
  emit(c.out, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antimagic labeling of regular graphs"};
  app.require_subcommand(1);
  Common common;
  GenFlags gen;
  BatchFlags batch;
  std::string graph_path, labels_path, liang_mode = "literal";
  std::size_t brute_max = am::kDefaultBruteForceCap;
  std::size_t liang_cap = am::kDefaultLiangCap;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "output path (default stdout)");
  };
  const auto add_label_flags = [&](CLI::App* sub) {
    sub->add_option("--mode", common.mode, "regular or general")
        ->check(CLI::IsMember({"regular", "general"}));
    sub->add_option("--root", common.root, "pin the BFS root");
    sub->add_flag("--check-bounds", common.check_bounds, "emit the bound report");
  };

  auto* label = app.add_subcommand("label", "label a graph file");
  label->add_option("graph", graph_path)->required();
  add_common(label);
  add_label_flags(label);

  auto* verify = app.add_subcommand("verify", "check a labeling file");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("labeling", labels_path)->required();
  add_common(verify);

  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph or liang instance");
  add_gen_flags(gen_cmd, gen);
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->get_option("--family")->required();
  add_common(gen_cmd);

  auto* batch_cmd = app.add_subcommand("batch", "label a corpus, one JSON record per graph");
  add_gen_flags(batch_cmd, gen);
  batch_cmd->add_option("--seed", gen.seed, "single seed");
  batch_cmd->add_option("--dir", batch.dir, "directory of graph files");
  auto* from = batch_cmd->add_option("--seed-from", batch.seed_from, "first seed");
  auto* to = batch_cmd->add_option("--seed-to", batch.seed_to, "last seed (inclusive)");
  from->needs(to);
  to->needs(from);
  batch_cmd->add_option("--jobs", batch.jobs, "worker threads");
  batch_cmd->add_flag("--no-timing", batch.no_timing, "write wall_ms as null");
  add_common(batch_cmd);
  add_label_flags(batch_cmd);

  auto* liang = app.add_subcommand("liang", "search a liang instance file");
  liang->add_option("instance", graph_path)->required();
  liang->add_option("--liang-mode", liang_mode, "literal or strict")
      ->check(CLI::IsMember({"literal", "strict"}));
  liang->add_option("--cap", liang_cap, "maximum |S| + |T|");
  add_common(liang);

  auto* brute = app.add_subcommand("brute", "exhaustive antimagic search");
  brute->add_option("graph", graph_path)->required();
  brute->add_option("--brute-max", brute_max, "maximum edge count");
  add_common(brute);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }
  batch.seed_range = from->count() > 0;

  try {
    if (*label) return cmd_label(graph_path, common);
    if (*verify) return cmd_verify(graph_path, labels_path, common);
    if (*gen_cmd) return cmd_gen(gen, common);
    if (*batch_cmd) return cmd_batch(gen, batch, common);
    if (*liang) return cmd_liang(graph_path, liang_mode, liang_cap, common);
    if (*brute) return cmd_brute(graph_path, brute_max, common);
  } catch (const am::Error& e) {
    std::cerr << "error: " << am::error_code_name(e.code()) << ": " << e.what() << '\n';
    if (am::is_rejection(e.code())) return kExitRejected;
    if (e.code() == am::ErrorCode::kVerificationFailed) return kExitFailed;
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}
