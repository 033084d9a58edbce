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


#include <gtest/gtest.h>

#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "antimagic/error.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/io.hpp"
#include "antimagic/report.hpp"
#include "json.hpp"

namespace antimagic {
namespace {

using Labels = std::vector<Label>;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternalInvariant;
}

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

TEST(GraphFormat, ParsesWithComments) {
  const Graph g = parse("# triangle\np 3 3\n0 1\n\n# middle\n0 2\n1 2\n");
  EXPECT_EQ(g, build_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST(GraphFormat, RoundTripsGeneratedGraphs) {
  for (const Graph& g : {cycle(5), petersen(), hypercube(3), random_regular(30, 5, 4)}) {
    std::ostringstream out;
    write_graph(out, g);
    EXPECT_EQ(parse(out.str()), g);
  }
  std::ostringstream out;
  write_graph(out, cycle(5));
  EXPECT_EQ(out.str(), "p 5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
}

TEST(GraphFormat, Errors) {
  EXPECT_EQ(code_of([] { parse(""); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse("q 3 3\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse("p 3 2\n0 1\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse("p 3 1\n0 1\n1 2\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse("p 3 1\n0 x\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse("p 3 1\n0 -1\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse("p 3 1\n0 1 2\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse("p 2 1\n1 1\n"); }), ErrorCode::kSelfLoop);
  EXPECT_EQ(code_of([] { parse("p 2 1\n0 2\n"); }), ErrorCode::kNodeOutOfRange);
}

TEST(LabelingFormat, AnyOrderAndOrientation) {
  const Graph g = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  std::istringstream in("# labels\n2 1 1\n0 1 2\n0 2 3\n");
  EXPECT_EQ(read_labeling(in, g), (Labels{2, 3, 1}));
  std::ostringstream out;
  write_labeling(out, g, Labels{2, 3, 1});
  EXPECT_EQ(out.str(), "0 1 2\n0 2 3\n1 2 1\n");
}

TEST(LabelingFormat, Errors) {
  const Graph g = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  for (const char* text : {"0 1 1\n0 2 2\n", "0 1 1\n0 1 2\n1 2 3\n",
                           "0 1 1\n0 2 2\n1 3 3\n", "0 1\n"}) {
    std::istringstream in(text);
    EXPECT_EQ(code_of([&] { read_labeling(in, g); }), ErrorCode::kParseError) << text;
  }
}

TEST(LiangFormats, RoundTrip) {
  const LiangInstance inst = random_liang_instance(5, 6, 11);
  std::ostringstream out;
  write_liang_instance(out, inst);
  std::istringstream in(out.str());
  EXPECT_EQ(read_liang_instance(in).edges(), inst.edges());

  const LiangCertificate cert{{{0, 1}, {2, 3}}, {{1, 4, 3}}};
  std::ostringstream cout;
  write_liang_certificate(cout, cert);
  EXPECT_EQ(cout.str(), "m 0 1\nm 2 3\nlink 1 4 3\n");
  std::istringstream cin(cout.str());
  const LiangCertificate back = read_liang_certificate(cin);
  EXPECT_EQ(back.matching, cert.matching);
  EXPECT_EQ(back.links, cert.links);

  std::ostringstream report;
  write_exhaustion_report(report, inst, LiangMode::kStrict);
  std::istringstream rin(report.str());
  EXPECT_EQ(read_liang_instance(rin).edges(), inst.edges());
  EXPECT_NE(report.str().find("# mode strict"), std::string::npos);
}

TEST(LiangFormats, DegreeErrorsPassThrough) {
  std::istringstream in("p 1 5 5\n0 0\n0 1\n0 2\n0 3\n0 4\n");
  EXPECT_EQ(code_of([&] { read_liang_instance(in); }), ErrorCode::kSDegreeExceeded);
}

// FNV-1a 64 of the text "5 3 4", computed by hand from the published
// offset basis and prime.
TEST(Digest, KnownValue) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : std::string("5 3 4")) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  EXPECT_EQ(vertex_sum_digest(Labels{5, 3, 4}), buf);
  EXPECT_NE(vertex_sum_digest(Labels{5, 3, 4}), vertex_sum_digest(Labels{5, 34}));
}

TEST(RunRecord, JsonFieldsAndOutcomes) {
  const RunResult ok = run_labeling(cycle(4), "cycle(4)", {}, true, false);
  EXPECT_EQ(ok.record.outcome, Outcome::kLabeledVerified);
  const auto j = nlohmann::json::parse(to_json_line(ok.record));
  EXPECT_EQ(j["graph"], "cycle(4)");
  EXPECT_EQ(j["outcome"], "labeled+verified");
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["roots"], nlohmann::json::array({0}));
  EXPECT_TRUE(j["wall_ms"].is_null());
  EXPECT_EQ(j["digest"], vertex_sum_digest(Labels{7, 4, 3, 6}));
  ASSERT_TRUE(ok.bounds.has_value());

  const RunResult rej = run_labeling(build_graph(2, {{0, 1}}), "k2", {}, false, true);
  EXPECT_EQ(rej.record.outcome, Outcome::kRejected);
  EXPECT_NE(rej.record.detail.find("DegreeTooLow"), std::string::npos);
  EXPECT_TRUE(rej.record.wall_ms.has_value());
}

TEST(LabelReport, ParsesBackAsLabelingAndIsStable) {
  const Graph g = petersen();
  const RunResult run = run_labeling(g, "petersen", {}, true, false);
  std::ostringstream a, b;
  write_label_report(a, g, run);
  write_label_report(b, g, run_labeling(g, "petersen", {}, true, false));
  EXPECT_EQ(a.str(), b.str());
  std::istringstream in(a.str());
  EXPECT_EQ(read_labeling(in, g), run.result->labeling.label);
}

// End-to-end through the command-line binary.
class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("antimagic_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  int run(const std::string& args) const {
    const std::string cmd = std::string(ANTIMAGIC_CLI) + " " + args + " >" +
                            path("stdout") + " 2>" + path("stderr");
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  }

  std::string read(const std::string& name) const { return read_text_file(path(name)); }

  std::filesystem::path dir_;
};

TEST_F(Cli, LabelThenVerifyTriangle) {
  write("tri", "p 3 3\n0 1\n0 2\n1 2\n");
  ASSERT_EQ(run("label " + path("tri") + " --out " + path("tri.lab")), 0);
  const std::string report = read("tri.lab");
  EXPECT_NE(report.find("\n0 1 2\n0 2 3\n1 2 1\n"), std::string::npos);
  EXPECT_NE(report.find("# sum 0 5\n# sum 1 3\n# sum 2 4\n"), std::string::npos);
  ASSERT_EQ(run("verify " + path("tri") + " " + path("tri.lab")), 0);
  EXPECT_EQ(read("stdout").rfind("antimagic: true\n", 0), 0u);
}

TEST_F(Cli, ExitCodes) {
  write("k2", "p 2 1\n0 1\n");
  EXPECT_EQ(run("label " + path("k2")), 3);
  EXPECT_NE(read("stderr").find("1-regular graphs are trivially not antimagic"),
            std::string::npos);
  write("bad", "p 2 two\n");
  EXPECT_EQ(run("label " + path("bad")), 2);
  EXPECT_EQ(run("label " + path("missing")), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  write("p4", "p 4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(run("label " + path("p4") + " --mode general"), 0);
  write("broom", "p 6 5\n0 1\n0 2\n0 3\n3 4\n4 5\n");
  EXPECT_EQ(run("label " + path("broom") + " --mode general"), 3);
  write("c4", "p 4 4\n0 1\n1 2\n2 3\n3 0\n");
  write("c4.bad", "0 1 1\n1 2 2\n2 3 3\n3 0 4\n");
  EXPECT_EQ(run("verify " + path("c4") + " " + path("c4.bad")), 3);
  EXPECT_EQ(read("stdout").rfind("antimagic: false\n", 0), 0u);
  EXPECT_EQ(run("brute " + path("k2")), 3);
  EXPECT_EQ(run("brute " + path("c4")), 0);
}

TEST_F(Cli, GenRoundTrip) {
  ASSERT_EQ(run("gen --family cycle --n 5 --out " + path("c5")), 0);
  EXPECT_EQ(read("c5"), "p 5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  ASSERT_EQ(run("gen --family random_regular --n 30 --k 4 --seed 3 --out " + path("rr")), 0);
  EXPECT_EQ(read_graph_file(path("rr")), random_regular(30, 4, 3));
}

TEST_F(Cli, BatchRecordsInInputOrder) {
  ASSERT_EQ(run("batch --family random_regular --n 20 --k 4 --seed-from 1 "
                "--seed-to 100 --jobs 4 --no-timing --out " + path("a.jsonl")),
            0);
  ASSERT_EQ(run("batch --family random_regular --n 20 --k 4 --seed-from 1 "
                "--seed-to 100 --no-timing --out " + path("b.jsonl")),
            0);
  const std::string a = read("a.jsonl");
  EXPECT_EQ(a, read("b.jsonl"));
  std::istringstream lines(a);
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["outcome"], "labeled+verified");
    EXPECT_EQ(j["graph"], "random_regular(20,4,seed=" + std::to_string(count + 1) + ")");
  }
  EXPECT_EQ(count, 100u);
}

TEST_F(Cli, LiangModes) {
  write("k34", "p 3 4 12\n0 0\n1 0\n2 0\n0 1\n1 1\n2 1\n0 2\n1 2\n2 2\n0 3\n1 3\n2 3\n");
  EXPECT_EQ(run("liang " + path("k34")), 0);
  EXPECT_EQ(read("stdout").rfind("# certificate verified mode literal\n", 0), 0u);
  EXPECT_EQ(run("liang " + path("k34") + " --liang-mode strict --out " + path("ex")), 3);
  std::istringstream in(read("ex"));
  EXPECT_EQ(read_liang_instance(in).edges().size(), 12u);
}

}  // namespace
}  // namespace antimagic
