// Copyright 2026 The wsmp Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "doctest.h"
#include "json.hpp"
#include "wsmp/dyadic.h"

namespace wsmp {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "wsmp");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("wsmp_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string Write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string Path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

const char* kFive =
    R"({"m":2,"jobs":[{"id":"a","p":"10","w":"1"},{"id":"b","p":"9","w":"1"},)"
    R"({"id":"c","p":"8","w":"1"},{"id":"d","p":"7","w":"1"},{"id":"e","p":"6","w":"1"}]})";
const char* kThree =
    R"({"m":1,"jobs":[{"id":"8","p":"8","w":"8"},{"id":"9","p":"9","w":"9"},)"
    R"({"id":"10","p":"10","w":"10"}]})";

std::string Value(const std::string& out) {
  return nlohmann::json::parse(out).at("value").get<std::string>();
}

TEST_CASE("solve") {
  TempDir dir;
  const Run r = Cli({"solve", dir.Write("five.json", kFive)});
  CHECK(r.code == 0);
  CHECK(Value(r.out) == "14");
  const Run single = Cli({"solve", dir.Write("one.json",
                                              R"({"m":1,"jobs":[{"id":"a","p":"4","w":"1"}]})")});
  CHECK(Value(single.out) == "2");
  const Run weighted = Cli({"solve", dir.Write("three.json", kThree)});
  CHECK(weighted.code == 3);
  CHECK(weighted.err.find("brute") != std::string::npos);
  CHECK(Cli({"solve", dir.Write("bad.json", "{")}).code == 2);
  CHECK(Cli({"solve", dir.Path("missing.json")}).code == 2);
}

TEST_CASE("brute") {
  TempDir dir;
  const Run r = Cli({"brute", dir.Write("three.json", kThree)});
  CHECK(r.code == 0);
  CHECK(Value(r.out) == "293/4");
  const auto order = nlohmann::json::parse(r.out).at("processors").at(0).at("order");
  CHECK(order == nlohmann::json({"9", "8", "10"}));

  std::string nine = R"({"m":1,"jobs":[)";
  for (int i = 1; i <= 9; ++i) {
    nine += (i > 1 ? "," : "") + std::string(R"({"id":"j)") + std::to_string(i) +
            R"(","p":")" + std::to_string(i) + R"(","w":"1"})";
  }
  nine += "]}";
  const std::string path = dir.Write("nine.json", nine);
  CHECK(Cli({"brute", path}).code == 4);
  CHECK(Cli({"brute", path, "--max-jobs", "9"}).code == 0);
  CHECK(Value(Cli({"brute", dir.Write("empty.json", R"({"m":1,"jobs":[]})")}).out) == "0");
}

TEST_CASE("eval") {
  TempDir dir;
  const std::string inst =
      dir.Write("i.json", R"({"m":1,"jobs":[{"id":"a","p":"4","w":"1"},{"id":"b","p":"8","w":"1"}]})");
  const Run ok = Cli({"eval", inst, dir.Write("s.json", R"({"processors":[{"id":1,"order":["a","b"]}]})")});
  CHECK(ok.code == 0);
  const auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc.at("total") == "5");
  CHECK(doc.at("processors").at(0).at("start_times") == nlohmann::json({"0", "2", "5"}));
  CHECK(doc.at("jobs").at(1).at("overlap") == "3");

  const std::string inst2 =
      dir.Write("i2.json", R"({"m":1,"jobs":[{"id":"a","p":"4","w":"1"},{"id":"b","p":"2","w":"1"}]})");
  const Run bad = Cli({"eval", inst2, dir.Write("s2.json", R"({"processors":[{"id":1,"order":["a","b"]}]})")});
  CHECK(bad.code == 5);
  CHECK(nlohmann::json::parse(bad.out).at("violation").at("position") == 2);

  CHECK(Cli({"eval", inst, dir.Write("s3.json", R"({"processors":[{"id":1,"order":["zz"]}]})")})
            .code == 2);
}

TEST_CASE("transform") {
  TempDir dir;
  const std::string inst =
      dir.Write("i.json", R"({"m":1,"jobs":[{"id":"a","p":"6","w":"1"},{"id":"b","p":"4","w":"1"}]})");
  const std::string g = dir.Write("g.json", R"({"jobs":[
    {"id":"a","shared_processor":1,"shared_intervals":[["0","1"],["2","3"]],"private_completion":"4"},
    {"id":"b","shared_processor":1,"shared_intervals":[["1","2"]],"private_completion":"3"}]})");
  const Run r = Cli({"transform", inst, g, "--to", "synchronized"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto before = Dyadic::Parse(doc.at("value_before").get<std::string>());
  const auto after = Dyadic::Parse(doc.at("value_after").get<std::string>());
  CHECK(before <= after);
  CHECK(Dyadic::Parse(doc.at("delta").get<std::string>()) == after - before);

  const std::string sync = dir.Write("sync.json", R"({"jobs":[
    {"id":"a","shared_processor":1,"shared_intervals":[["0","3"]],"private_completion":"3"},
    {"id":"b","shared_processor":null,"shared_intervals":[],"private_completion":"4"}]})");
  const auto same = nlohmann::json::parse(Cli({"transform", inst, sync}).out);
  CHECK(same.at("value_before") == same.at("value_after"));
  CHECK(same.at("processors").at(0).at("order") == nlohmann::json({"a"}));

  const std::string invalid = dir.Write("bad.json", R"({"jobs":[
    {"id":"a","shared_processor":1,"shared_intervals":[["0","2"]],"private_completion":"3"},
    {"id":"b","shared_processor":null,"shared_intervals":[],"private_completion":"4"}]})");
  const Run v = Cli({"transform", inst, invalid});
  CHECK(v.code == 5);
  CHECK(v.out.find("length mismatch") != std::string::npos);
  CHECK(Cli({"transform", inst, g, "--to", "ordered"}).code == 2);
}

TEST_CASE("check") {
  TempDir dir;
  const std::string inst = dir.Write("three.json", kThree);
  const Run v = Cli({"check", inst,
                     dir.Write("v.json", R"({"processors":[{"id":1,"order":["9","8","10"]}]})"),
                     "--properties", "v-shape"});
  CHECK(v.code == 0);
  CHECK(v.out == "v-shape: pass\n");
  const Run peak = Cli({"check", inst,
                        dir.Write("p.json", R"({"processors":[{"id":1,"order":["8","10","9"]}]})"),
                        "--properties", "v-shape,inclusive"});
  CHECK(peak.out == "v-shape: fail at processor 1 position 2\ninclusive: pass\n");

  const std::string pair =
      dir.Write("pair.json", R"({"m":1,"jobs":[{"id":"a","p":"2","w":"1"},{"id":"b","p":"4","w":"1"}]})");
  const Run inc = Cli({"check", pair,
                       dir.Write("q.json", R"({"processors":[{"id":1,"order":["a","b"]}]})"),
                       "--properties", "inclusive"});
  CHECK(inc.out == "inclusive: fail at processor 1\n");

  const std::string g = dir.Write("g.json", R"({"jobs":[
    {"id":"a","shared_processor":1,"shared_intervals":[["0","1"]],"private_completion":"1"},
    {"id":"b","shared_processor":1,"shared_intervals":[["1","2"]],"private_completion":"3"}]})");
  const Run gen = Cli({"check", pair, g, "--properties", "ordered,synchronized"});
  CHECK(gen.out == "ordered: pass\nsynchronized: fail (some job completes on its "
                   "processors at different times)\n");
  CHECK(Cli({"check", pair, g, "--properties", "shiny"}).code == 2);
  CHECK(Cli({"check", pair, dir.Write("junk.json", "[1,")}).code == 2);
}

TEST_CASE("gen-n3dm and decide-n3dm") {
  TempDir dir;
  const std::string in = dir.Write("n.json", R"({"X":[1],"Y":[2],"Z":[3],"b":6})");
  const Run r = Cli({"gen-n3dm", in});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("jobs").at(0).at("p") == "788");
  CHECK(doc.at("jobs").at(1).at("p") == "774");
  CHECK(doc.at("jobs").at(2).at("p") == "876");
  CHECK(r.err == "M=386 m_param=7 K=1606\n");

  const Run f = Cli({"gen-n3dm", in, "-o", dir.Path("inst.json")});
  CHECK(f.out == "M=386 m_param=7 K=1606\n");
  std::ifstream side(dir.Path("inst.json.provenance.json"));
  CHECK(nlohmann::json::parse(side).at("M") == 386);
  CHECK(Cli({"solve", dir.Path("inst.json")}).code == 3);

  const std::string two = dir.Write("two.json", R"({"X":[1,2],"Y":[1,2],"Z":[1,2],"b":4})");
  const auto gen2 = nlohmann::json::parse(Cli({"gen-n3dm", two}).out);
  CHECK(gen2.at("m") == 2);
  CHECK(gen2.at("jobs").size() == 6);
  CHECK(Cli({"gen-n3dm", dir.Write("neg.json", R"({"X":[-1],"Y":[2],"Z":[3],"b":6})")}).code ==
        2);

  const auto d = nlohmann::json::parse(Cli({"decide-n3dm", in}).out);
  CHECK(d.at("solvable") == true);
  CHECK(d.at("best_equitable_value") == "585428");
  CHECK(nlohmann::json::parse(Cli({"decide-n3dm", two}).out).at("solvable") == false);
  const std::string five =
      dir.Write("five.json", R"({"X":[0,0,0,0,0],"Y":[0,0,0,0,0],"Z":[0,0,0,0,0],"b":0})");
  CHECK(Cli({"decide-n3dm", five}).code == 4);
}

TEST_CASE("gantt") {
  TempDir dir;
  const std::string one = dir.Write("one.json", R"({"m":1,"jobs":[{"id":"a","p":"4","w":"1"}]})");
  const std::string s = dir.Write("s.json", R"({"processors":[{"id":1,"order":["a"]}]})");
  const Run r = Cli({"gantt", one, s, "--width", "8"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "span 0..2  width 8\n"
        "M1  |AAAAAAAA| A:(0,2)\n"
        "P a |AAAAAAAA| A:(0,2)\n");

  const std::string five = dir.Write("five.json", kFive);
  const std::string sched = dir.Write("sched.json", Cli({"solve", five}).out);
  const Run g = Cli({"gantt", five, sched, "--width", "31"});
  CHECK(g.code == 0);
  std::istringstream lines(g.out);
  std::string line;
  int shared = 0, priv = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("M", 0) == 0) ++shared;
    if (line.rfind("P ", 0) == 0) ++priv;
  }
  CHECK(shared == 2);
  CHECK(priv == 5);
  // Span 31/4 at width 31: one column per quarter.
  CHECK(g.out.find("P a |" + std::string(31, 'A') + "|") != std::string::npos);
  CHECK(g.out.find("P e |" + std::string(12, 'E') + std::string(19, ' ') + "|") !=
        std::string::npos);
  CHECK(Cli({"gantt", five, sched, "--width", "31"}).out == g.out);

  const std::string inf = dir.Write("inf.json", R"({"m":1,"jobs":[{"id":"a","p":"4","w":"1"},{"id":"b","p":"2","w":"1"}]})");
  CHECK(Cli({"gantt", inf, dir.Write("x.json", R"({"processors":[{"id":1,"order":["a","b"]}]})")})
            .code == 5);
}

TEST_CASE("usage errors") {
  CHECK(Cli({}).code == 2);
  CHECK(Cli({"frobnicate"}).code == 2);
  CHECK(Cli({"solve"}).code == 2);
  CHECK(Cli({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  TempDir dir;
  const std::string three = dir.Write("three.json", kThree);
  CHECK(Cli({"brute", three}).out == Cli({"brute", three}).out);
}

}  // namespace
}  // namespace wsmp
