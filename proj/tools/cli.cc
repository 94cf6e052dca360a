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

#include "cli.h"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "gantt.h"
#include "json.hpp"
#include "wsmp/engine.h"
#include "wsmp/errors.h"
#include "wsmp/hardness.h"
#include "wsmp/instance.h"
#include "wsmp/json_util.h"
#include "wsmp/solvers.h"
#include "wsmp/transforms.h"

namespace wsmp {
namespace {

using Json = nlohmann::ordered_json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw ParseError("cannot write " + path);
}

Json StringArray(const std::vector<Dyadic>& values) {
  Json arr = Json::array();
  for (const Dyadic& v : values) arr.push_back(v.ToString());
  return arr;
}

Json ScheduleJson(const SyncSchedule& schedule) {
  return Json::parse(SerializeSyncSchedule(schedule));
}

void Emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

// Reports an infeasible synchronized schedule on stdout.
int ReportInfeasible(const InfeasibleError& e, const SyncSchedule& schedule,
                     std::ostream& out, std::ostream& err) {
  Json doc;
  doc["feasible"] = false;
  Json v;
  v["processor"] = e.processor();
  v["position"] = e.position();
  v["job"] = schedule.sequences.at(e.processor() - 1).at(e.position() - 1);
  v["message"] = e.what();
  doc["violation"] = std::move(v);
  Emit(out, doc);
  err << "infeasible schedule: " << e.what() << "\n";
  return kExitInfeasible;
}

struct Files {
  std::string instance;
  std::string schedule;
};

int Solve(const Files& f, std::ostream& out, std::ostream& err) {
  const Instance inst = ParseInstance(ReadFile(f.instance));
  if (!inst.HasEqualWeights()) {
    err << "solve handles equal weights only; use `wsmp brute` for weighted instances\n";
    return kExitWrongSolver;
  }
  const SyncSchedule s = SolveEqualWeights(inst);
  Json doc = ScheduleJson(s);
  doc["value"] = Evaluate(s, inst).total.ToString();
  Emit(out, doc);
  return kExitOk;
}

int Brute(const Files& f, std::size_t max_jobs, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(f.instance));
  SearchLimits limits;
  limits.max_jobs = max_jobs;
  const BruteForceResult r = BruteForce(inst, limits);
  Json doc = ScheduleJson(r.schedule);
  doc["value"] = r.value.ToString();
  Emit(out, doc);
  return kExitOk;
}

int Eval(const Files& f, std::ostream& out, std::ostream& err) {
  const Instance inst = ParseInstance(ReadFile(f.instance));
  const SyncSchedule s = ParseSyncSchedule(ReadFile(f.schedule), inst.m());
  EvalReport report;
  try {
    report = Evaluate(s, inst);
  } catch (const InfeasibleError& e) {
    return ReportInfeasible(e, s, out, err);
  }

  Json doc;
  doc["feasible"] = true;
  Json procs = Json::array();
  std::vector<Json> per_job(inst.size());
  for (std::size_t r = 0; r < report.processors.size(); ++r) {
    const ProcessorReport& p = report.processors[r];
    Json pj;
    pj["id"] = r + 1;
    pj["order"] = p.order;
    pj["start_times"] = StringArray(p.start_times);
    pj["overlaps"] = StringArray(p.overlaps);
    pj["value"] = p.value.ToString();
    procs.push_back(std::move(pj));
    for (std::size_t i = 0; i < p.order.size(); ++i) {
      const std::size_t idx = *inst.IndexOf(p.order[i]);
      per_job[idx]["processor"] = r + 1;
      per_job[idx]["overlap"] = p.overlaps[i].ToString();
    }
  }
  Json jobs = Json::array();
  for (std::size_t j = 0; j < inst.size(); ++j) {
    Json jj;
    jj["id"] = inst.job(j).id;
    jj["processor"] = per_job[j].contains("processor") ? per_job[j]["processor"] : Json();
    const Dyadic overlap =
        per_job[j].contains("overlap")
            ? Dyadic::Parse(per_job[j]["overlap"].get<std::string>())
            : Dyadic();
    jj["overlap"] = overlap.ToString();
    jj["weighted"] = (overlap * inst.job(j).w).ToString();
    jobs.push_back(std::move(jj));
  }
  doc["processors"] = std::move(procs);
  doc["jobs"] = std::move(jobs);
  doc["total"] = report.total.ToString();
  Emit(out, doc);
  return kExitOk;
}

int ReportViolations(const std::vector<Violation>& violations, std::ostream& out,
                     std::ostream& err) {
  Json doc;
  doc["valid"] = false;
  Json arr = Json::array();
  for (const Violation& v : violations) {
    Json vj;
    vj["job"] = v.job;
    vj["processor"] = v.processor ? Json(*v.processor) : Json();
    vj["message"] = v.message;
    arr.push_back(std::move(vj));
    err << "invalid schedule: " << (v.job.empty() ? "" : v.job + ": ") << v.message
        << "\n";
  }
  doc["violations"] = std::move(arr);
  Emit(out, doc);
  return kExitInfeasible;
}

int Transform(const Files& f, const std::string& target, std::ostream& out,
              std::ostream& err) {
  if (target != "synchronized") {
    err << "unsupported target '" << target << "'; only 'synchronized' is available\n";
    return kExitParse;
  }
  const Instance inst = ParseInstance(ReadFile(f.instance));
  const GeneralSchedule g = ParseGeneralSchedule(ReadFile(f.schedule));
  if (auto v = Validate(g, inst); !v.empty()) return ReportViolations(v, out, err);

  const SyncResult r = Synchronize(g, inst);
  Json doc = ScheduleJson(r.schedule);
  doc["value_before"] = r.value_before.ToString();
  doc["value_after"] = r.value_after.ToString();
  doc["delta"] = (r.value_after - r.value_before).ToString();
  doc["push_iterations"] = r.push_iterations;
  Emit(out, doc);
  return kExitOk;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int Check(const Files& f, const std::string& properties, std::ostream& out,
          std::ostream& err) {
  const std::vector<std::string> props = SplitList(properties);
  for (const auto& p : props) {
    if (p != "v-shape" && p != "ordered" && p != "synchronized" && p != "inclusive") {
      err << "unknown property '" << p
          << "'; expected v-shape, ordered, synchronized or inclusive\n";
      return kExitParse;
    }
  }

  const Instance inst = ParseInstance(ReadFile(f.instance));
  const std::string text = ReadFile(f.schedule);
  const auto doc = json_util::ParseDocument(text);

  // Accept either schedule format.
  GeneralSchedule general;
  SyncSchedule sync;
  if (doc.is_object() && doc.contains("jobs")) {
    general = ParseGeneralSchedule(text);
    if (auto v = Validate(general, inst); !v.empty()) return ReportViolations(v, out, err);
    sync.sequences.resize(static_cast<std::size_t>(inst.m()));
    for (int r = 1; r <= inst.m(); ++r) {
      sync.sequences[static_cast<std::size_t>(r - 1)] = ProcessorSequence(general, r);
    }
  } else {
    sync = ParseSyncSchedule(text, inst.m());
    try {
      ValidateSchedule(sync, inst);
    } catch (const InfeasibleError& e) {
      return ReportInfeasible(e, sync, out, err);
    }
    general = ToGeneral(sync, inst);
  }

  for (const auto& p : props) {
    std::string failure;
    if (p == "v-shape" || p == "inclusive") {
      for (std::size_t r = 0; r < sync.sequences.size() && failure.empty(); ++r) {
        const auto jobs = ResolveSequence(sync.sequences[r], inst);
        if (p == "v-shape") {
          if (auto pos = VShapeViolation(jobs)) {
            failure = "at processor " + std::to_string(r + 1) + " position " +
                      std::to_string(*pos);
          }
        } else if (!IsProcessingTimeInclusive(jobs)) {
          failure = "at processor " + std::to_string(r + 1);
        }
      }
    } else if (p == "ordered") {
      if (!IsOrdered(general)) failure = "(completion orders disagree)";
    } else if (!IsSynchronized(general)) {
      failure = "(some job completes on its processors at different times)";
    }
    out << p << ": " << (failure.empty() ? "pass" : "fail " + failure) << "\n";
  }
  return kExitOk;
}

struct GenOptions {
  std::string input;
  std::string output;
  std::string provenance;
};

int GenN3dm(const GenOptions& o, std::ostream& out, std::ostream& err) {
  const HardInstance hi = GenerateInstance(ParseN3dm(ReadFile(o.input)));
  const std::string instance_text = SerializeInstance(hi.instance);
  std::string sidecar = o.provenance;
  if (sidecar.empty() && !o.output.empty()) sidecar = o.output + ".provenance.json";

  std::ostream& summary = o.output.empty() ? err : out;
  if (o.output.empty()) {
    out << instance_text;
  } else {
    WriteFile(o.output, instance_text);
  }
  if (!sidecar.empty()) WriteFile(sidecar, SerializeProvenance(hi));
  summary << "M=" << hi.params.big_m << " m_param=" << hi.params.m_param
          << " K=" << hi.k_const << "\n";
  return kExitOk;
}

int DecideN3dm(const std::string& path, std::ostream& out) {
  const N3dmInput input = ParseN3dm(ReadFile(path));
  const Decision d = Decide(input);
  const HardInstance hi = GenerateInstance(input);
  const std::vector<std::int64_t> zero(hi.n(), 0);

  Json doc;
  doc["n"] = hi.n();
  doc["solvable"] = d.solvable;
  Json witness = Json::array();
  for (const Triple& t : d.witness) witness.push_back({t.a + 1, t.b + 1, t.c + 1});
  doc["witness"] = std::move(witness);
  doc["matchings"] = d.matchings;
  doc["best_equitable_value"] = d.best_equitable_value.ToString();
  doc["h0_reference"] = HValue(zero, hi).ToString();
  doc["h0_derived"] = HValueDerived(zero, hi).ToString();
  Emit(out, doc);
  return kExitOk;
}

int Gantt(const Files& f, int width, std::ostream& out, std::ostream& err) {
  const Instance inst = ParseInstance(ReadFile(f.instance));
  const SyncSchedule s = ParseSyncSchedule(ReadFile(f.schedule), inst.m());
  try {
    out << RenderGantt(s, inst, width);
  } catch (const InfeasibleError& e) {
    return ReportInfeasible(e, s, out, err);
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers and checkers for weighted shared-processor scheduling"};
  app.require_subcommand(1);

  Files files;
  std::function<int()> action;

  auto* solve = app.add_subcommand("solve", "Optimal schedule for equal weights");
  solve->add_option("instance", files.instance, "Instance JSON")->required();
  solve->callback([&] { action = [&] { return Solve(files, out, err); }; });

  std::size_t max_jobs = SearchLimits{}.max_jobs;
  auto* brute = app.add_subcommand("brute", "Exhaustive optimum for small instances");
  brute->add_option("instance", files.instance, "Instance JSON")->required();
  brute->add_option("--max-jobs", max_jobs, "Refuse larger instances")
      ->capture_default_str();
  brute->callback([&] { action = [&] { return Brute(files, max_jobs, out); }; });

  auto* eval = app.add_subcommand("eval", "Evaluate a synchronized schedule");
  eval->add_option("instance", files.instance, "Instance JSON")->required();
  eval->add_option("schedule", files.schedule, "Schedule JSON")->required();
  eval->callback([&] { action = [&] { return Eval(files, out, err); }; });

  std::string target = "synchronized";
  auto* transform =
      app.add_subcommand("transform", "Turn a general schedule into a synchronized one");
  transform->add_option("instance", files.instance, "Instance JSON")->required();
  transform->add_option("schedule", files.schedule, "General schedule JSON")->required();
  transform->add_option("--to", target, "Target form")->capture_default_str();
  transform->callback([&] { action = [&] { return Transform(files, target, out, err); }; });

  std::string properties = "v-shape,ordered,synchronized,inclusive";
  auto* check = app.add_subcommand("check", "Report structural properties of a schedule");
  check->add_option("instance", files.instance, "Instance JSON")->required();
  check->add_option("schedule", files.schedule, "Schedule JSON (either format)")
      ->required();
  check->add_option("--properties", properties, "Comma-separated list")
      ->capture_default_str();
  check->callback([&] { action = [&] { return Check(files, properties, out, err); }; });

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen-n3dm", "Build a scheduling instance from N3DM");
  gen_cmd->add_option("n3dm", gen.input, "N3DM JSON")->required();
  gen_cmd->add_option("-o,--output", gen.output, "Write the instance here");
  gen_cmd->add_option("--provenance", gen.provenance, "Write the job provenance here");
  gen_cmd->callback([&] { action = [&] { return GenN3dm(gen, out, err); }; });

  std::string decide_input;
  auto* decide = app.add_subcommand("decide-n3dm", "Decide N3DM via equitable schedules");
  decide->add_option("n3dm", decide_input, "N3DM JSON (n <= 4)")->required();
  decide->callback([&] { action = [&] { return DecideN3dm(decide_input, out); }; });

  int width = 60;
  auto* gantt = app.add_subcommand("gantt", "ASCII chart of a synchronized schedule");
  gantt->add_option("instance", files.instance, "Instance JSON")->required();
  gantt->add_option("schedule", files.schedule, "Schedule JSON")->required();
  gantt->add_option("--width", width, "Chart width in characters")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  gantt->callback([&] { action = [&] { return Gantt(files, width, out, err); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace wsmp
