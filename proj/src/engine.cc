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

#include "wsmp/engine.h"

#include <algorithm>
#include <set>
#include <utility>

#include "json.hpp"
#include "wsmp/errors.h"
#include "wsmp/json_util.h"

namespace wsmp {
namespace {

// W_i with empty ranges allowed (i up to k); used by the exchange formula.
Dyadic SuffixWeightUnchecked(std::span<const Job> sequence, int i) {
  const int k = static_cast<int>(sequence.size());
  Dyadic sum;
  // Horner from the back: W_i = (w_{i+2} + W_{i+1}) / 2.
  for (int l = k; l >= i + 2; --l) {
    sum = (sum + sequence[l - 1].w).Halve();
  }
  return sum;
}

std::vector<Dyadic> Project(std::span<const Job> jobs, bool weights) {
  std::vector<Dyadic> out;
  out.reserve(jobs.size());
  for (const Job& job : jobs) out.push_back(weights ? job.w : job.p);
  return out;
}

}  // namespace

std::vector<Job> ResolveSequence(const std::vector<std::string>& order,
                                 const Instance& instance) {
  std::vector<Job> jobs;
  jobs.reserve(order.size());
  for (const auto& id : order) jobs.push_back(instance.Find(id));
  return jobs;
}

std::vector<Dyadic> StartTimes(std::span<const Job> sequence) {
  std::vector<Dyadic> times;
  times.reserve(sequence.size() + 1);
  times.emplace_back(0);
  for (const Job& job : sequence) times.push_back((times.back() + job.p).Halve());
  return times;
}

std::optional<std::size_t> FirstInfeasiblePosition(std::span<const Job> sequence) {
  Dyadic start;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i].p <= start) return i + 1;
    start = (start + sequence[i].p).Halve();
  }
  return std::nullopt;
}

Dyadic EvaluateSequence(std::span<const Job> sequence) {
  Dyadic start;
  Dyadic total;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Job& job = sequence[i];
    if (job.p <= start) {
      throw InfeasibleError(0, i + 1,
                            "job " + job.id + " at position " +
                                std::to_string(i + 1) + " has p <= T");
    }
    total += (job.p - start).Halve() * job.w;
    start = (start + job.p).Halve();
  }
  return total;
}

void ValidateSchedule(const SyncSchedule& schedule, const Instance& instance) {
  if (schedule.sequences.size() != static_cast<std::size_t>(instance.m())) {
    throw ParseError("schedule has " + std::to_string(schedule.sequences.size()) +
                     " processors, instance has m = " +
                     std::to_string(instance.m()));
  }
  std::set<std::string> seen;
  for (std::size_t r = 0; r < schedule.sequences.size(); ++r) {
    for (const auto& id : schedule.sequences[r]) {
      instance.Find(id);
      if (!seen.insert(id).second) {
        throw ParseError("job " + id + " appears more than once");
      }
    }
    const auto jobs = ResolveSequence(schedule.sequences[r], instance);
    if (auto pos = FirstInfeasiblePosition(jobs)) {
      throw InfeasibleError(r + 1, *pos,
                            "processor " + std::to_string(r + 1) + ": job " +
                                jobs[*pos - 1].id + " at position " +
                                std::to_string(*pos) + " has p <= T");
    }
  }
}

EvalReport Evaluate(const SyncSchedule& schedule, const Instance& instance) {
  ValidateSchedule(schedule, instance);
  EvalReport report;
  for (const auto& order : schedule.sequences) {
    const auto jobs = ResolveSequence(order, instance);
    ProcessorReport proc;
    proc.order = order;
    proc.start_times = StartTimes(jobs);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      proc.overlaps.push_back((jobs[i].p - proc.start_times[i]).Halve());
      proc.value += proc.overlaps.back() * jobs[i].w;
    }
    report.total += proc.value;
    report.processors.push_back(std::move(proc));
  }
  return report;
}

Matrix LowerHalvingMatrix(std::size_t k) {
  Matrix m{k, std::vector<Dyadic>(k * k)};
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      m.entries[r * k + c] = Dyadic(1).Shift(-static_cast<std::int64_t>(r - c));
    }
  }
  return m;
}

Matrix UpperHalvingMatrix(std::size_t k) {
  const Matrix lower = LowerHalvingMatrix(k);
  Matrix m{k, std::vector<Dyadic>(k * k)};
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) m.entries[r * k + c] = lower.at(c, r);
  }
  return m;
}

Dyadic BilinearForm(std::span<const Dyadic> row, const Matrix& matrix,
                    std::span<const Dyadic> column) {
  if (row.size() != matrix.size || column.size() != matrix.size) {
    throw PreconditionError("BilinearForm: dimension mismatch");
  }
  Dyadic sum;
  for (std::size_t r = 0; r < matrix.size; ++r) {
    if (row[r].is_zero()) continue;
    Dyadic inner;
    for (std::size_t c = 0; c < matrix.size; ++c) {
      const Dyadic& entry = matrix.at(r, c);
      if (!entry.is_zero()) inner += entry * column[c];
    }
    sum += row[r] * inner;
  }
  return sum;
}

Dyadic EvaluateMatrix(std::span<const Job> sequence) {
  const auto p = Project(sequence, false);
  const auto w = Project(sequence, true);
  Dyadic diagonal;
  for (std::size_t i = 0; i < p.size(); ++i) diagonal += p[i] * w[i];
  const Matrix lower = LowerHalvingMatrix(sequence.size());
  return diagonal.Halve() - BilinearForm(w, lower, p).Halve();
}

Dyadic EvaluateMatrixDual(std::span<const Job> sequence) {
  const auto p = Project(sequence, false);
  const auto w = Project(sequence, true);
  Dyadic diagonal;
  for (std::size_t i = 0; i < p.size(); ++i) diagonal += w[i] * p[i];
  const Matrix upper = UpperHalvingMatrix(sequence.size());
  return diagonal.Halve() - BilinearForm(p, upper, w).Halve();
}

Dyadic SuffixWeight(std::span<const Job> sequence, int i) {
  const int k = static_cast<int>(sequence.size());
  if (i < -1 || i > k - 2) {
    throw PreconditionError("SuffixWeight: index " + std::to_string(i) +
                            " outside -1.." + std::to_string(k - 2));
  }
  return SuffixWeightUnchecked(sequence, i);
}

Dyadic ExchangeDelta(std::span<const Job> sequence, std::size_t i) {
  const std::size_t k = sequence.size();
  if (i < 1 || i + 1 > k) {
    throw PreconditionError("ExchangeDelta: position " + std::to_string(i) +
                            " outside 1.." + std::to_string(k == 0 ? 0 : k - 1));
  }
  if (!IsProcessingTimeInclusive(sequence)) {
    throw PreconditionError("ExchangeDelta: job set is not processing-time-inclusive");
  }
  const Job& a = sequence[i - 1];
  const Job& b = sequence[i];
  const Dyadic start = StartTimes(sequence.first(i - 1)).back();
  const Dyadic suffix = SuffixWeightUnchecked(sequence, static_cast<int>(i));
  const Dyadic sum = (b.w - a.w) * start + (a.p - b.p) * suffix + a.w * b.p - b.w * a.p;
  return sum.Shift(-2);
}

std::vector<Job> SwapAdjacent(std::span<const Job> sequence, std::size_t i) {
  if (i < 1 || i + 1 > sequence.size()) {
    throw PreconditionError("SwapAdjacent: position out of range");
  }
  std::vector<Job> out(sequence.begin(), sequence.end());
  std::swap(out[i - 1], out[i]);
  return out;
}

bool IsInclusive(std::vector<Dyadic> values) {
  if (values.size() < 2) return true;
  std::sort(values.begin(), values.end());
  // Makespan of values[1..] in ascending order.
  Dyadic makespan;
  for (std::size_t l = 1; l < values.size(); ++l) {
    makespan = (makespan + values[l]).Halve();
  }
  return makespan < values.front();
}

bool IsProcessingTimeInclusive(std::span<const Job> jobs) {
  return IsInclusive(Project(jobs, false));
}

bool IsWeightInclusive(std::span<const Job> jobs) {
  return IsInclusive(Project(jobs, true));
}

std::optional<std::size_t> VShapeViolation(std::span<const Job> sequence) {
  std::size_t t = 0;
  while (t + 1 < sequence.size() && sequence[t + 1].p <= sequence[t].p) ++t;
  for (; t + 1 < sequence.size(); ++t) {
    if (sequence[t + 1].p < sequence[t].p) return t + 1;
  }
  return std::nullopt;
}

bool IsVShaped(std::span<const Job> sequence) {
  return !VShapeViolation(sequence).has_value();
}

std::vector<Job> ReverseDual(std::span<const Job> sequence) {
  if (!IsProcessingTimeInclusive(sequence) || !IsWeightInclusive(sequence)) {
    throw PreconditionError(
        "ReverseDual: job set must be processing-time- and weight-inclusive");
  }
  std::vector<Job> out;
  out.reserve(sequence.size());
  for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
    out.push_back(Job{it->id, it->w, it->p});
  }
  return out;
}

SyncSchedule ParseSyncSchedule(std::string_view text, int m) {
  const nlohmann::json doc = json_util::ParseDocument(text);
  if (!doc.is_object()) throw ParseError("schedule: expected a JSON object");
  SyncSchedule schedule;
  schedule.sequences.resize(static_cast<std::size_t>(std::max(m, 0)));
  std::set<int> seen;
  for (const auto& proc : json_util::GetArray(doc, "processors")) {
    if (!proc.is_object()) throw ParseError("schedule: processor must be an object");
    const int id = json_util::GetInt(proc, "id");
    if (id < 1 || id > m) {
      throw ParseError("schedule: processor id " + std::to_string(id) +
                       " outside 1.." + std::to_string(m));
    }
    if (!seen.insert(id).second) {
      throw ParseError("schedule: processor " + std::to_string(id) + " listed twice");
    }
    auto& order = schedule.sequences[static_cast<std::size_t>(id - 1)];
    for (const auto& job : json_util::GetArray(proc, "order")) {
      if (!job.is_string()) throw ParseError("schedule: job ids must be strings");
      order.push_back(job.get<std::string>());
    }
  }
  return schedule;
}

std::string SerializeSyncSchedule(const SyncSchedule& schedule) {
  nlohmann::ordered_json doc;
  doc["processors"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < schedule.sequences.size(); ++r) {
    doc["processors"].push_back(
        {{"id", r + 1}, {"order", schedule.sequences[r]}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace wsmp
