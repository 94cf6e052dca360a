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

#include "wsmp/transforms.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "wsmp/errors.h"
#include "wsmp/json_util.h"

namespace wsmp {
namespace {

std::string Describe(const Violation& v) {
  std::string out;
  if (!v.job.empty()) out += "job " + v.job + ": ";
  if (v.processor) out += "processor " + std::to_string(*v.processor) + ": ";
  return out + v.message;
}

void RequireValid(const GeneralSchedule& schedule, const Instance& instance,
                  const std::string& op) {
  const auto violations = Validate(schedule, instance);
  if (!violations.empty()) {
    throw PreconditionError(op + ": invalid schedule: " + Describe(violations.front()));
  }
}

// Sorted, touching pieces merged, empty pieces dropped.
void Canonicalize(JobPlacement& job) {
  auto& v = job.shared_intervals;
  std::erase_if(v, [](const Interval& i) { return i.begin >= i.end; });
  std::sort(v.begin(), v.end(),
            [](const Interval& a, const Interval& b) { return a.begin < b.begin; });
  std::vector<Interval> merged;
  for (const auto& piece : v) {
    if (!merged.empty() && merged.back().end >= piece.begin) {
      merged.back().end = Max(merged.back().end, piece.end);
    } else {
      merged.push_back(piece);
    }
  }
  v = std::move(merged);
}

void CanonicalizeAll(GeneralSchedule& schedule) {
  for (auto& job : schedule.jobs) Canonicalize(job);
}

bool OnProcessor(const JobPlacement& job, int processor) {
  return job.UsesShared() && job.shared_processor == processor;
}

std::set<int> BusyProcessors(const GeneralSchedule& schedule) {
  std::set<int> out;
  for (const auto& job : schedule.jobs) {
    if (job.UsesShared() && job.shared_processor) out.insert(*job.shared_processor);
  }
  return out;
}

// Entry indices of jobs with shared work on `processor`, by shared start.
std::vector<std::size_t> SequenceIndices(const GeneralSchedule& schedule,
                                         int processor) {
  std::vector<std::size_t> seq;
  for (std::size_t e = 0; e < schedule.jobs.size(); ++e) {
    if (OnProcessor(schedule.jobs[e], processor)) seq.push_back(e);
  }
  std::sort(seq.begin(), seq.end(), [&](std::size_t a, std::size_t b) {
    return schedule.jobs[a].SharedStart() < schedule.jobs[b].SharedStart();
  });
  return seq;
}

struct Piece {
  std::size_t entry;
  Interval interval;
};

std::vector<Piece> PiecesOn(const GeneralSchedule& schedule, int processor) {
  std::vector<Piece> pieces;
  for (std::size_t e = 0; e < schedule.jobs.size(); ++e) {
    if (!OnProcessor(schedule.jobs[e], processor)) continue;
    for (const auto& iv : schedule.jobs[e].shared_intervals) pieces.push_back({e, iv});
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    return a.interval.begin < b.interval.begin;
  });
  return pieces;
}

// First idle interval before the last completion on `processor`.
std::optional<Interval> FirstGap(const GeneralSchedule& schedule, int processor) {
  Dyadic cursor;
  for (const auto& piece : PiecesOn(schedule, processor)) {
    if (piece.interval.begin > cursor) return Interval{cursor, piece.interval.begin};
    cursor = Max(cursor, piece.interval.end);
  }
  return std::nullopt;
}

bool IsSynced(const JobPlacement& job) {
  return job.SharedCompletion() == job.private_completion;
}

const Job& JobOf(const Instance& instance, const JobPlacement& placement) {
  return instance.Find(placement.id);
}

// Checks the structure shared by pulling and pushing j_i on `processor`.
std::vector<std::size_t> CheckMoveShape(const GeneralSchedule& schedule,
                                        int processor, std::size_t i,
                                        bool allow_empty_suffix, const std::string& op) {
  if (!IsNormal(schedule) || !IsNonPreemptive(schedule)) {
    throw PreconditionError(op + ": schedule must be normal and non-preemptive");
  }
  auto seq = SequenceIndices(schedule, processor);
  const std::size_t k = seq.size();
  const std::size_t max_position = allow_empty_suffix ? k + 1 : k;
  if (i < 2 || i > max_position) {
    throw PreconditionError(op + ": position " + std::to_string(i) +
                            " out of range for " + std::to_string(k) + " jobs");
  }
  for (std::size_t l = i - 1; l < k; ++l) {
    if (schedule.jobs[seq[l - 1]].SharedCompletion() != schedule.jobs[seq[l]].SharedStart()) {
      throw PreconditionError(op + ": jobs from position " + std::to_string(i - 1) +
                              " on must run back-to-back");
    }
  }
  for (std::size_t l = i; l <= k; ++l) {
    if (!IsSynced(schedule.jobs[seq[l - 1]])) {
      throw PreconditionError(op + ": job at position " + std::to_string(l) +
                              " must complete on both processors together");
    }
  }
  return seq;
}

GeneralSchedule PullUnchecked(GeneralSchedule schedule,
                              const std::vector<std::size_t>& seq, std::size_t i,
                              const Dyadic& epsilon) {
  JobPlacement& before = schedule.jobs[seq[i - 2]];
  Interval& cut = before.shared_intervals.front();
  cut.end -= epsilon;
  before.private_completion += epsilon;
  Dyadic previous_end = cut.end;
  Canonicalize(before);
  for (std::size_t l = i; l <= seq.size(); ++l) {
    JobPlacement& job = schedule.jobs[seq[l - 1]];
    const Dyadic shift = epsilon.Shift(-static_cast<std::int64_t>(l - i + 1));
    const Dyadic end = job.SharedCompletion() - shift;
    job.shared_intervals = {Interval{previous_end, end}};
    job.private_completion -= shift;
    previous_end = end;
  }
  return schedule;
}

GeneralSchedule PushUnchecked(GeneralSchedule schedule,
                              const std::vector<std::size_t>& seq, std::size_t i,
                              const Dyadic& epsilon) {
  JobPlacement& before = schedule.jobs[seq[i - 2]];
  before.shared_intervals.front().end += epsilon;
  before.private_completion -= epsilon;
  Dyadic previous_end = before.shared_intervals.front().end;
  for (std::size_t l = i; l <= seq.size(); ++l) {
    JobPlacement& job = schedule.jobs[seq[l - 1]];
    const Dyadic shift = epsilon.Shift(-static_cast<std::int64_t>(l - i + 1));
    const Dyadic end = job.SharedCompletion() + shift;
    job.shared_intervals = {Interval{previous_end, end}};
    job.private_completion += shift;
    Canonicalize(job);  // drops the interval when the job is pushed out
    previous_end = end;
  }
  return schedule;
}

// sum_{l=i}^{k} w_l / 2^{l-i+1}
Dyadic SuffixPull(const GeneralSchedule& schedule, const Instance& instance,
                  const std::vector<std::size_t>& seq, std::size_t i) {
  Dyadic sum;
  for (std::size_t l = seq.size(); l >= i; --l) {
    sum = (sum + JobOf(instance, schedule.jobs[seq[l - 1]]).w).Halve();
  }
  return sum;
}

}  // namespace

Dyadic JobPlacement::SharedCompletion() const {
  Dyadic out;
  for (const auto& iv : shared_intervals) out = Max(out, iv.end);
  return out;
}

Dyadic JobPlacement::SharedStart() const {
  if (shared_intervals.empty()) return Dyadic();
  Dyadic out = shared_intervals.front().begin;
  for (const auto& iv : shared_intervals) out = Min(out, iv.begin);
  return out;
}

Dyadic JobPlacement::SharedLength() const {
  Dyadic out;
  for (const auto& iv : shared_intervals) out += iv.length();
  return out;
}

const JobPlacement* GeneralSchedule::Find(std::string_view id) const {
  for (const auto& job : jobs) {
    if (job.id == id) return &job;
  }
  return nullptr;
}

std::vector<Violation> Validate(const GeneralSchedule& schedule,
                                const Instance& instance) {
  std::vector<Violation> out;
  std::set<std::string> seen;
  std::map<int, std::vector<Piece>> by_processor;
  for (std::size_t e = 0; e < schedule.jobs.size(); ++e) {
    const JobPlacement& placement = schedule.jobs[e];
    const auto index = instance.IndexOf(placement.id);
    if (!index) {
      out.push_back({placement.id, std::nullopt, "unknown job"});
      continue;
    }
    if (!seen.insert(placement.id).second) {
      out.push_back({placement.id, std::nullopt, "listed more than once"});
      continue;
    }
    const Job& job = instance.job(*index);
    const auto& proc = placement.shared_processor;
    if (proc && (*proc < 1 || *proc > instance.m())) {
      out.push_back({job.id, proc, "shared processor outside 1.." +
                                       std::to_string(instance.m())});
    }
    if (!proc && placement.UsesShared()) {
      out.push_back({job.id, std::nullopt, "shared intervals without a shared processor"});
    }
    if (placement.private_completion.sign() < 0) {
      out.push_back({job.id, std::nullopt, "negative private completion"});
    }
    bool intervals_ok = true;
    for (const auto& iv : placement.shared_intervals) {
      if (iv.begin.sign() < 0 || iv.begin >= iv.end) {
        out.push_back({job.id, proc,
                       "bad interval (" + iv.begin.ToString() + "," + iv.end.ToString() + ")"});
        intervals_ok = false;
      }
    }
    auto sorted = placement.shared_intervals;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.begin < b.begin; });
    for (std::size_t t = 1; t < sorted.size(); ++t) {
      if (sorted[t - 1].end > sorted[t].begin) {
        out.push_back({job.id, proc, "own shared intervals overlap"});
        intervals_ok = false;
      }
    }
    const Dyadic total = placement.SharedLength() + placement.private_completion;
    if (total != job.p) {
      out.push_back({job.id, std::nullopt,
                     "length mismatch: intervals total " + total.ToString() +
                         ", p = " + job.p.ToString()});
    }
    if (proc && intervals_ok) {
      for (const auto& iv : placement.shared_intervals) by_processor[*proc].push_back({e, iv});
    }
  }
  for (const Job& job : instance.jobs()) {
    if (!seen.contains(job.id)) out.push_back({job.id, std::nullopt, "missing job"});
  }
  for (const auto& [proc, pieces] : by_processor) {
    for (std::size_t a = 0; a < pieces.size(); ++a) {
      for (std::size_t b = a + 1; b < pieces.size(); ++b) {
        if (pieces[a].entry == pieces[b].entry) continue;
        const auto& x = pieces[a].interval;
        const auto& y = pieces[b].interval;
        if (Max(x.begin, y.begin) < Min(x.end, y.end)) {
          out.push_back({"", proc,
                         "jobs " + schedule.jobs[pieces[a].entry].id + " and " +
                             schedule.jobs[pieces[b].entry].id + " overlap"});
        }
      }
    }
  }
  return out;
}

Dyadic ValueGeneral(const GeneralSchedule& schedule, const Instance& instance) {
  RequireValid(schedule, instance, "ValueGeneral");
  Dyadic total;
  for (const auto& placement : schedule.jobs) {
    Dyadic overlap;
    for (const auto& iv : placement.shared_intervals) {
      const Dyadic end = Min(iv.end, placement.private_completion);
      if (end > iv.begin) overlap += end - iv.begin;
    }
    total += overlap * JobOf(instance, placement).w;
  }
  return total;
}

bool IsNormal(const GeneralSchedule& schedule) {
  return std::all_of(schedule.jobs.begin(), schedule.jobs.end(), [](const JobPlacement& j) {
    return j.SharedCompletion() <= j.private_completion;
  });
}

bool IsNonPreemptive(const GeneralSchedule& schedule) {
  return std::all_of(schedule.jobs.begin(), schedule.jobs.end(), [](JobPlacement j) {
    Canonicalize(j);
    return j.shared_intervals.size() <= 1;
  });
}

bool IsIdleFree(const GeneralSchedule& schedule) {
  for (int proc : BusyProcessors(schedule)) {
    if (FirstGap(schedule, proc)) return false;
  }
  return true;
}

bool IsOrdered(const GeneralSchedule& schedule) {
  if (!IsNormal(schedule) || !IsNonPreemptive(schedule)) return false;
  for (int proc : BusyProcessors(schedule)) {
    const auto seq = SequenceIndices(schedule, proc);
    for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
      if (schedule.jobs[seq[t]].private_completion >
          schedule.jobs[seq[t + 1]].private_completion) {
        return false;
      }
    }
  }
  return true;
}

bool IsSynchronized(const GeneralSchedule& schedule) {
  if (!IsNormal(schedule) || !IsNonPreemptive(schedule)) return false;
  return std::all_of(schedule.jobs.begin(), schedule.jobs.end(), [](const JobPlacement& j) {
    return !j.UsesShared() || IsSynced(j);
  });
}

std::vector<std::string> ProcessorSequence(const GeneralSchedule& schedule,
                                           int processor) {
  std::vector<std::string> ids;
  for (std::size_t e : SequenceIndices(schedule, processor)) {
    ids.push_back(schedule.jobs[e].id);
  }
  return ids;
}

GeneralSchedule Normalize(const GeneralSchedule& schedule, const Instance& instance) {
  RequireValid(schedule, instance, "Normalize");
  GeneralSchedule out = schedule;
  for (auto& job : out.jobs) {
    const Dyadic cut = job.private_completion;
    if (job.SharedCompletion() <= cut) continue;
    Dyadic removed;
    for (auto& iv : job.shared_intervals) {
      if (iv.end <= cut) continue;
      removed += iv.end - Max(iv.begin, cut);
      iv.end = Max(iv.begin, cut);
    }
    job.private_completion += removed;
    Canonicalize(job);
  }
  return out;
}

GeneralSchedule CompactIdle(const GeneralSchedule& schedule, const Instance& instance) {
  RequireValid(schedule, instance, "CompactIdle");
  if (!IsNormal(schedule)) throw PreconditionError("CompactIdle: schedule is not normal");
  GeneralSchedule out = schedule;
  CanonicalizeAll(out);
  for (int proc : BusyProcessors(out)) {
    // Move the tail of the last-finishing job into the earliest gap. Each
    // step closes that gap or consumes a whole piece lying after it.
    while (auto gap = FirstGap(out, proc)) {
      const auto seq = SequenceIndices(out, proc);
      std::size_t last = seq.front();
      for (std::size_t e : seq) {
        if (out.jobs[e].SharedCompletion() > out.jobs[last].SharedCompletion()) last = e;
      }
      JobPlacement& job = out.jobs[last];
      Interval& tail = job.shared_intervals.back();
      const Dyadic epsilon = Min(gap->length().Halve(), tail.length());
      tail.end -= epsilon;
      job.shared_intervals.push_back(
          Interval{gap->begin, gap->begin + epsilon + epsilon});
      job.private_completion -= epsilon;
      Canonicalize(job);
    }
  }
  return out;
}

GeneralSchedule MergePreemptions(const GeneralSchedule& schedule,
                                 const Instance& instance) {
  RequireValid(schedule, instance, "MergePreemptions");
  if (!IsNormal(schedule)) {
    throw PreconditionError("MergePreemptions: schedule is not normal");
  }
  GeneralSchedule out = schedule;
  CanonicalizeAll(out);
  for (int proc : BusyProcessors(out)) {
    while (true) {
      const auto seq = SequenceIndices(out, proc);
      auto split = std::find_if(seq.begin(), seq.end(), [&](std::size_t e) {
        return out.jobs[e].shared_intervals.size() > 1;
      });
      if (split == seq.end()) break;
      JobPlacement& job = out.jobs[*split];
      const Interval first = job.shared_intervals[0];
      const Dyadic next_begin = job.shared_intervals[1].begin;
      const Dyadic shift = first.length();
      // Everything between the two pieces slides left by |first|.
      for (std::size_t e : seq) {
        if (e == *split) continue;
        for (auto& iv : out.jobs[e].shared_intervals) {
          if (iv.begin >= first.end && iv.end <= next_begin) {
            iv.begin -= shift;
            iv.end -= shift;
          }
        }
        Canonicalize(out.jobs[e]);
      }
      job.shared_intervals[0] = Interval{next_begin - shift, next_begin};
      Canonicalize(job);
    }
  }
  return out;
}

GeneralSchedule Reorder(const GeneralSchedule& schedule, const Instance& instance) {
  RequireValid(schedule, instance, "Reorder");
  if (!IsNormal(schedule) || !IsNonPreemptive(schedule)) {
    throw PreconditionError("Reorder: schedule must be normal and non-preemptive");
  }
  GeneralSchedule out = schedule;
  CanonicalizeAll(out);
  for (int proc : BusyProcessors(out)) {
    while (true) {
      const auto seq = SequenceIndices(out, proc);
      std::size_t t = 0;
      while (t + 1 < seq.size() && out.jobs[seq[t]].private_completion <=
                                       out.jobs[seq[t + 1]].private_completion) {
        ++t;
      }
      if (t + 1 >= seq.size()) break;
      JobPlacement& first = out.jobs[seq[t]];
      JobPlacement& second = out.jobs[seq[t + 1]];
      const Interval a = first.shared_intervals.front();
      const Interval b = second.shared_intervals.front();
      second.shared_intervals.front() = Interval{a.begin, a.begin + b.length()};
      first.shared_intervals.front() = Interval{b.end - a.length(), b.end};
    }
  }
  return out;
}

GeneralSchedule Pull(const GeneralSchedule& schedule, const Instance& instance,
                     int processor, std::size_t i, const Dyadic& epsilon) {
  RequireValid(schedule, instance, "Pull");
  if (!IsOrdered(schedule)) throw PreconditionError("Pull: schedule is not ordered");
  const auto seq = CheckMoveShape(schedule, processor, i, false, "Pull");
  const Dyadic length = schedule.jobs[seq[i - 2]].SharedLength();
  if (epsilon.sign() <= 0 || epsilon > length) {
    throw PreconditionError("Pull: epsilon must lie in (0, " + length.ToString() + "]");
  }
  return PullUnchecked(schedule, seq, i, epsilon);
}

GeneralSchedule Push(const GeneralSchedule& schedule, const Instance& instance,
                     int processor, std::size_t i, const Dyadic& epsilon) {
  RequireValid(schedule, instance, "Push");
  const auto seq = CheckMoveShape(schedule, processor, i, true, "Push");
  const JobPlacement& before = schedule.jobs[seq[i - 2]];
  const Dyadic room = (before.private_completion - before.SharedCompletion()).Halve();
  if (epsilon.sign() <= 0 || epsilon > room) {
    throw PreconditionError("Push: epsilon must lie in (0, " + room.ToString() + "]");
  }
  for (std::size_t l = i; l <= seq.size(); ++l) {
    const Dyadic shift = epsilon.Shift(-static_cast<std::int64_t>(l - i + 1));
    if (shift > schedule.jobs[seq[l - 1]].SharedLength()) {
      throw PreconditionError("Push: epsilon too large for job at position " +
                              std::to_string(l));
    }
  }
  return PushUnchecked(schedule, seq, i, epsilon);
}

Dyadic PullDelta(const GeneralSchedule& schedule, const Instance& instance,
                 int processor, std::size_t i, const Dyadic& epsilon) {
  const auto seq = SequenceIndices(schedule, processor);
  if (i < 2 || i > seq.size() + 1) throw PreconditionError("PullDelta: position out of range");
  const Dyadic w_before = JobOf(instance, schedule.jobs[seq[i - 2]]).w;
  return epsilon * (SuffixPull(schedule, instance, seq, i) - w_before);
}

SyncResult Synchronize(const GeneralSchedule& schedule, const Instance& instance) {
  RequireValid(schedule, instance, "Synchronize");
  SyncResult result;
  result.value_before = ValueGeneral(schedule, instance);
  GeneralSchedule g = Normalize(schedule, instance);
  g = CompactIdle(g, instance);
  g = MergePreemptions(g, instance);
  g = Reorder(g, instance);

  const std::size_t limit = 2 * instance.size();
  for (int proc = 1; proc <= instance.m(); ++proc) {
    while (true) {
      const auto seq = SequenceIndices(g, proc);
      // Smallest i with j_i..j_k synchronized; i == 1 means all are.
      std::size_t i = seq.size() + 1;
      while (i > 1 && IsSynced(g.jobs[seq[i - 2]])) --i;
      if (i == 1) break;
      const JobPlacement& before = g.jobs[seq[i - 2]];
      const Dyadic suffix = SuffixPull(g, instance, seq, i);
      if (JobOf(instance, before).w >= suffix) {
        Dyadic epsilon = (before.private_completion - before.SharedCompletion()).Halve();
        for (std::size_t l = i; l <= seq.size(); ++l) {
          epsilon = Min(epsilon, g.jobs[seq[l - 1]].SharedLength().Shift(
                                     static_cast<std::int64_t>(l - i + 1)));
        }
        g = PushUnchecked(std::move(g), seq, i, epsilon);
      } else {
        // Evicting j_{i-1} gains (suffix - w) * |j_{i-1}| > 0.
        const Dyadic length = before.SharedLength();
        g = PullUnchecked(std::move(g), seq, i, length);
      }
      if (++result.push_iterations > limit) {
        throw std::logic_error("Synchronize: push loop exceeded 2n iterations");
      }
    }
  }
  result.value_after = ValueGeneral(g, instance);
  result.schedule = ToSyncSchedule(g, instance);
  result.general = std::move(g);
  return result;
}

GeneralSchedule ToGeneral(const SyncSchedule& schedule, const Instance& instance) {
  ValidateSchedule(schedule, instance);
  GeneralSchedule out;
  std::map<std::string, std::pair<int, Interval>> placed;
  for (std::size_t r = 0; r < schedule.sequences.size(); ++r) {
    const auto jobs = ResolveSequence(schedule.sequences[r], instance);
    const auto times = StartTimes(jobs);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      placed[jobs[i].id] = {static_cast<int>(r + 1), Interval{times[i], times[i + 1]}};
    }
  }
  for (const Job& job : instance.jobs()) {
    JobPlacement placement{job.id, std::nullopt, {}, job.p};
    if (auto it = placed.find(job.id); it != placed.end()) {
      placement.shared_processor = it->second.first;
      placement.shared_intervals = {it->second.second};
      placement.private_completion = it->second.second.end;
    }
    out.jobs.push_back(std::move(placement));
  }
  return out;
}

SyncSchedule ToSyncSchedule(const GeneralSchedule& schedule, const Instance& instance) {
  RequireValid(schedule, instance, "ToSyncSchedule");
  if (!IsSynchronized(schedule) || !IsIdleFree(schedule)) {
    throw PreconditionError("ToSyncSchedule: schedule is not synchronized and gap-free");
  }
  SyncSchedule out;
  for (int proc = 1; proc <= instance.m(); ++proc) {
    out.sequences.push_back(ProcessorSequence(schedule, proc));
  }
  return out;
}

GeneralSchedule ParseGeneralSchedule(std::string_view text) {
  const nlohmann::json doc = json_util::ParseDocument(text);
  if (!doc.is_object()) throw ParseError("general schedule: expected a JSON object");
  GeneralSchedule out;
  for (const auto& entry : json_util::GetArray(doc, "jobs")) {
    if (!entry.is_object()) throw ParseError("general schedule: job must be an object");
    JobPlacement placement;
    placement.id = json_util::GetString(entry, "id");
    const auto& proc = json_util::Get(entry, "shared_processor");
    if (!proc.is_null()) placement.shared_processor = json_util::GetInt(entry, "shared_processor");
    for (const auto& iv : json_util::GetArray(entry, "shared_intervals")) {
      if (!iv.is_array() || iv.size() != 2) {
        throw ParseError("job " + placement.id + ": intervals are [begin, end] pairs");
      }
      placement.shared_intervals.push_back(
          Interval{json_util::ToDyadic(iv[0], "job " + placement.id),
                   json_util::ToDyadic(iv[1], "job " + placement.id)});
    }
    placement.private_completion = json_util::GetDyadic(entry, "private_completion");
    out.jobs.push_back(std::move(placement));
  }
  return out;
}

std::string SerializeGeneralSchedule(const GeneralSchedule& schedule) {
  nlohmann::ordered_json doc;
  doc["jobs"] = nlohmann::ordered_json::array();
  for (const auto& job : schedule.jobs) {
    nlohmann::ordered_json entry;
    entry["id"] = job.id;
    entry["shared_processor"] =
        job.shared_processor ? nlohmann::ordered_json(*job.shared_processor) : nullptr;
    entry["shared_intervals"] = nlohmann::ordered_json::array();
    for (const auto& iv : job.shared_intervals) {
      entry["shared_intervals"].push_back({iv.begin.ToString(), iv.end.ToString()});
    }
    entry["private_completion"] = job.private_completion.ToString();
    doc["jobs"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace wsmp
