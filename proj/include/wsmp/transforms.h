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

// Interval-level schedules and their canonicalization into synchronized form.
//
// A general schedule gives every job a private interval (0, C^P), an optional
// shared processor, and a set of open, disjoint intervals on it. The
// transformations below are each value-preserving or value-increasing and
// each establishes one structural property:
//
//   Normalize         C^M <= C^P for every job.
//   CompactIdle       no idle time on a shared processor before its last
//                     completion.
//   MergePreemptions  one shared interval per job.
//   Reorder           shared completion order agrees with private completion
//                     order on every processor.
//   Synchronize       all of the above, then push/pull moves until every
//                     shared job completes on both processors together.
//
// Pull and Push are the elementary moves of the last step and are exposed
// for experimentation. All functions are pure.

#ifndef WSMP_TRANSFORMS_H_
#define WSMP_TRANSFORMS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsmp/dyadic.h"
#include "wsmp/engine.h"
#include "wsmp/instance.h"

namespace wsmp {

// Open interval (begin, end).
struct Interval {
  Dyadic begin;
  Dyadic end;

  Dyadic length() const { return end - begin; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct JobPlacement {
  std::string id;
  std::optional<int> shared_processor;  // 1..m
  std::vector<Interval> shared_intervals;
  Dyadic private_completion;  // private execution in (0, private_completion)

  // Completion / start on the shared processor; zero without shared work.
  Dyadic SharedCompletion() const;
  Dyadic SharedStart() const;
  Dyadic SharedLength() const;
  bool UsesShared() const { return !shared_intervals.empty(); }

  friend bool operator==(const JobPlacement&, const JobPlacement&) = default;
};

struct GeneralSchedule {
  std::vector<JobPlacement> jobs;

  const JobPlacement* Find(std::string_view id) const;
  friend bool operator==(const GeneralSchedule&, const GeneralSchedule&) = default;
};

struct Violation {
  std::string job;                // empty when not job-specific
  std::optional<int> processor;
  std::string message;
};

// Every feasibility problem of `schedule` for `instance`; empty when valid.
std::vector<Violation> Validate(const GeneralSchedule& schedule,
                                const Instance& instance);

// Sum over jobs of w_j times the measure of (shared intervals) ∩ (0, C^P).
// Throws PreconditionError on invalid schedules.
Dyadic ValueGeneral(const GeneralSchedule& schedule, const Instance& instance);

// Structural predicates. All assume a valid schedule.
bool IsNormal(const GeneralSchedule& schedule);
bool IsNonPreemptive(const GeneralSchedule& schedule);
bool IsIdleFree(const GeneralSchedule& schedule);
// Normal, non-preemptive, and no adjacent pair on a processor with
// C^M_a < C^M_b but C^P_a > C^P_b.
bool IsOrdered(const GeneralSchedule& schedule);
// Normal, non-preemptive, and C^M = C^P for every job with shared work.
bool IsSynchronized(const GeneralSchedule& schedule);

// Jobs with shared work on `processor`, sorted by shared start time.
std::vector<std::string> ProcessorSequence(const GeneralSchedule& schedule,
                                           int processor);

GeneralSchedule Normalize(const GeneralSchedule& schedule, const Instance& instance);
GeneralSchedule CompactIdle(const GeneralSchedule& schedule, const Instance& instance);
GeneralSchedule MergePreemptions(const GeneralSchedule& schedule,
                                 const Instance& instance);
GeneralSchedule Reorder(const GeneralSchedule& schedule, const Instance& instance);

// Pulling j_i by epsilon on `processor` (positions 1-based in the processor
// sequence). Requires an ordered schedule, 2 <= i <= k, j_{i-1}..j_k
// back-to-back, C^M = C^P for j_i..j_k, and 0 < epsilon <= |j_{i-1}|.
// j_{i-1} gives up epsilon of shared time and j_l (l >= i) gains
// epsilon / 2^{l-i+1}.
GeneralSchedule Pull(const GeneralSchedule& schedule, const Instance& instance,
                     int processor, std::size_t i, const Dyadic& epsilon);

// Pushing j_i by epsilon, the inverse move. Requires a normal,
// non-preemptive schedule, 2 <= i <= k + 1, j_{i-1}..j_k back-to-back,
// C^M = C^P for j_i..j_k, 0 < epsilon <= (C^P - C^M)/2 of j_{i-1}, and
// epsilon / 2^{l-i+1} <= |j_l| for l >= i. Jobs whose shared interval
// shrinks to nothing end up private-only.
GeneralSchedule Push(const GeneralSchedule& schedule, const Instance& instance,
                     int processor, std::size_t i, const Dyadic& epsilon);

// Value change predicted for Pull; Push changes the value by the negation.
Dyadic PullDelta(const GeneralSchedule& schedule, const Instance& instance,
                 int processor, std::size_t i, const Dyadic& epsilon);

struct SyncResult {
  SyncSchedule schedule;
  GeneralSchedule general;  // the synchronized interval-level schedule
  Dyadic value_before;
  Dyadic value_after;
  std::size_t push_iterations = 0;
};

// Full pipeline. The result's value is never below the input's.
SyncResult Synchronize(const GeneralSchedule& schedule, const Instance& instance);

// Interval-level form of a feasible synchronized schedule.
GeneralSchedule ToGeneral(const SyncSchedule& schedule, const Instance& instance);
// Inverse of ToGeneral. Requires a synchronized schedule whose processors are
// busy from time 0 without gaps.
SyncSchedule ToSyncSchedule(const GeneralSchedule& schedule, const Instance& instance);

// {"jobs": [{"id": ..., "shared_processor": <int|null>,
//            "shared_intervals": [["a","b"], ...],
//            "private_completion": <dyadic>}]}
GeneralSchedule ParseGeneralSchedule(std::string_view text);
std::string SerializeGeneralSchedule(const GeneralSchedule& schedule);

}  // namespace wsmp

#endif  // WSMP_TRANSFORMS_H_
