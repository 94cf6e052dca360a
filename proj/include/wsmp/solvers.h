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

#ifndef WSMP_SOLVERS_H_
#define WSMP_SOLVERS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wsmp/dyadic.h"
#include "wsmp/engine.h"
#include "wsmp/instance.h"

namespace wsmp {

// m copies each of 1/2, 1/4, ..., 1/2^{k-1}, then `last_level` copies of
// 1/2^k, where k = ceil(n/m) and last_level = n - (k-1)m. Exactly n entries,
// non-increasing.
struct PositionalWeights {
  std::size_t levels = 0;      // k
  std::size_t last_level = 0;  // copies of 1/2^k
  std::vector<Dyadic> weights;
};

PositionalWeights MakePositionalWeights(std::size_t n, int m);

// Optimal schedule when all weights are equal, in O(n log n): the i-th
// longest job is matched with the i-th positional weight and dealt to
// processor ((i-1) mod m) + 1; every processor runs its jobs shortest first.
// Throws PreconditionError on unequal weights.
SyncSchedule SolveEqualWeights(const Instance& instance);

// sum over lists of sum_i p_i / 2^{|list|+1-i}, lists ascending. This is the
// unit-weight value of the corresponding schedule. Throws
// PreconditionError on a descending pair.
Dyadic EqualWeightsValue(const std::vector<std::vector<Dyadic>>& partition);

// p_n/2 + p_{n-1}/4 + ... + p_1/2^n over the processing times sorted
// ascending; the optimal single-processor value for unit weights.
Dyadic SingleProcessorAscending(std::span<const Job> jobs);

struct SearchLimits {
  std::size_t max_jobs = 8;
  // Bound on the number of job sequences the search may visit.
  std::uint64_t max_candidates = 50'000'000;
};

struct BruteForceResult {
  SyncSchedule schedule;
  Dyadic value;
  std::uint64_t candidates = 0;
};

// Exact optimum over every assignment of jobs to {private only, M_1..M_m}
// and every order on each shared processor. Infeasible orders are skipped.
// Ties go to the lexicographically smallest assignment vector (job order,
// 0 = private only, processors labelled 1..m), then to the lexicographically
// smallest job order on each processor. Throws LimitError beyond `limits`.
BruteForceResult BruteForce(const Instance& instance, const SearchLimits& limits = {});

// Every maximizer, with shared processors labelled in order of first use
// (schedules that differ only by a relabelling of processors appear once).
std::vector<SyncSchedule> AllOptima(const Instance& instance,
                                    const SearchLimits& limits = {});

// Adjacent-exchange local search: applies any swap of neighbours on a
// processor that strictly increases the recomputed value until none is left.
SyncSchedule ImproveByExchanges(const SyncSchedule& schedule, const Instance& instance);

}  // namespace wsmp

#endif  // WSMP_SOLVERS_H_
