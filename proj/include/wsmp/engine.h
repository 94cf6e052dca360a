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

// Synchronized schedules.
//
// In a synchronized schedule every job that uses a shared processor finishes
// there at the same instant as on its private processor. The schedule on one
// shared processor is then fixed by the job order alone: the i-th job runs on
// the shared processor in (T_i, T_{i+1}) with
//
//   T_1 = 0,   T_{i+1} = (T_i + p_i) / 2,
//
// and overlaps its private execution for t_i = (p_i - T_i) / 2 time units.
// Positions in this header are 1-based, matching that numbering.

#ifndef WSMP_ENGINE_H_
#define WSMP_ENGINE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsmp/dyadic.h"
#include "wsmp/instance.h"

namespace wsmp {

// One ordered job-id list per shared processor. Jobs not listed run on their
// private processor only.
struct SyncSchedule {
  std::vector<std::vector<std::string>> sequences;

  friend bool operator==(const SyncSchedule&, const SyncSchedule&) = default;
};

struct ProcessorReport {
  std::vector<std::string> order;
  std::vector<Dyadic> start_times;  // T_1..T_{k+1}
  std::vector<Dyadic> overlaps;     // t_1..t_k
  Dyadic value;
};

struct EvalReport {
  std::vector<ProcessorReport> processors;
  Dyadic total;
};

// Looks up the jobs of one processor sequence. Throws ParseError on
// unknown ids.
std::vector<Job> ResolveSequence(const std::vector<std::string>& order,
                                 const Instance& instance);

std::vector<Dyadic> StartTimes(std::span<const Job> sequence);

// Position (1-based) of the first job with p_i <= T_i, if any.
std::optional<std::size_t> FirstInfeasiblePosition(std::span<const Job> sequence);
inline bool IsFeasible(std::span<const Job> sequence) {
  return !FirstInfeasiblePosition(sequence).has_value();
}

// Total weighted overlap of one processor sequence via the start-time
// recurrence. Throws InfeasibleError (processor 0) on infeasible input.
Dyadic EvaluateSequence(std::span<const Job> sequence);

// Checks ids (known, used at most once, m sequences) and feasibility, then
// evaluates every processor.
EvalReport Evaluate(const SyncSchedule& schedule, const Instance& instance);

// Structural validation without evaluation; throws like Evaluate.
void ValidateSchedule(const SyncSchedule& schedule, const Instance& instance);

// --- Matrix form -----------------------------------------------------------

// Dense row-major k x k matrix.
struct Matrix {
  std::size_t size = 0;
  std::vector<Dyadic> entries;

  const Dyadic& at(std::size_t row, std::size_t col) const {
    return entries[row * size + col];
  }
};

// L_k[r][c] = 2^-(r-c) below the diagonal, zero elsewhere; U_k = L_k^T.
Matrix LowerHalvingMatrix(std::size_t k);
Matrix UpperHalvingMatrix(std::size_t k);

// row * matrix * column^T
Dyadic BilinearForm(std::span<const Dyadic> row, const Matrix& matrix,
                    std::span<const Dyadic> column);

// 1/2 P I W^T - 1/2 W L P^T. Pure formula; feasibility is not checked.
Dyadic EvaluateMatrix(std::span<const Job> sequence);
// 1/2 W I P^T - 1/2 P U W^T, the transposed (dual) form of the above.
Dyadic EvaluateMatrixDual(std::span<const Job> sequence);

// --- Exchanges and structure -----------------------------------------------

// W_i = sum_{l=i+2}^{k} w_l / 2^{l-i-1}, defined for -1 <= i <= k-2.
// Throws PreconditionError outside that range.
Dyadic SuffixWeight(std::span<const Job> sequence, int i);

// value(sequence) - value(sequence with positions i and i+1 swapped) for a
// processing-time-inclusive job set, in closed form:
//
//   (w_{i+1} - w_i) T_i / 4 + (p_i - p_{i+1}) W_i / 4
//       + w_i p_{i+1} / 4 - w_{i+1} p_i / 4.
//
// Throws PreconditionError for i outside 1..k-1 or a non-inclusive set.
Dyadic ExchangeDelta(std::span<const Job> sequence, std::size_t i);

std::vector<Job> SwapAdjacent(std::span<const Job> sequence, std::size_t i);

// Sorted ascending v_1 <= ... <= v_k: sum_{l=1}^{k-1} v_{l+1} / 2^{k-l} < v_1.
// Empty and singleton sets are inclusive.
bool IsInclusive(std::vector<Dyadic> values);
bool IsProcessingTimeInclusive(std::span<const Job> jobs);
bool IsWeightInclusive(std::span<const Job> jobs);

// Processing times non-increasing, then non-decreasing (ties allowed).
bool IsVShaped(std::span<const Job> sequence);
// 1-based position of the first job that breaks the V shape, if any.
std::optional<std::size_t> VShapeViolation(std::span<const Job> sequence);

// Reverses the order and swaps p with w for every job. Requires the set to
// be both processing-time- and weight-inclusive (PreconditionError
// otherwise); under that hypothesis the value is preserved.
std::vector<Job> ReverseDual(std::span<const Job> sequence);

// --- JSON ------------------------------------------------------------------

// {"processors": [{"id": <int>, "order": [<job-id>, ...]}, ...]}
// Processor ids are 1..m; processors may be listed in any order and missing
// ones are empty. `m` sizes the result.
SyncSchedule ParseSyncSchedule(std::string_view text, int m);
std::string SerializeSyncSchedule(const SyncSchedule& schedule);

}  // namespace wsmp

#endif  // WSMP_ENGINE_H_
