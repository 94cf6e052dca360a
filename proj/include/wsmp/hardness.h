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

#ifndef WSMP_HARDNESS_H_
#define WSMP_HARDNESS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsmp/dyadic.h"
#include "wsmp/engine.h"
#include "wsmp/instance.h"

namespace wsmp {

// Numerical 3-dimensional matching: can X, Y, Z be split into n triples
// (one element of each) that all sum to b?
struct N3dmInput {
  std::vector<std::int64_t> x, y, z;
  std::int64_t b = 0;
};

// Rejects unequal or empty multisets, negative entries and entries above
// 10^12 (keeps every derived quantity far from int64 overflow).
void ValidateN3dm(const N3dmInput& input);

// {"X":[...],"Y":[...],"Z":[...],"b":<int>}
N3dmInput ParseN3dm(std::string_view text);

struct HardnessParams {
  std::int64_t m_param = 0;  // m > max{b, 6}
  std::int64_t big_m = 0;    // M > 7(m^2 + b)
};

// Smallest integers satisfying the two constraints.
HardnessParams BuildParams(const N3dmInput& input);

enum class JobClass { kA, kB, kC };

struct Provenance {
  std::string id;
  JobClass job_class;
  std::size_t source = 0;  // 0-based index into X, Y or Z
};

// Jobs A1..An (time 2(M+m+x_i)), B1..Bn (2M+y_i), C1..Cn (2(M+m^2+z_i)),
// all with w = p, on n shared processors.
struct HardInstance {
  Instance instance;
  N3dmInput input;
  HardnessParams params;
  std::int64_t k_const = 0;  // K = 4M + m + m^2 + b
  std::vector<Provenance> provenance;

  std::size_t n() const { return input.x.size(); }
  // Half of the A and C times, the B time itself.
  std::int64_t a(std::size_t i) const;
  std::int64_t b(std::size_t j) const;
  std::int64_t c(std::size_t k) const;
};

HardInstance GenerateInstance(const N3dmInput& input);

char JobClassLetter(JobClass c);
std::string SerializeProvenance(const HardInstance& hi);

// h(delta) = sum_l (15/8 a_l^2 + 3/8 b_l^2 + 15/8 c_l^2) - 1/4 sum_l (K - delta_l)^2
// in its reference form; a_l, b_l, c_l are taken from the identity matching.
Dyadic HValue(std::span<const std::int64_t> deltas, const HardInstance& hi);

// Same decomposition with the constants that reproduce direct evaluation:
// per processor 9/4 a^2 + 3/4 b^2 + 9/4 c^2 - 1/4 (a+b+c)^2.
Dyadic HValueDerived(std::span<const std::int64_t> deltas, const HardInstance& hi);

// A matching assigns triple l = (A-index, B-index, C-index), 0-based.
struct Triple {
  std::size_t a = 0, b = 0, c = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

SyncSchedule EquitableSchedule(std::span<const Triple> matching, const HardInstance& hi);
bool IsEquitable(const SyncSchedule& schedule, const HardInstance& hi);

// b - (x + y + z) for the triple on processor l (0-based). Throws
// PreconditionError unless the schedule is equitable.
std::int64_t ProcessorDelta(const SyncSchedule& schedule, const HardInstance& hi,
                            std::size_t l);

// Direct evaluation of an equitable schedule next to both closed forms at
// its deltas. `derived` equals `direct`; `reference` differs from both by a
// constant that depends on the instance only.
struct HCheck {
  std::vector<std::int64_t> deltas;
  Dyadic direct;
  Dyadic reference;
  Dyadic derived;
};

HCheck CrossCheckH(const SyncSchedule& schedule, const HardInstance& hi);

struct Decision {
  bool solvable = false;
  std::vector<Triple> witness;  // empty when unsolvable
  Dyadic best_equitable_value;  // maximum over all equitable schedules
  std::size_t matchings = 0;    // n! * n!
};

// Enumerates every equitable schedule; solvable iff one has all deltas zero.
// Throws LimitError for n > max_n.
Decision Decide(const N3dmInput& input, std::size_t max_n = 4);

}  // namespace wsmp

#endif  // WSMP_HARDNESS_H_
