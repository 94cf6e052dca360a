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

#include <set>
#include <vector>

#include "doctest.h"
#include "test_support.h"
#include "wsmp/engine.h"
#include "wsmp/errors.h"
#include "wsmp/solvers.h"

namespace wsmp {
namespace {

using testing::MakeJobs;

Dyadic D(const char* s) { return Dyadic::Parse(s); }

Instance Unit(const std::vector<std::int64_t>& p, int m) {
  return Instance(MakeJobs(p, std::vector<std::int64_t>(p.size(), 1)), m);
}

TEST_CASE("positional weights") {
  const PositionalWeights pw = MakePositionalWeights(5, 2);
  CHECK(pw.levels == 3);
  CHECK(pw.last_level == 1);
  CHECK(pw.weights == std::vector<Dyadic>{D("1/2"), D("1/2"), D("1/4"), D("1/4"), D("1/8")});
  const PositionalWeights even = MakePositionalWeights(4, 2);
  CHECK(even.levels == 2);
  CHECK(even.last_level == 2);
  CHECK(even.weights.size() == 4);
  CHECK(MakePositionalWeights(0, 3).weights.empty());
  for (std::size_t n = 1; n < 20; ++n) {
    for (int m = 1; m < 5; ++m) {
      const auto w = MakePositionalWeights(n, m);
      CHECK(w.weights.size() == n);
      for (std::size_t i = 1; i < n; ++i) CHECK(w.weights[i] <= w.weights[i - 1]);
    }
  }
}

TEST_CASE("equal weights solver on the worked example") {
  const Instance inst(
      {{"a", 10, 1}, {"b", 9, 1}, {"c", 8, 1}, {"d", 7, 1}, {"e", 6, 1}}, 2);
  const SyncSchedule s = SolveEqualWeights(inst);
  CHECK(s.sequences == std::vector<std::vector<std::string>>{{"e", "c", "a"}, {"d", "b"}});
  CHECK(Evaluate(s, inst).total == Dyadic(14));
  CHECK(EqualWeightsValue({{6, 8, 10}, {7, 9}}) == Dyadic(14));
}

TEST_CASE("equal weights solver small cases") {
  CHECK(Evaluate(SolveEqualWeights(Unit({4}, 1)), Unit({4}, 1)).total == Dyadic(2));
  const Instance split = Unit({4, 8}, 2);
  CHECK(Evaluate(SolveEqualWeights(split), split).total == Dyadic(6));
  CHECK(BruteForce(split).value == Dyadic(6));
  CHECK(BruteForce(Unit({4, 8}, 1)).value == Dyadic(5));
  CHECK_THROWS_AS(SolveEqualWeights(Instance(MakeJobs({1, 2}), 1)), PreconditionError);
  const SyncSchedule empty = SolveEqualWeights(Instance({}, 3));
  CHECK(empty.sequences.size() == 3);
}

TEST_CASE("equal weights value") {
  CHECK(EqualWeightsValue({{7}}) == D("7/2"));
  CHECK_THROWS_AS(EqualWeightsValue({{2, 1}}), PreconditionError);
  CHECK(SingleProcessorAscending(MakeJobs({8, 4})) == Dyadic(5));
  CHECK(SingleProcessorAscending(MakeJobs({3})) == D("3/2"));
  CHECK(SingleProcessorAscending(MakeJobs({1, 1, 1})) == D("7/8"));
}

TEST_CASE("equal weights solver matches exhaustive search") {
  testing::Rng rng(12);
  for (int it = 0; it < 60; ++it) {
    const auto n = static_cast<std::size_t>(testing::Uniform(rng, 1, 6));
    const int m = static_cast<int>(testing::Uniform(rng, 1, 3));
    const Instance inst = testing::RandomInstance(rng, n, m, 30, 5, true);
    const SyncSchedule s = SolveEqualWeights(inst);
    const Dyadic value = Evaluate(s, inst).total;
    CHECK(value == testing::ReferenceOptimize(inst).value);

    // Value from the closed form agrees, after removing the common weight.
    std::vector<std::vector<Dyadic>> parts;
    std::size_t placed = 0;
    for (const auto& order : s.sequences) {
      parts.emplace_back();
      for (const auto& id : order) parts.back().push_back(inst.Find(id).p);
      placed += order.size();
    }
    CHECK(placed == n);
    CHECK(EqualWeightsValue(parts) * inst.job(0).w == value);
  }
}

TEST_CASE("the extra job may go to any processor") {
  testing::Rng rng(31);
  for (int it = 0; it < 40; ++it) {
    const int m = static_cast<int>(testing::Uniform(rng, 2, 3));
    const auto n = static_cast<std::size_t>(testing::Uniform(rng, 2, 8));
    std::vector<std::int64_t> p(n);
    for (auto& x : p) x = testing::Uniform(rng, 1, 40);
    std::sort(p.rbegin(), p.rend());
    const PositionalWeights pw = MakePositionalWeights(n, m);
    const auto mm = static_cast<std::size_t>(m);
    // Deal the first (k-1)m jobs round-robin and the rest to a rotated
    // choice of processors; the value is the same for every rotation.
    std::set<std::string> values;
    for (std::size_t shift = 0; shift < mm; ++shift) {
      std::vector<std::vector<Dyadic>> parts(mm);
      for (std::size_t i = 0; i < n; ++i) {
        const bool last = i >= (pw.levels - 1) * mm;
        parts[last ? (i + shift) % mm : i % mm].push_back(p[i]);
      }
      for (auto& part : parts) std::reverse(part.begin(), part.end());
      values.insert(EqualWeightsValue(parts).ToString());
    }
    CHECK(values.size() == 1);
  }
}

TEST_CASE("brute force on the three-job example") {
  const Instance inst({{"8", 8, 8}, {"9", 9, 9}, {"10", 10, 10}}, 1);
  const BruteForceResult r = BruteForce(inst);
  CHECK(r.value == D("293/4"));
  CHECK(r.schedule.sequences == std::vector<std::vector<std::string>>{{"9", "8", "10"}});
  const auto all = AllOptima(inst);
  REQUIRE(all.size() == 2);
  CHECK(all[0].sequences[0] == std::vector<std::string>{"9", "8", "10"});
  CHECK(all[1].sequences[0] == std::vector<std::string>{"10", "8", "9"});
}

TEST_CASE("brute force limits and edge cases") {
  const Instance nine = Unit({1, 2, 3, 4, 5, 6, 7, 8, 9}, 1);
  CHECK_THROWS_AS(BruteForce(nine), LimitError);
  SearchLimits wide;
  wide.max_jobs = 9;
  wide.max_candidates = 10;
  CHECK_THROWS_AS(BruteForce(nine, wide), LimitError);
  const BruteForceResult empty = BruteForce(Instance({}, 2));
  CHECK(empty.value == Dyadic(0));
  CHECK(empty.schedule.sequences.size() == 2);
}

TEST_CASE("brute force agrees with plain enumeration") {
  testing::Rng rng(77);
  for (int it = 0; it < 60; ++it) {
    const auto n = static_cast<std::size_t>(testing::Uniform(rng, 1, 5));
    const int m = static_cast<int>(testing::Uniform(rng, 1, 3));
    const Instance inst = testing::RandomInstance(rng, n, m, 12, 12);
    const BruteForceResult r = BruteForce(inst);
    const testing::ReferenceOptimum ref = testing::ReferenceOptimize(inst);
    CHECK(r.value == ref.value);
    CHECK(Evaluate(r.schedule, inst).total == r.value);

    std::set<std::vector<std::vector<std::string>>> mine, theirs;
    for (const auto& s : AllOptima(inst)) {
      CHECK(Evaluate(s, inst).total == r.value);
      mine.insert(testing::CanonicalLabels(s, inst).sequences);
    }
    for (const auto& s : ref.maximizers) {
      theirs.insert(testing::CanonicalLabels(s, inst).sequences);
    }
    CHECK(mine == theirs);
  }
}

TEST_CASE("brute force is deterministic") {
  testing::Rng rng(5);
  const Instance inst = testing::RandomInstance(rng, 7, 2, 20, 20);
  const BruteForceResult a = BruteForce(inst);
  const BruteForceResult b = BruteForce(inst);
  CHECK(a.schedule == b.schedule);
  CHECK(a.value == b.value);
  CHECK(a.candidates == b.candidates);
}

TEST_CASE("unit-weight optima run every job on a shared processor, shortest first") {
  testing::Rng rng(8);
  for (int it = 0; it < 40; ++it) {
    const auto n = static_cast<std::size_t>(testing::Uniform(rng, 1, 6));
    const int m = static_cast<int>(testing::Uniform(rng, 1, 3));
    const Instance inst = testing::RandomInstance(rng, n, m, 20, 1, true);
    for (const SyncSchedule& s : AllOptima(inst)) {
      std::size_t placed = 0;
      for (const auto& order : s.sequences) {
        placed += order.size();
        for (std::size_t i = 1; i < order.size(); ++i) {
          CHECK(inst.Find(order[i - 1]).p <= inst.Find(order[i]).p);
        }
      }
      CHECK(placed == n);
    }
  }
}

TEST_CASE("exchange heuristic") {
  const Instance spread = Unit({9, 7, 5, 3}, 1);
  CHECK_THROWS_AS(ImproveByExchanges({{{"j2", "j3", "j4"}}}, spread), InfeasibleError);

  const Instance clustered = Unit({103, 102, 101, 100}, 1);
  const SyncSchedule s{{{"j1", "j2", "j3", "j4"}}};
  const SyncSchedule out = ImproveByExchanges(s, clustered);
  CHECK(out.sequences[0] == std::vector<std::string>{"j4", "j3", "j2", "j1"});

  CHECK(ImproveByExchanges(out, clustered) == out);

  testing::Rng rng(91);
  for (int it = 0; it < 100; ++it) {
    const auto k = static_cast<std::size_t>(testing::Uniform(rng, 1, 7));
    const auto seq = testing::RandomFeasibleSequence(rng, k, 50);
    if (!IsFeasible(seq)) continue;
    const Instance one(seq, 1);
    SyncSchedule start{{{}}};
    for (const Job& j : seq) start.sequences[0].push_back(j.id);
    const SyncSchedule improved = ImproveByExchanges(start, one);
    CHECK_NOTHROW(ValidateSchedule(improved, one));
    CHECK(Evaluate(start, one).total <= Evaluate(improved, one).total);
  }
}

}  // namespace
}  // namespace wsmp
