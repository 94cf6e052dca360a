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

#include "wsmp/solvers.h"

#include <algorithm>
#include <future>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "wsmp/errors.h"

namespace wsmp {

PositionalWeights MakePositionalWeights(std::size_t n, int m) {
  if (m < 1) throw PreconditionError("positional weights need m >= 1");
  PositionalWeights out;
  if (n == 0) return out;
  const std::size_t mm = static_cast<std::size_t>(m);
  out.levels = (n + mm - 1) / mm;
  out.last_level = n - (out.levels - 1) * mm;
  out.weights.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.weights.push_back(Dyadic::FromParts(1, static_cast<std::uint32_t>(i / mm + 1)));
  }
  return out;
}

SyncSchedule SolveEqualWeights(const Instance& instance) {
  if (!instance.HasEqualWeights()) {
    throw PreconditionError("equal-weights solver called on unequal weights");
  }
  const std::size_t m = static_cast<std::size_t>(instance.m());
  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), 0);
  const auto& jobs = instance.jobs();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (jobs[a].p != jobs[b].p) return jobs[a].p > jobs[b].p;
    return jobs[a].id < jobs[b].id;
  });

  std::vector<std::vector<std::size_t>> groups(m);
  for (std::size_t i = 0; i < order.size(); ++i) groups[i % m].push_back(order[i]);

  SyncSchedule out;
  out.sequences.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    auto& g = groups[r];
    std::sort(g.begin(), g.end(), [&](std::size_t a, std::size_t b) {
      if (jobs[a].p != jobs[b].p) return jobs[a].p < jobs[b].p;
      return jobs[a].id < jobs[b].id;
    });
    for (std::size_t j : g) out.sequences[r].push_back(jobs[j].id);
  }
  return out;
}

Dyadic EqualWeightsValue(const std::vector<std::vector<Dyadic>>& partition) {
  Dyadic total;
  for (const auto& list : partition) {
    Dyadic acc;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i > 0 && list[i] < list[i - 1]) {
        throw PreconditionError("processing times must be listed in ascending order");
      }
      // Horner: acc = (acc + p_i) / 2 yields sum p_i / 2^{k+1-i}.
      acc = (acc + list[i]).Halve();
    }
    total += acc;
  }
  return total;
}

Dyadic SingleProcessorAscending(std::span<const Job> jobs) {
  std::vector<Dyadic> p;
  p.reserve(jobs.size());
  for (const Job& j : jobs) p.push_back(j.p);
  std::sort(p.begin(), p.end());
  return EqualWeightsValue({p});
}

namespace {

using Seq = std::vector<std::uint8_t>;

struct SubsetTable {
  std::vector<std::optional<Dyadic>> best;
  std::vector<std::vector<Seq>> argmax;  // lexicographic order
  std::uint64_t visited = 0;
};

struct Search {
  const std::vector<Job>& jobs;
  bool keep_all;
  std::uint64_t budget;
  SubsetTable table;
  Seq seq;

  void Record(std::uint32_t mask, const Dyadic& value) {
    auto& slot = table.best[mask];
    if (!slot || *slot < value) {
      slot = value;
      table.argmax[mask].assign(1, seq);
    } else if (keep_all && *slot == value) {
      table.argmax[mask].push_back(seq);
    }
  }

  void Dfs(std::uint32_t mask, const Dyadic& start, const Dyadic& value) {
    if (++table.visited > budget) {
      throw LimitError("brute force exceeded the candidate limit");
    }
    Record(mask, value);
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      const std::uint32_t bit = 1u << j;
      if ((mask & bit) || !(jobs[j].p > start)) continue;
      seq.push_back(static_cast<std::uint8_t>(j));
      Dfs(mask | bit, (start + jobs[j].p).Halve(),
          value + (jobs[j].p - start).Halve() * jobs[j].w);
      seq.pop_back();
    }
  }
};

// Best value and maximizing orders for every subset of jobs on one shared
// processor. Each first job is explored on its own thread; merging in job
// order preserves lexicographic tie-breaking.
SubsetTable BuildTable(const std::vector<Job>& jobs, bool keep_all,
                       std::uint64_t budget) {
  const std::size_t n = jobs.size();
  const std::size_t full = std::size_t{1} << n;
  auto fresh = [&] {
    SubsetTable t;
    t.best.resize(full);
    t.argmax.resize(full);
    return t;
  };

  std::vector<std::future<SubsetTable>> parts;
  for (std::size_t j = 0; j < n; ++j) {
    parts.push_back(std::async(std::launch::async, [&, j] {
      Search s{jobs, keep_all, budget, fresh(), {}};
      s.seq.push_back(static_cast<std::uint8_t>(j));
      ++s.table.visited;
      s.Dfs(1u << j, jobs[j].p.Halve(), jobs[j].p.Halve() * jobs[j].w);
      return std::move(s.table);
    }));
  }

  SubsetTable out = fresh();
  out.best[0] = Dyadic();
  out.argmax[0].assign(1, Seq{});
  out.visited = 1;
  for (auto& f : parts) {
    SubsetTable part = f.get();
    out.visited += part.visited;
    for (std::size_t mask = 1; mask < full; ++mask) {
      if (!part.best[mask]) continue;
      auto& slot = out.best[mask];
      if (!slot || *slot < *part.best[mask]) {
        slot = part.best[mask];
        out.argmax[mask] = std::move(part.argmax[mask]);
      } else if (keep_all && *slot == *part.best[mask]) {
        auto& dst = out.argmax[mask];
        for (auto& s : part.argmax[mask]) dst.push_back(std::move(s));
      }
    }
  }
  if (out.visited > budget) {
    throw LimitError("brute force exceeded the candidate limit");
  }
  return out;
}

// Restricted-growth labelling: 0 = private only, otherwise the shared
// processor, with processor r+1 used only after processor r.
template <typename Visit>
void EnumerateAssignments(std::size_t n, std::size_t m, Visit&& visit) {
  std::vector<std::size_t> labels(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
    if (pos == n) {
      visit(labels, used);
      return;
    }
    const std::size_t top = std::min(used + 1, m);
    for (std::size_t l = 0; l <= top; ++l) {
      labels[pos] = l;
      self(self, pos + 1, std::max(used, l));
    }
  };
  rec(rec, 0, 0);
}

std::vector<std::uint32_t> Masks(const std::vector<std::size_t>& labels,
                                 std::size_t used) {
  std::vector<std::uint32_t> masks(used, 0);
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j] > 0) masks[labels[j] - 1] |= 1u << j;
  }
  return masks;
}

void CheckSize(const Instance& instance, const SearchLimits& limits) {
  if (instance.size() > limits.max_jobs || instance.size() > 20) {
    throw LimitError("brute force limited to " + std::to_string(limits.max_jobs) +
                     " jobs, instance has " + std::to_string(instance.size()));
  }
}

std::vector<std::string> Ids(const std::vector<Job>& jobs, const Seq& seq) {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (std::uint8_t j : seq) out.push_back(jobs[j].id);
  return out;
}

}  // namespace

BruteForceResult BruteForce(const Instance& instance, const SearchLimits& limits) {
  CheckSize(instance, limits);
  const auto& jobs = instance.jobs();
  const SubsetTable table = BuildTable(jobs, false, limits.max_candidates);
  const std::size_t m = static_cast<std::size_t>(instance.m());

  std::optional<Dyadic> best;
  std::vector<std::uint32_t> best_masks;
  EnumerateAssignments(jobs.size(), m, [&](const auto& labels, std::size_t used) {
    const auto masks = Masks(labels, used);
    Dyadic total;
    for (std::uint32_t mask : masks) {
      if (!table.best[mask]) return;
      total += *table.best[mask];
    }
    if (!best || *best < total) {
      best = total;
      best_masks = masks;
    }
  });

  BruteForceResult out;
  out.value = *best;
  out.candidates = table.visited;
  out.schedule.sequences.resize(m);
  for (std::size_t r = 0; r < best_masks.size(); ++r) {
    out.schedule.sequences[r] = Ids(jobs, table.argmax[best_masks[r]].front());
  }
  return out;
}

std::vector<SyncSchedule> AllOptima(const Instance& instance, const SearchLimits& limits) {
  CheckSize(instance, limits);
  const auto& jobs = instance.jobs();
  const SubsetTable table = BuildTable(jobs, true, limits.max_candidates);
  const std::size_t m = static_cast<std::size_t>(instance.m());

  std::optional<Dyadic> best;
  std::vector<std::vector<std::uint32_t>> winners;
  EnumerateAssignments(jobs.size(), m, [&](const auto& labels, std::size_t used) {
    auto masks = Masks(labels, used);
    Dyadic total;
    for (std::uint32_t mask : masks) {
      if (!table.best[mask]) return;
      total += *table.best[mask];
    }
    if (!best || *best < total) {
      best = total;
      winners.clear();
    }
    if (*best == total) winners.push_back(std::move(masks));
  });

  std::vector<SyncSchedule> out;
  for (const auto& masks : winners) {
    // Cartesian product of the maximizing orders per processor.
    std::vector<std::size_t> pick(masks.size(), 0);
    bool done = false;
    while (!done) {
      SyncSchedule s;
      s.sequences.resize(m);
      for (std::size_t r = 0; r < masks.size(); ++r) {
        s.sequences[r] = Ids(jobs, table.argmax[masks[r]][pick[r]]);
      }
      out.push_back(std::move(s));
      done = true;
      for (std::size_t r = masks.size(); r-- > 0;) {
        if (++pick[r] < table.argmax[masks[r]].size()) {
          done = false;
          break;
        }
        pick[r] = 0;
      }
    }
  }
  return out;
}

SyncSchedule ImproveByExchanges(const SyncSchedule& schedule, const Instance& instance) {
  ValidateSchedule(schedule, instance);
  SyncSchedule out = schedule;
  for (auto& order : out.sequences) {
    std::vector<Job> seq = ResolveSequence(order, instance);
    Dyadic value = EvaluateSequence(seq);
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 1; i < seq.size(); ++i) {
        std::vector<Job> next = SwapAdjacent(seq, i);
        if (!IsFeasible(next)) continue;
        Dyadic v = EvaluateSequence(next);
        if (value < v) {
          seq = std::move(next);
          value = v;
          improved = true;
          break;
        }
      }
    }
    order.clear();
    for (const Job& j : seq) order.push_back(j.id);
  }
  return out;
}

}  // namespace wsmp
