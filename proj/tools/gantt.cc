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

#include "gantt.h"

#include <algorithm>
#include <sstream>
#include <vector>

#include "wsmp/errors.h"

namespace wsmp {
namespace {

constexpr char kSymbols[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

char Symbol(std::size_t index) { return kSymbols[index % (sizeof(kSymbols) - 1)]; }

struct Bar {
  Dyadic begin, end;
  char symbol;
};

std::size_t Column(const Dyadic& t, int width, const Dyadic& span) {
  return static_cast<std::size_t>(t.FloorScaled(width, span));
}

std::string Cells(const std::vector<Bar>& bars, int width, const Dyadic& span) {
  std::string row(static_cast<std::size_t>(width), ' ');
  for (const Bar& bar : bars) {
    std::size_t lo = Column(bar.begin, width, span);
    std::size_t hi = Column(bar.end, width, span);
    // Keep short intervals visible.
    if (hi <= lo) hi = lo + 1;
    hi = std::min(hi, row.size());
    lo = std::min(lo, hi == 0 ? 0 : hi - 1);
    for (std::size_t c = lo; c < hi; ++c) row[c] = bar.symbol;
  }
  return row;
}

}  // namespace

std::string RenderGantt(const SyncSchedule& schedule, const Instance& instance,
                        int width) {
  if (width < 1) throw PreconditionError("gantt width must be positive");
  ValidateSchedule(schedule, instance);

  // Private completion of every job: T_{i+1} when shared, p otherwise.
  std::vector<Dyadic> completion;
  for (const Job& j : instance.jobs()) completion.push_back(j.p);
  std::vector<std::vector<Bar>> shared(schedule.sequences.size());
  for (std::size_t r = 0; r < schedule.sequences.size(); ++r) {
    const auto jobs = ResolveSequence(schedule.sequences[r], instance);
    const auto starts = StartTimes(jobs);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      const std::size_t idx = *instance.IndexOf(jobs[i].id);
      completion[idx] = starts[i + 1];
      shared[r].push_back(Bar{starts[i], starts[i + 1], Symbol(idx)});
    }
  }

  Dyadic span;
  for (const Dyadic& c : completion) span = Max(span, c);

  std::vector<std::string> labels;
  for (std::size_t r = 0; r < shared.size(); ++r) labels.push_back("M" + std::to_string(r + 1));
  for (const Job& j : instance.jobs()) labels.push_back("P " + j.id);
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  auto label = [&](std::size_t row) {
    std::string l = labels[row];
    l.resize(label_width, ' ');
    return l;
  };

  std::ostringstream os;
  os << "span 0.." << span << "  width " << width << "\n";
  if (span.is_zero()) return os.str();

  for (std::size_t r = 0; r < shared.size(); ++r) {
    os << label(r) << " |" << Cells(shared[r], width, span) << "|";
    for (const Bar& b : shared[r]) os << ' ' << b.symbol << ":(" << b.begin << ',' << b.end << ')';
    os << "\n";
  }
  for (std::size_t j = 0; j < instance.size(); ++j) {
    const Bar bar{Dyadic(), completion[j], Symbol(j)};
    os << label(shared.size() + j) << " |" << Cells({bar}, width, span) << "| "
       << bar.symbol << ":(0," << bar.end << ")\n";
  }
  return os.str();
}

}  // namespace wsmp
