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

#ifndef WSMP_INSTANCE_H_
#define WSMP_INSTANCE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wsmp/dyadic.h"

namespace wsmp {

struct Job {
  std::string id;
  Dyadic p;  // processing time
  Dyadic w;  // weight: payoff per unit of overlap

  friend bool operator==(const Job&, const Job&) = default;
};

// A set of jobs and the number of shared processors. Immutable once built;
// the constructor enforces unique ids, p > 0, w > 0 and m >= 1.
class Instance {
 public:
  Instance(std::vector<Job> jobs, int m);

  const std::vector<Job>& jobs() const { return jobs_; }
  int m() const { return m_; }
  std::size_t size() const { return jobs_.size(); }
  const Job& job(std::size_t index) const { return jobs_[index]; }

  std::optional<std::size_t> IndexOf(std::string_view id) const;
  // Throws ParseError for unknown ids.
  const Job& Find(std::string_view id) const;

  bool HasEqualWeights() const;

 private:
  std::vector<Job> jobs_;
  int m_;
  std::unordered_map<std::string, std::size_t> index_;
};

// {"m": <int>, "jobs": [{"id": <string>, "p": <dyadic>, "w": <dyadic>}, ...]}
Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& instance);

}  // namespace wsmp

#endif  // WSMP_INSTANCE_H_
