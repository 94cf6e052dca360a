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

#include "wsmp/instance.h"

#include <utility>

#include "json.hpp"
#include "wsmp/errors.h"
#include "wsmp/json_util.h"

namespace wsmp {

Instance::Instance(std::vector<Job> jobs, int m) : jobs_(std::move(jobs)), m_(m) {
  if (m_ < 1) throw ParseError("m < 1");
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    const Job& job = jobs_[i];
    if (job.p.sign() <= 0) throw ParseError("job " + job.id + ": p <= 0");
    if (job.w.sign() <= 0) throw ParseError("job " + job.id + ": w <= 0");
    if (!index_.emplace(job.id, i).second) {
      throw ParseError("duplicate job id " + job.id);
    }
  }
}

std::optional<std::size_t> Instance::IndexOf(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Job& Instance::Find(std::string_view id) const {
  auto index = IndexOf(id);
  if (!index) throw ParseError("unknown job id " + std::string(id));
  return jobs_[*index];
}

bool Instance::HasEqualWeights() const {
  for (const Job& job : jobs_) {
    if (job.w != jobs_.front().w) return false;
  }
  return true;
}

Instance ParseInstance(std::string_view text) {
  const nlohmann::json doc = json_util::ParseDocument(text);
  if (!doc.is_object()) throw ParseError("instance: expected a JSON object");
  const int m = json_util::GetInt(doc, "m");
  const auto& jobs_json = json_util::GetArray(doc, "jobs");
  std::vector<Job> jobs;
  jobs.reserve(jobs_json.size());
  for (const auto& entry : jobs_json) {
    if (!entry.is_object()) throw ParseError("instance: job must be an object");
    jobs.push_back(Job{json_util::GetString(entry, "id"),
                       json_util::GetDyadic(entry, "p"),
                       json_util::GetDyadic(entry, "w")});
  }
  return Instance(std::move(jobs), m);
}

std::string SerializeInstance(const Instance& instance) {
  nlohmann::ordered_json doc;
  doc["m"] = instance.m();
  doc["jobs"] = nlohmann::ordered_json::array();
  for (const Job& job : instance.jobs()) {
    doc["jobs"].push_back(
        {{"id", job.id}, {"p", job.p.ToString()}, {"w", job.w.ToString()}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace wsmp
