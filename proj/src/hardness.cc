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

#include "wsmp/hardness.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "wsmp/errors.h"
#include "wsmp/json_util.h"
#include "json.hpp"

namespace wsmp {
namespace {

constexpr std::int64_t kMaxEntry = 1'000'000'000'000;

std::vector<std::int64_t> ReadMultiset(const nlohmann::json& doc, const char* key) {
  const auto& arr = json_util::GetArray(doc, key);
  std::vector<std::int64_t> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string("N3DM: ") + key + " entries must be integers");
    }
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

Dyadic Square(std::int64_t v) {
  Dyadic d(v);
  return d * d;
}

// Sum over processors of q(a_l, b_l, c_l) with the identity matching; both
// closed forms only depend on the multisets.
Dyadic ConstantPart(const HardInstance& hi, const Dyadic& ca, const Dyadic& cb,
                    const Dyadic& cc) {
  Dyadic total;
  for (std::size_t l = 0; l < hi.n(); ++l) {
    total += ca * Square(hi.a(l)) + cb * Square(hi.b(l)) + cc * Square(hi.c(l));
  }
  return total;
}

Dyadic DeltaPart(std::span<const std::int64_t> deltas, const HardInstance& hi) {
  if (deltas.size() != hi.n()) {
    throw PreconditionError("h: expected " + std::to_string(hi.n()) + " deltas, got " +
                            std::to_string(deltas.size()));
  }
  Dyadic total;
  for (std::int64_t d : deltas) total += Square(hi.k_const - d);
  return total.Shift(-2);
}

Dyadic Fraction(std::int64_t num, std::uint32_t exp) {
  return Dyadic::FromParts(num, exp);
}

}  // namespace

void ValidateN3dm(const N3dmInput& input) {
  const std::size_t n = input.x.size();
  if (n == 0) throw ParseError("N3DM: multisets must be non-empty");
  if (input.y.size() != n || input.z.size() != n) {
    throw ParseError("N3DM: X, Y and Z must have equal size");
  }
  for (const auto* set : {&input.x, &input.y, &input.z}) {
    for (std::int64_t v : *set) {
      if (v < 0) throw ParseError("N3DM: entries must be non-negative");
      if (v > kMaxEntry) throw ParseError("N3DM: entry too large");
    }
  }
  if (input.b < 0 || input.b > 1'000'000) {
    throw ParseError("N3DM: b must lie in [0, 10^6]");
  }
}

N3dmInput ParseN3dm(std::string_view text) {
  const nlohmann::json doc = json_util::ParseDocument(text);
  if (!doc.is_object()) throw ParseError("N3DM: expected a JSON object");
  N3dmInput in;
  in.x = ReadMultiset(doc, "X");
  in.y = ReadMultiset(doc, "Y");
  in.z = ReadMultiset(doc, "Z");
  const auto& b = json_util::Get(doc, "b");
  if (!b.is_number_integer()) throw ParseError("N3DM: b must be an integer");
  in.b = b.get<std::int64_t>();
  ValidateN3dm(in);
  return in;
}

HardnessParams BuildParams(const N3dmInput& input) {
  HardnessParams p;
  p.m_param = std::max<std::int64_t>(input.b, 6) + 1;
  p.big_m = 7 * (p.m_param * p.m_param + input.b) + 1;
  return p;
}

std::int64_t HardInstance::a(std::size_t i) const {
  return params.big_m + params.m_param + input.x[i];
}
std::int64_t HardInstance::b(std::size_t j) const { return 2 * params.big_m + input.y[j]; }
std::int64_t HardInstance::c(std::size_t k) const {
  return params.big_m + params.m_param * params.m_param + input.z[k];
}

HardInstance GenerateInstance(const N3dmInput& input) {
  ValidateN3dm(input);
  const HardnessParams params = BuildParams(input);
  const std::size_t n = input.x.size();

  HardInstance hi{Instance({}, static_cast<int>(n)), input, params, 0, {}};
  hi.k_const = 4 * params.big_m + params.m_param + params.m_param * params.m_param + input.b;

  std::vector<Job> jobs;
  auto add = [&](JobClass cls, std::size_t i, std::int64_t time) {
    std::string id = std::string(1, JobClassLetter(cls)) + std::to_string(i + 1);
    jobs.push_back(Job{id, Dyadic(time), Dyadic(time)});
    hi.provenance.push_back(Provenance{id, cls, i});
  };
  for (std::size_t i = 0; i < n; ++i) add(JobClass::kA, i, 2 * hi.a(i));
  for (std::size_t j = 0; j < n; ++j) add(JobClass::kB, j, hi.b(j));
  for (std::size_t k = 0; k < n; ++k) add(JobClass::kC, k, 2 * hi.c(k));
  hi.instance = Instance(std::move(jobs), static_cast<int>(n));
  return hi;
}

char JobClassLetter(JobClass c) {
  switch (c) {
    case JobClass::kA: return 'A';
    case JobClass::kB: return 'B';
    case JobClass::kC: return 'C';
  }
  return '?';
}

std::string SerializeProvenance(const HardInstance& hi) {
  nlohmann::ordered_json doc;
  doc["b"] = hi.input.b;
  doc["m_param"] = hi.params.m_param;
  doc["M"] = hi.params.big_m;
  doc["K"] = hi.k_const;
  auto jobs = nlohmann::ordered_json::array();
  for (const Provenance& p : hi.provenance) {
    nlohmann::ordered_json j;
    j["id"] = p.id;
    j["set"] = std::string(1, JobClassLetter(p.job_class));
    j["source"] = p.source + 1;
    jobs.push_back(std::move(j));
  }
  doc["jobs"] = std::move(jobs);
  return doc.dump(2) + "\n";
}

Dyadic HValue(std::span<const std::int64_t> deltas, const HardInstance& hi) {
  const Dyadic quad = DeltaPart(deltas, hi);
  return ConstantPart(hi, Fraction(15, 3), Fraction(3, 3), Fraction(15, 3)) - quad;
}

Dyadic HValueDerived(std::span<const std::int64_t> deltas, const HardInstance& hi) {
  const Dyadic quad = DeltaPart(deltas, hi);
  return ConstantPart(hi, Fraction(9, 2), Fraction(3, 2), Fraction(9, 2)) - quad;
}

SyncSchedule EquitableSchedule(std::span<const Triple> matching, const HardInstance& hi) {
  const std::size_t n = hi.n();
  if (matching.size() != n) {
    throw PreconditionError("matching must contain exactly n triples");
  }
  std::vector<bool> sa(n), sb(n), sc(n);
  for (const Triple& t : matching) {
    if (t.a >= n || t.b >= n || t.c >= n || sa[t.a] || sb[t.b] || sc[t.c]) {
      throw PreconditionError("matching must use every index of each set exactly once");
    }
    sa[t.a] = sb[t.b] = sc[t.c] = true;
  }
  SyncSchedule s;
  for (const Triple& t : matching) {
    s.sequences.push_back({"A" + std::to_string(t.a + 1), "B" + std::to_string(t.b + 1),
                           "C" + std::to_string(t.c + 1)});
  }
  return s;
}

namespace {

// Provenance of each id, or nullptr.
const Provenance* Lookup(const HardInstance& hi, const std::string& id) {
  for (const Provenance& p : hi.provenance) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

}  // namespace

bool IsEquitable(const SyncSchedule& schedule, const HardInstance& hi) {
  const std::size_t n = hi.n();
  if (schedule.sequences.size() != n) return false;
  std::vector<int> seen(3 * n, 0);
  for (const auto& order : schedule.sequences) {
    if (order.size() != 3) return false;
    const JobClass expected[] = {JobClass::kA, JobClass::kB, JobClass::kC};
    for (std::size_t pos = 0; pos < 3; ++pos) {
      const Provenance* p = Lookup(hi, order[pos]);
      if (p == nullptr || p->job_class != expected[pos]) return false;
      if (seen[static_cast<std::size_t>(p->job_class) * n + p->source]++) return false;
    }
  }
  return true;
}

std::int64_t ProcessorDelta(const SyncSchedule& schedule, const HardInstance& hi,
                            std::size_t l) {
  if (!IsEquitable(schedule, hi)) {
    throw PreconditionError("processor delta needs an equitable schedule");
  }
  if (l >= hi.n()) throw PreconditionError("processor index out of range");
  const auto& order = schedule.sequences[l];
  return hi.input.b - (hi.input.x[Lookup(hi, order[0])->source] +
                       hi.input.y[Lookup(hi, order[1])->source] +
                       hi.input.z[Lookup(hi, order[2])->source]);
}

HCheck CrossCheckH(const SyncSchedule& schedule, const HardInstance& hi) {
  HCheck out;
  for (std::size_t l = 0; l < hi.n(); ++l) {
    out.deltas.push_back(ProcessorDelta(schedule, hi, l));
  }
  out.direct = Evaluate(schedule, hi.instance).total;
  out.reference = HValue(out.deltas, hi);
  out.derived = HValueDerived(out.deltas, hi);
  return out;
}

Decision Decide(const N3dmInput& input, std::size_t max_n) {
  ValidateN3dm(input);
  const std::size_t n = input.x.size();
  if (n > max_n) {
    throw LimitError("decide enumerates n!^2 matchings; limited to n <= " +
                     std::to_string(max_n));
  }
  const HardInstance hi = GenerateInstance(input);

  Decision out;
  std::vector<std::size_t> sigma(n), tau(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  bool first = true;
  do {
    std::iota(tau.begin(), tau.end(), 0);
    do {
      std::vector<Triple> matching(n);
      bool all_zero = true;
      for (std::size_t l = 0; l < n; ++l) {
        matching[l] = Triple{l, sigma[l], tau[l]};
        all_zero = all_zero && input.x[l] + input.y[sigma[l]] + input.z[tau[l]] == input.b;
      }
      const Dyadic value = Evaluate(EquitableSchedule(matching, hi), hi.instance).total;
      if (first || out.best_equitable_value < value) out.best_equitable_value = value;
      first = false;
      ++out.matchings;
      if (all_zero && !out.solvable) {
        out.solvable = true;
        out.witness = matching;
      }
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace wsmp
