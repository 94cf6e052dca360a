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

#include "wsmp/json_util.h"

#include <limits>
#include <stdexcept>

#include "wsmp/errors.h"

namespace wsmp::json_util {

nlohmann::json ParseDocument(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const nlohmann::json& Get(const nlohmann::json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

int GetInt(const nlohmann::json& object, const char* key) {
  const auto& value = Get(object, key);
  if (!value.is_number_integer()) {
    throw ParseError(std::string("\"") + key + "\" must be an integer");
  }
  const auto v = value.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ParseError(std::string("\"") + key + "\" out of range");
  }
  return static_cast<int>(v);
}

std::string GetString(const nlohmann::json& object, const char* key) {
  const auto& value = Get(object, key);
  if (!value.is_string()) {
    throw ParseError(std::string("\"") + key + "\" must be a string");
  }
  return value.get<std::string>();
}

const nlohmann::json& GetArray(const nlohmann::json& object, const char* key) {
  const auto& value = Get(object, key);
  if (!value.is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array");
  }
  return value;
}

Dyadic ToDyadic(const nlohmann::json& value, const std::string& context) {
  if (!value.is_string()) {
    throw ParseError(context + ": dyadic values must be strings");
  }
  try {
    return Dyadic::Parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(context + ": " + e.what());
  }
}

Dyadic GetDyadic(const nlohmann::json& object, const char* key) {
  return ToDyadic(Get(object, key), std::string("\"") + key + "\"");
}

}  // namespace wsmp::json_util
