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

// Small helpers for reading the JSON file formats. All failures surface as
// ParseError with the offending key in the message.

#ifndef WSMP_JSON_UTIL_H_
#define WSMP_JSON_UTIL_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "wsmp/dyadic.h"

namespace wsmp::json_util {

nlohmann::json ParseDocument(std::string_view text);

const nlohmann::json& Get(const nlohmann::json& object, const char* key);
int GetInt(const nlohmann::json& object, const char* key);
std::string GetString(const nlohmann::json& object, const char* key);
const nlohmann::json& GetArray(const nlohmann::json& object, const char* key);
Dyadic GetDyadic(const nlohmann::json& object, const char* key);
Dyadic ToDyadic(const nlohmann::json& value, const std::string& context);

}  // namespace wsmp::json_util

#endif  // WSMP_JSON_UTIL_H_
