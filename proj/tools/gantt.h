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

#ifndef WSMP_TOOLS_GANTT_H_
#define WSMP_TOOLS_GANTT_H_

#include <string>

#include "wsmp/engine.h"
#include "wsmp/instance.h"

namespace wsmp {

// ASCII chart of a feasible synchronized schedule: one row per shared
// processor followed by one row per job's private processor. Bars are
// `width` characters for the time span (0, max completion); exact interval
// endpoints are listed after each row.
std::string RenderGantt(const SyncSchedule& schedule, const Instance& instance,
                        int width);

}  // namespace wsmp

#endif  // WSMP_TOOLS_GANTT_H_
