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

#ifndef WSMP_ERRORS_H_
#define WSMP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wsmp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text, unknown ids, invariant violations in input data.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A job sequence on a shared processor cannot be executed as a
// synchronized schedule: the job at `position` (1-based) is not longer
// than its start time.
class InfeasibleError : public Error {
 public:
  InfeasibleError(std::size_t processor, std::size_t position,
                  const std::string& what)
      : Error(what), processor_(processor), position_(position) {}

  std::size_t processor() const { return processor_; }
  std::size_t position() const { return position_; }

 private:
  std::size_t processor_;
  std::size_t position_;
};

// Exhaustive search refused because the input exceeds a configured limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace wsmp

#endif  // WSMP_ERRORS_H_
