// Copyright 2026 The mcplab Authors
//
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

#ifndef MCPLAB_ERRORS_H_
#define MCPLAB_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcplab {

enum class ErrorCode {
  kDuplicateEdge,
  kIndexOutOfRange,
  kColorOutOfRange,
  kInvalidColorSpec,
  kInvalidMatching,
  kUnmatchedVertex,
  kParseError,
  kOutOfUnitInterval,
  kDomainError,
  kInstanceTooLarge,
  kBadProfileSum,
  kInvalidCycle,
  kInvalidConfig,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Thrown for precondition and validation failures. Expected negative
// outcomes (no perfect matching, no cycle found, ...) are returned as values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcplab

#endif  // MCPLAB_ERRORS_H_
