// Copyright 2026 The qassign Authors
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

#ifndef QASSIGN_ERROR_H_
#define QASSIGN_ERROR_H_

#include <stdexcept>
#include <string>

namespace qassign {

enum class ErrorCode {
  kInvalidArgument,
  kEmptyNeighborhood,
  kInvalidAmplitudes,
  kLengthMismatch,
  kInvalidAssignment,
  kNonNormalized,
  kMissingWeight,
  kWitnessNotFound,
  kZeroF0,
  kSingularConfusion,
  kAllTied,
  kEmptyCondition,
  kInsufficientStates,
  kBudgetExceeded,
  kInsufficientData,
  kIo,
  kParse,
};

// Stable identifier used in machine-readable error output.
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qassign

#endif  // QASSIGN_ERROR_H_
