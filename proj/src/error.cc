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

#include "qassign/error.h"

namespace qassign {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kEmptyNeighborhood:
      return "EmptyNeighborhood";
    case ErrorCode::kInvalidAmplitudes:
      return "InvalidAmplitudes";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kInvalidAssignment:
      return "InvalidAssignment";
    case ErrorCode::kNonNormalized:
      return "NonNormalized";
    case ErrorCode::kMissingWeight:
      return "MissingWeight";
    case ErrorCode::kWitnessNotFound:
      return "WitnessNotFound";
    case ErrorCode::kZeroF0:
      return "ZeroF0";
    case ErrorCode::kSingularConfusion:
      return "SingularConfusion";
    case ErrorCode::kAllTied:
      return "AllTied";
    case ErrorCode::kEmptyCondition:
      return "EmptyCondition";
    case ErrorCode::kInsufficientStates:
      return "InsufficientStates";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kInsufficientData:
      return "InsufficientData";
    case ErrorCode::kIo:
      return "Io";
    case ErrorCode::kParse:
      return "Parse";
  }
  return "Unknown";
}

}  // namespace qassign
