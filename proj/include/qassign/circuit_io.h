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

#ifndef QASSIGN_CIRCUIT_IO_H_
#define QASSIGN_CIRCUIT_IO_H_

#include <string>

#include "qassign/circuit.h"

namespace qassign {

// {"qubits": [...], "gates": [{"kind", "params", "targets"}]}. params lists
// only the kind's angles; targets has one or two ids.
std::string circuit_to_json(const Circuit& c);
Circuit parse_circuit(const std::string& text);

}  // namespace qassign

#endif  // QASSIGN_CIRCUIT_IO_H_
