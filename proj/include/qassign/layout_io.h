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

#ifndef QASSIGN_LAYOUT_IO_H_
#define QASSIGN_LAYOUT_IO_H_

#include <string>

#include "qassign/device_graph.h"

namespace qassign {

// Layout documents are JSON objects:
//   {"qubits": [{"id", "row", "col", "eps", "p10", "p01"}],
//    "edges":  [{"a", "b", "eta"}]}
// row/col and all weights are optional (weights default to 0).
NoiseGraph parse_layout(const std::string& text);
NoiseGraph load_layout(const std::string& path);
std::string layout_to_json(const NoiseGraph& g);
void save_layout(const NoiseGraph& g, const std::string& path);

}  // namespace qassign

#endif  // QASSIGN_LAYOUT_IO_H_
