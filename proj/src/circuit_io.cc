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

#include "qassign/circuit_io.h"

#include "json.hpp"
#include "qassign/error.h"

namespace qassign {

using nlohmann::json;

std::string circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates) {
    json params = json::array();
    for (int k = 0; k < gate_num_params(g.kind); ++k) params.push_back(g.params[k]);
    json targets = json::array();
    for (int k = 0; k < g.arity(); ++k) targets.push_back(g.targets[k]);
    gates.push_back(json{{"kind", gate_kind_name(g.kind)}, {"params", params}, {"targets", targets}});
  }
  json doc;
  doc["qubits"] = c.qubits;
  doc["gates"] = gates;
  return doc.dump(2) + "\n";
}

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  try {
    json doc = json::parse(text);
    c.qubits = doc.at("qubits").get<std::vector<QubitId>>();
    for (const json& jg : doc.at("gates")) {
      std::string name = jg.at("kind").get<std::string>();
      auto kind = gate_kind_from_name(name);
      if (!kind) throw Error(ErrorCode::kParse, "unknown gate kind " + name);
      auto params = jg.value("params", std::vector<double>{});
      auto targets = jg.at("targets").get<std::vector<QubitId>>();
      if (static_cast<int>(params.size()) != gate_num_params(*kind) ||
          static_cast<int>(targets.size()) != gate_arity(*kind)) {
        throw Error(ErrorCode::kParse, "wrong parameter or target count for " + name);
      }
      Gate g = targets.size() == 1 ? Gate::one(*kind, targets[0])
                                   : Gate::two(*kind, targets[0], targets[1]);
      for (size_t k = 0; k < params.size(); ++k) g.params[k] = params[k];
      c.gates.push_back(g);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("circuit: ") + e.what());
  }
  c.validate();
  return c;
}

}  // namespace qassign
