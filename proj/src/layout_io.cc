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

#include "qassign/layout_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qassign/error.h"

namespace qassign {

using nlohmann::json;

NoiseGraph parse_layout(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("layout: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("qubits") || !doc["qubits"].is_array()) {
    throw Error(ErrorCode::kParse, "layout: missing 'qubits' array");
  }
  NoiseGraph g;
  try {
    for (const json& q : doc["qubits"]) {
      std::optional<GridCoord> coord;
      if (q.contains("row") && q.contains("col")) {
        coord = GridCoord{q["row"].get<int>(), q["col"].get<int>()};
      }
      ReadoutRates rates{q.value("p10", 0.0), q.value("p01", 0.0)};
      g.add_qubit(q.at("id").get<int>(), q.value("eps", 0.0), rates, coord);
    }
    if (doc.contains("edges")) {
      for (const json& e : doc["edges"]) {
        g.add_edge(e.at("a").get<int>(), e.at("b").get<int>(), e.value("eta", 0.0));
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("layout: ") + e.what());
  }
  return g;
}

NoiseGraph load_layout(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open layout file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_layout(buf.str());
}

std::string layout_to_json(const NoiseGraph& g) {
  json qubits = json::array();
  for (QubitId id : g.vertices()) {
    json q;
    q["id"] = id;
    if (auto c = g.coord(id)) {
      q["row"] = c->row;
      q["col"] = c->col;
    }
    q["eps"] = g.eps(id);
    q["p10"] = g.readout(id).p10;
    q["p01"] = g.readout(id).p01;
    qubits.push_back(q);
  }
  json edges = json::array();
  for (const auto& [e, eta] : g.eta_map()) {
    edges.push_back(json{{"a", e.a}, {"b", e.b}, {"eta", eta}});
  }
  json doc;
  doc["qubits"] = qubits;
  doc["edges"] = edges;
  return doc.dump(2) + "\n";
}

void save_layout(const NoiseGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write layout file " + path);
  out << layout_to_json(g);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace qassign
