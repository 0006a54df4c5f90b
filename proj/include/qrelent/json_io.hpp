// Copyright 2026 The qrelent Authors
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

#pragma once

// JSON schemas:
//   matrix   {"rows":n,"cols":m,"data":[[re,im],...]} row-major
//   state    matrix plus {"kind":"density"}
//   vector   matrix with cols = 1
//   channel  {"in_dim":n,"out_dim":m,"kraus":[matrix,...]}
//   ensemble {"probs":[...],"states":[state,...]}
//   protocol [{"op":"unitary"|"measure","party":k,"matrix"|"basis":matrix,"if":{"step":s,"outcome":o}},...]
// Malformed input throws ParseError naming the JSON path; semantic failures
// keep their kind and gain the path prefix.

#include <string>

#include <json.hpp>

#include "qrelent/channels.hpp"
#include "qrelent/locc.hpp"
#include "qrelent/states.hpp"

namespace qrelent::json_io {

using json = nlohmann::json;

json load_file(const std::string& path);

Matrix matrix_from_json(const json& j, const std::string& path = "$");
json to_json(const Matrix& m);

Vector vector_from_json(const json& j, const std::string& path = "$");
json to_json(const Vector& v);

DensityOperator state_from_json(const json& j, const std::string& path = "$");
json to_json(const DensityOperator& rho);

QuantumChannel channel_from_json(const json& j, const std::string& path = "$");
json to_json(const QuantumChannel& ch);

WeightedStates ensemble_from_json(const json& j, const std::string& path = "$");
json to_json(const WeightedStates& ens);

std::vector<ProtocolStep> protocol_from_json(const json& j, const std::string& path = "$");

/// JSON-safe double: infinities become the strings "inf" / "-inf".
json number(double x);

}  // namespace qrelent::json_io
