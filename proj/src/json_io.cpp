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

#include "qrelent/json_io.hpp"

#include <cmath>
#include <cctype>
#include <fstream>

namespace qrelent::json_io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw Error(ErrorKind::ParseError, path + ": " + msg); }

const json& field(const json& j, const char* name, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(path, std::string("missing field \"") + name + "\"");
  return *it;
}

long long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

double real(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(e.kind(), path + ": " + e.message());
  }
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

Matrix matrix_from_json(const json& j, const std::string& path) {
  const auto rows = integer(field(j, "rows", path), path + ".rows");
  const auto cols = integer(field(j, "cols", path), path + ".cols");
  if (rows < 1 || cols < 1) fail(path, "rows and cols must be positive");
  const json& data = field(j, "data", path);
  if (!data.is_array()) fail(path + ".data", "expected an array");
  if (static_cast<long long>(data.size()) != rows * cols) {
    fail(path + ".data", "expected " + std::to_string(rows * cols) + " entries, found " + std::to_string(data.size()));
  }
  Matrix m(rows, cols);
  for (long long k = 0; k < rows * cols; ++k) {
    const std::string p = path + ".data[" + std::to_string(k) + "]";
    const json& e = data[static_cast<std::size_t>(k)];
    if (e.is_number()) {
      m(k / cols, k % cols) = real(e, p);
    } else if (e.is_array() && e.size() == 2) {
      m(k / cols, k % cols) = cplx(real(e[0], p + "[0]"), real(e[1], p + "[1]"));
    } else {
      fail(p, "expected [re, im]");
    }
  }
  return m;
}

json to_json(const Matrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) data.push_back({m(i, k).real(), m(i, k).imag()});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Vector vector_from_json(const json& j, const std::string& path) {
  const Matrix m = matrix_from_json(j, path);
  if (m.cols() != 1) fail(path + ".cols", "a vector needs cols = 1");
  return m.col(0);
}

json to_json(const Vector& v) { return to_json(Matrix(v)); }

DensityOperator state_from_json(const json& j, const std::string& path) {
  const json& kind = field(j, "kind", path);
  if (!kind.is_string() || kind.get<std::string>() != "density") fail(path + ".kind", "expected \"density\"");
  const Matrix m = matrix_from_json(j, path);
  return with_path(path, [&] { return DensityOperator::from_matrix(m); });
}

json to_json(const DensityOperator& rho) {
  json j = to_json(rho.matrix());
  j["kind"] = "density";
  return j;
}

QuantumChannel channel_from_json(const json& j, const std::string& path) {
  const auto in_dim = integer(field(j, "in_dim", path), path + ".in_dim");
  const auto out_dim = integer(field(j, "out_dim", path), path + ".out_dim");
  const json& kraus = field(j, "kraus", path);
  if (!kraus.is_array() || kraus.empty()) fail(path + ".kraus", "expected a non-empty array");
  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < kraus.size(); ++k) {
    const std::string p = path + ".kraus[" + std::to_string(k) + "]";
    ops.push_back(matrix_from_json(kraus[k], p));
    if (ops.back().rows() != out_dim || ops.back().cols() != in_dim) {
      fail(p, "expected a " + std::to_string(out_dim) + "x" + std::to_string(in_dim) + " operator");
    }
  }
  return with_path(path + ".kraus", [&] { return QuantumChannel::from_kraus(std::move(ops)); });
}

json to_json(const QuantumChannel& ch) {
  json kraus = json::array();
  for (const auto& k : ch.kraus()) kraus.push_back(to_json(k));
  return {{"in_dim", ch.in_dim()}, {"out_dim", ch.out_dim()}, {"kraus", kraus}};
}

WeightedStates ensemble_from_json(const json& j, const std::string& path) {
  const json& probs = field(j, "probs", path);
  const json& states = field(j, "states", path);
  if (!probs.is_array()) fail(path + ".probs", "expected an array");
  if (!states.is_array()) fail(path + ".states", "expected an array");
  if (probs.size() != states.size()) fail(path, "probs and states differ in length");
  WeightedStates ens;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    ens.probs.push_back(real(probs[k], path + ".probs[" + std::to_string(k) + "]"));
    ens.states.push_back(state_from_json(states[k], path + ".states[" + std::to_string(k) + "]"));
  }
  with_path(path, [&] {
    ens.validate();
    return 0;
  });
  return ens;
}

json to_json(const WeightedStates& ens) {
  json states = json::array();
  for (const auto& s : ens.states) states.push_back(to_json(s));
  return {{"probs", ens.probs}, {"states", states}};
}

std::vector<ProtocolStep> protocol_from_json(const json& j, const std::string& path) {
  const json& list = j.is_object() ? field(j, "steps", path) : j;
  const std::string base = j.is_object() ? path + ".steps" : path;
  if (!list.is_array()) fail(base, "expected an array of steps");
  std::vector<ProtocolStep> steps;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string p = base + "[" + std::to_string(k) + "]";
    const json& s = list[k];
    const json& op = field(s, "op", p);
    if (!op.is_string()) fail(p + ".op", "expected a string");
    ProtocolStep step;
    const json& party = field(s, "party", p);
    if (party.is_string() && party.get<std::string>().size() == 1 && std::isupper(party.get<std::string>()[0])) {
      step.party = party.get<std::string>()[0] - 'A';
    } else {
      step.party = static_cast<int>(integer(party, p + ".party"));
    }
    if (op == "unitary") {
      step.kind = ProtocolStep::Kind::Unitary;
      step.matrix = matrix_from_json(field(s, "matrix", p), p + ".matrix");
    } else if (op == "measure") {
      step.kind = ProtocolStep::Kind::Measure;
      step.matrix = matrix_from_json(field(s, "basis", p), p + ".basis");
    } else {
      fail(p + ".op", "expected \"unitary\" or \"measure\"");
    }
    if (auto it = s.find("if"); it != s.end()) {
      step.when = ProtocolStep::Condition{static_cast<int>(integer(field(*it, "step", p + ".if"), p + ".if.step")),
                                          static_cast<int>(integer(field(*it, "outcome", p + ".if"), p + ".if.outcome"))};
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

}  // namespace qrelent::json_io
