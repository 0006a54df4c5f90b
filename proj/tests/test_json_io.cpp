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
#include "test_util.hpp"

namespace qrelent {
namespace {

using namespace testing;
using json_io::json;

TEST(JsonIo, MatrixRoundTrip) {
  Rng rng(1);
  const Matrix m = ginibre(2, 3, rng);
  EXPECT_EQ(json_io::matrix_from_json(json_io::to_json(m)), m);
}

TEST(JsonIo, RealEntriesAccepted) {
  const auto m = json_io::matrix_from_json(json::parse(R"({"rows":1,"cols":2,"data":[1,[0,2]]})"));
  EXPECT_EQ(m(0, 0), cplx(1, 0));
  EXPECT_EQ(m(0, 1), cplx(0, 2));
}

TEST(JsonIo, StateRoundTrip) {
  const auto rho = random_density(3, 2, 2);
  const auto back = json_io::state_from_json(json::parse(json_io::to_json(rho).dump()));
  EXPECT_LT(max_abs(back.matrix() - rho.matrix()), 1e-15);
}

TEST(JsonIo, ChannelAndEnsembleRoundTrip) {
  const auto ch = QuantumChannel::from_kraus({Matrix::Identity(2, 2)});
  const auto back = json_io::channel_from_json(json::parse(json_io::to_json(ch).dump()));
  EXPECT_EQ(back.kraus().front(), ch.kraus().front());
  WeightedStates ens{{0.5, 0.5}, {diag_state({1, 0}), diag_state({0, 1})}};
  const auto e2 = json_io::ensemble_from_json(json::parse(json_io::to_json(ens).dump()));
  EXPECT_EQ(e2.probs, ens.probs);
  EXPECT_EQ(e2.states[1].matrix(), ens.states[1].matrix());
}

TEST(JsonIo, ParseErrorsNameThePath) {
  try {
    json_io::matrix_from_json(json::parse(R"({"rows":2,"cols":1,"data":[1,"x"]})"), "m");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("m.data[1]"), std::string::npos) << e.what();
  }
  try {
    json_io::channel_from_json(json::parse(R"({"in_dim":2,"out_dim":2})"), "ch");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("kraus"), std::string::npos);
  }
}

TEST(JsonIo, SemanticErrorsKeepTheirKind) {
  const auto j = json::parse(R"({"kind":"density","rows":2,"cols":2,"data":[1,0,0,1]})");
  try {
    json_io::state_from_json(j, "rho");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TraceNotOne);
    EXPECT_EQ(e.message().rfind("rho: ", 0), 0u);
  }
  EXPECT_ERROR_KIND(json_io::state_from_json(json::parse(R"({"rows":1,"cols":1,"data":[1]})")), ErrorKind::ParseError);
}

TEST(JsonIo, Protocol) {
  const auto steps = json_io::protocol_from_json(json::parse(R"({"steps":[
    {"op":"measure","party":"A","basis":{"rows":2,"cols":2,"data":[1,0,0,1]}},
    {"op":"unitary","party":1,"matrix":{"rows":2,"cols":2,"data":[0,1,1,0]},"if":{"step":0,"outcome":1}}]})"));
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0].kind, ProtocolStep::Kind::Measure);
  EXPECT_EQ(steps[0].party, 0);
  EXPECT_EQ(steps[1].party, 1);
  ASSERT_TRUE(steps[1].when.has_value());
  EXPECT_EQ(steps[1].when->outcome, 1);
  EXPECT_ERROR_KIND(json_io::protocol_from_json(json::parse(R"([{"op":"swap","party":0}])")), ErrorKind::ParseError);
}

TEST(JsonIo, NonFiniteNumbers) {
  EXPECT_EQ(json_io::number(kInfinity), "inf");
  EXPECT_EQ(json_io::number(1.5), 1.5);
}

TEST(JsonIo, MissingFile) {
  EXPECT_ERROR_KIND(json_io::load_file("/nonexistent/qrelent.json"), ErrorKind::ParseError);
}

}  // namespace
}  // namespace qrelent
