// Copyright 2026 The epiq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "epiq/io.hpp"

#include <gtest/gtest.h>

#include <fstream>

#include "epiq/random.hpp"

using namespace epiq;
using io::json;

namespace {

json load(const std::string& file) {
  std::ifstream in(std::string(EPIQ_FIXTURE_DIR) + "/" + file);
  return json::parse(in);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Io, OperatorRoundTrip) {
  Engine rng = substream(19, 0);
  const Operator a = random_hermitian(4, rng);
  const Operator back = io::operator_from_json(json::parse(io::to_json(a).dump()));
  EXPECT_EQ(distance(a, back), 0.0);
}

TEST(Io, OperatorImaginaryPartOptional) {
  const Operator z = io::operator_from_json(json{{"dim", 2}, {"re", {1, 0, 0, -1}}});
  EXPECT_EQ(distance(z, Operator::diagonal({1.0, -1.0})), 0.0);
}

TEST(Io, StateRoundTrip) {
  Engine rng = substream(19, 1);
  const StateVector s = random_state(3, rng);
  const StateVector back = io::state_from_json(json::parse(io::to_json(s).dump()));
  EXPECT_EQ((s.amplitudes() - back.amplitudes()).norm(), 0.0);
  EXPECT_THROW(io::state_from_json(json{{"dim", 2}, {"re", {1, 1}}}), Error);
}

TEST(Io, VariableRoundTrip) {
  Engine rng = substream(19, 2);
  const auto v = AccessibleVariable::from_operator("h", random_hermitian(3, rng));
  const auto back = io::variable_from_json(io::to_json(v));
  EXPECT_EQ(back.name(), "h");
  EXPECT_EQ(back.values(), v.values());
  for (std::size_t j = 0; j < v.size(); ++j) EXPECT_EQ(distance(back.projectors()[j], v.projectors()[j]), 0.0);
}

TEST(Io, EigenDecompositionFields) {
  const json j = io::to_json(eig_hermitian(Operator::diagonal({2.0, 1.0, 2.0})));
  EXPECT_EQ(j.at("eigenvalues").size(), 2u);
  EXPECT_EQ(j.at("projectors").size(), 2u);
}

TEST(Io, ActionFixtureRoundTrip) {
  const json j = load("swap4.json");
  const auto action = io::action_from_json(j);
  EXPECT_EQ(action.group().order(), 2u);
  EXPECT_EQ(action.space().size(), 4u);
  const auto again = io::action_from_json(io::to_json(action));
  EXPECT_EQ(again.table(), action.table());

  const auto theta = io::variable_map_from_json(j.at("variables").at(0), action.space());
  EXPECT_EQ(theta.codomain().size(), 2u);
  EXPECT_FALSE(groups::check_permissible(theta, action));
}

TEST(Io, ModelFixtureRoundTrip) {
  const auto m = io::model_from_json(load("model_binary.json"));
  EXPECT_EQ(m.sample_index("down"), 1u);
  EXPECT_EQ(m.likelihood(0, 0), 0.8);
  EXPECT_EQ(io::to_json(m), load("model_binary.json"));
}

TEST(Io, ParseErrors) {
  EXPECT_EQ(kind_of([] { io::operator_from_json(json{{"re", {1}}}); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::operator_from_json(json{{"dim", "two"}, {"re", {1}}}); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::operator_from_json(json{{"dim", 2}, {"re", {1, 0, 0}}}); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::operator_from_json(json::array()); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::model_from_json(json{{"parameters", {1.0}}}); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::action_from_json(json{{"order", 3}, {"cayley", {{0, 1}, {1, 0}}}, {"space", {"a"}}, {"action", {{0}, {0}}}}); }),
            ErrorKind::ParseError);
}

TEST(Io, SemanticErrorsKeepTheirKind) {
  EXPECT_EQ(kind_of([] { io::operator_from_json(json{{"dim", 1}, {"re", {std::nan("")}}}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] {
              io::model_from_json(json{{"parameters", {1.0}}, {"samples", {"a", "b"}}, {"likelihood", {{0.5}, {0.6}}}});
            }),
            ErrorKind::BadDistribution);
  const auto action = io::action_from_json(load("swap4.json"));
  EXPECT_EQ(kind_of([&] { io::variable_map_from_json(json{{"values", {"1"}}}, action.space()); }), ErrorKind::SpaceMismatch);
}
