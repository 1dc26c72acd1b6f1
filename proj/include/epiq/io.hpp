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

/// \file
/// Structured-text (JSON) forms of the library's values.
///
///   Operator / StateVector: {"dim": n, "re": [...], "im": [...]}, row-major
///   AccessibleVariable:     {"name": ..., "values": [...], "projectors": [Operator...]}
///   GroupAction:            {"order": n, "cayley": [[...]], "space": [labels], "action": [[...]]}
///   VariableMap:            {"name": ..., "values": [value label per point]}
///   StatisticalModel:       {"parameters": [...], "samples": [labels], "likelihood": [[row per sample]]}

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "epiq/epistemic.hpp"
#include "epiq/groups.hpp"
#include "epiq/hilbert.hpp"
#include "epiq/measurement.hpp"

namespace epiq::io {

using json = nlohmann::json;

namespace detail {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("key \"") + key + "\": " + e.what());
  }
}

}  // namespace detail

inline json to_json(const Operator& op) {
  std::vector<double> re, im;
  for (std::size_t i = 0; i < op.dim(); ++i) {
    for (std::size_t j = 0; j < op.dim(); ++j) {
      re.push_back(op(i, j).real());
      im.push_back(op(i, j).imag());
    }
  }
  return {{"dim", op.dim()}, {"re", re}, {"im", im}};
}

inline Operator operator_from_json(const json& j) {
  const auto d = detail::get<std::size_t>(j, "dim");
  const auto re = detail::get<std::vector<double>>(j, "re");
  const auto im = j.contains("im") ? detail::get<std::vector<double>>(j, "im") : std::vector<double>(re.size(), 0.0);
  if (d == 0 || re.size() != d * d || im.size() != d * d) {
    throw Error(ErrorKind::ParseError, "operator needs dim*dim real and imaginary entries");
  }
  Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d * d; ++k) {
    m(static_cast<Eigen::Index>(k / d), static_cast<Eigen::Index>(k % d)) = Complex(re[k], im[k]);
  }
  return Operator(std::move(m));
}

inline json to_json(const StateVector& s) {
  std::vector<double> re, im;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    re.push_back(s[i].real());
    im.push_back(s[i].imag());
  }
  return {{"dim", s.dim()}, {"re", re}, {"im", im}};
}

inline StateVector state_from_json(const json& j) {
  const auto d = detail::get<std::size_t>(j, "dim");
  const auto re = detail::get<std::vector<double>>(j, "re");
  const auto im = j.contains("im") ? detail::get<std::vector<double>>(j, "im") : std::vector<double>(re.size(), 0.0);
  if (d == 0 || re.size() != d || im.size() != d) throw Error(ErrorKind::ParseError, "state needs dim amplitudes");
  Vector v(static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) v(static_cast<Eigen::Index>(k)) = Complex(re[k], im[k]);
  return StateVector(std::move(v));
}

inline json to_json(const AccessibleVariable& v) {
  json ps = json::array();
  for (const auto& p : v.projectors()) ps.push_back(to_json(p));
  return {{"name", v.name()}, {"values", v.values()}, {"projectors", ps}};
}

inline AccessibleVariable variable_from_json(const json& j) {
  std::vector<Operator> ps;
  for (const auto& p : detail::get<json>(j, "projectors")) ps.push_back(operator_from_json(p));
  return AccessibleVariable(detail::get<std::string>(j, "name"), detail::get<std::vector<double>>(j, "values"),
                            std::move(ps));
}

inline json to_json(const EigenDecomposition& e) {
  json ps = json::array();
  for (const auto& p : e.projectors) ps.push_back(to_json(p));
  return {{"eigenvalues", e.eigenvalues}, {"projectors", ps}};
}

inline groups::GroupAction action_from_json(const json& j) {
  auto cayley = detail::get<groups::Table>(j, "cayley");
  if (j.contains("order") && detail::get<std::size_t>(j, "order") != cayley.size()) {
    throw Error(ErrorKind::ParseError, "order differs from the Cayley table size");
  }
  return groups::GroupAction(groups::FiniteGroup(std::move(cayley)), detail::get<std::vector<std::string>>(j, "space"),
                             detail::get<groups::Table>(j, "action"));
}

inline json to_json(const groups::GroupAction& a) {
  return {{"order", a.group().order()}, {"cayley", a.group().cayley()}, {"space", a.space()}, {"action", a.table()}};
}

/// Variable map over `space` from per-point value labels.
inline groups::VariableMap variable_map_from_json(const json& j, const std::vector<std::string>& space) {
  const auto labels = detail::get<std::vector<std::string>>(j, "values");
  if (labels.size() != space.size()) throw Error(ErrorKind::SpaceMismatch, "variable needs one value per point");
  return groups::VariableMap::from_labels(space, labels);
}

inline StatisticalModel model_from_json(const json& j) {
  return StatisticalModel(detail::get<std::vector<double>>(j, "parameters"),
                          detail::get<std::vector<std::string>>(j, "samples"),
                          detail::get<std::vector<std::vector<double>>>(j, "likelihood"));
}

inline json to_json(const StatisticalModel& m) {
  return {{"parameters", m.parameters()}, {"samples", m.samples()}, {"likelihood", m.table()}};
}

}  // namespace epiq::io
