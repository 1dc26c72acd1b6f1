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
/// Accessible variables in operator form. A variable is a list of distinct
/// real values u_j paired with orthogonal projectors P_j resolving the
/// identity; its operator is sum_j u_j P_j. A state that is a rank-one
/// eigenvector of some catalog variable answers the question "what is the
/// value of that variable?".

#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "epiq/hilbert.hpp"

namespace epiq {

class AccessibleVariable {
 public:
  AccessibleVariable(std::string name, std::vector<double> values, std::vector<Operator> projectors,
                     const Tolerances& tol = default_tolerances)
      : name_(std::move(name)), values_(std::move(values)), projectors_(std::move(projectors)) {
    if (values_.empty() || values_.size() != projectors_.size()) {
      throw Error(ErrorKind::InvalidArgument, "variable needs one projector per value");
    }
    const std::size_t d = projectors_.front().dim();
    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t j = 0; j < projectors_.size(); ++j) {
      const Operator& p = projectors_[j];
      if (p.dim() != d) throw Error(ErrorKind::DimMismatch, "projectors of one variable differ in dimension");
      if (!p.is_projector(tol.projector)) throw Error(ErrorKind::NotProjector, name_ + " value " + std::to_string(j));
      if (p.trace().real() < 0.5) throw Error(ErrorKind::InvalidArgument, "projector of " + name_ + " is zero");
      for (std::size_t k = 0; k < j; ++k) {
        if ((p * projectors_[k]).max_abs() > tol.projector) {
          throw Error(ErrorKind::InvalidArgument, "projectors of " + name_ + " are not orthogonal");
        }
        if (std::abs(values_[j] - values_[k]) <= tol.value_match) {
          throw Error(ErrorKind::InvalidArgument, "values of " + name_ + " are not distinct");
        }
      }
      sum += p.matrix();
    }
    if (detail::max_abs(sum - Matrix::Identity(sum.rows(), sum.cols())) > tol.completeness) {
      throw Error(ErrorKind::InvalidArgument, "projectors of " + name_ + " do not sum to the identity");
    }
  }

  /// Variable whose values and eigenspaces are the spectral decomposition of `h`.
  static AccessibleVariable from_operator(std::string name, const Operator& h,
                                          const Tolerances& tol = default_tolerances) {
    EigenDecomposition e = eig_hermitian(h, tol);
    return AccessibleVariable(std::move(name), std::move(e.eigenvalues), std::move(e.projectors), tol);
  }

  /// Maximal variable from an orthonormal basis |a;j>.
  static AccessibleVariable from_basis(std::string name, std::vector<double> values,
                                       const std::vector<StateVector>& basis) {
    std::vector<Operator> ps;
    ps.reserve(basis.size());
    for (const auto& v : basis) ps.push_back(v.projector());
    return AccessibleVariable(std::move(name), std::move(values), std::move(ps));
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<Operator>& projectors() const noexcept { return projectors_; }
  std::size_t dim() const noexcept { return projectors_.front().dim(); }
  std::size_t size() const noexcept { return values_.size(); }

  std::optional<std::size_t> index_of(double value, double tol = default_tolerances.value_match) const {
    for (std::size_t j = 0; j < values_.size(); ++j) {
      if (std::abs(values_[j] - value) <= tol) return j;
    }
    return std::nullopt;
  }

  /// The unit vector |a;j> spanning a rank-one eigenspace, canonical phase.
  /// Empty when the eigenspace has rank above one.
  std::optional<StateVector> eigenvector(std::size_t j, double rank_tol = default_tolerances.rank) const {
    const Operator& p = projectors_.at(j);
    if (std::abs(p.trace().real() - 1.0) > rank_tol) return std::nullopt;
    Eigen::Index col = 0;
    p.matrix().colwise().norm().maxCoeff(&col);
    return StateVector::normalized(p.matrix().col(col)).canonical_phase();
  }

 private:
  std::string name_;
  std::vector<double> values_;
  std::vector<Operator> projectors_;
};

/// sum_j u_j P_j
inline Operator operator_of(const AccessibleVariable& v) {
  const auto d = static_cast<Eigen::Index>(v.dim());
  Matrix m = Matrix::Zero(d, d);
  for (std::size_t j = 0; j < v.size(); ++j) m += v.values()[j] * v.projectors()[j].matrix();
  return Operator(std::move(m));
}

/// The variable t(theta): values are the distinct images s_j of t (ascending),
/// and the projector of s_j sums the P_i with t(u_i) = s_j.
inline AccessibleVariable derived_variable(const AccessibleVariable& v, const std::function<double(double)>& t,
                                           std::optional<std::string> name = std::nullopt,
                                           const Tolerances& tol = default_tolerances) {
  std::vector<double> images(v.size());
  std::transform(v.values().begin(), v.values().end(), images.begin(), t);
  std::vector<double> distinct = images;
  std::sort(distinct.begin(), distinct.end());
  std::vector<double> merged;
  for (double s : distinct) {
    if (merged.empty() || std::abs(s - merged.back()) > tol.value_match) merged.push_back(s);
  }
  const auto d = static_cast<Eigen::Index>(v.dim());
  std::vector<Operator> projectors;
  for (double s : merged) {
    Matrix p = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (std::abs(images[i] - s) <= tol.value_match) p += v.projectors()[i].matrix();
    }
    projectors.emplace_back(std::move(p));
  }
  return AccessibleVariable(name.value_or(v.name()), std::move(merged), std::move(projectors), tol);
}

/// True iff every eigenspace is one-dimensional.
inline bool is_maximal(const AccessibleVariable& v, const Tolerances& tol = default_tolerances) {
  return std::all_of(v.projectors().begin(), v.projectors().end(),
                     [&](const Operator& p) { return std::abs(p.trace().real() - 1.0) <= tol.rank; });
}

struct QuestionAnswer {
  std::string question;  // variable name
  double answer = 0.0;   // one of its values
};

/// Every (variable, value) whose rank-one eigenvector equals `s` up to a phase,
/// i.e. |<a;j|s>| > 1 - tol.catalog_match.
inline std::vector<QuestionAnswer> state_to_question(const StateVector& s, const std::vector<AccessibleVariable>& catalog,
                                                     const Tolerances& tol = default_tolerances) {
  std::vector<QuestionAnswer> hits;
  for (const auto& v : catalog) {
    if (v.dim() != s.dim()) throw Error(ErrorKind::DimMismatch, "catalog variable " + v.name());
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (std::abs(v.projectors()[j].trace().real() - 1.0) > tol.rank) continue;
      const double overlap = std::sqrt(std::max(0.0, expectation(s, v.projectors()[j]).real()));
      if (overlap > 1.0 - tol.catalog_match) hits.push_back({v.name(), v.values()[j]});
    }
  }
  return hits;
}

/// The variable with operator U^dagger A U. `value_action` must permute the
/// value list; the result lists g(u_j) at position j, paired with the
/// conjugated projector of that value.
inline AccessibleVariable conjugated_variable(const AccessibleVariable& v, const Operator& u,
                                              const std::function<double(double)>& value_action,
                                              std::optional<std::string> name = std::nullopt,
                                              const Tolerances& tol = default_tolerances) {
  if (u.dim() != v.dim()) throw Error(ErrorKind::DimMismatch, "conjugated_variable");
  if (!u.is_unitary(tol.unitary)) throw Error(ErrorKind::NotUnitary, "conjugated_variable");
  std::vector<std::size_t> target(v.size());
  std::vector<bool> used(v.size(), false);
  for (std::size_t j = 0; j < v.size(); ++j) {
    const auto k = v.index_of(value_action(v.values()[j]), tol.value_match);
    if (!k || used[*k]) throw Error(ErrorKind::NotPermutation, "value action does not permute the values of " + v.name());
    used[*k] = true;
    target[j] = *k;
  }
  std::vector<double> values;
  std::vector<Operator> projectors;
  for (std::size_t j = 0; j < v.size(); ++j) {
    values.push_back(v.values()[target[j]]);
    projectors.push_back(conjugate(u, v.projectors()[target[j]], tol));
  }
  return AccessibleVariable(name.value_or(v.name()), std::move(values), std::move(projectors), tol);
}

}  // namespace epiq
