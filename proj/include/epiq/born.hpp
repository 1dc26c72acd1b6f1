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
/// Born probabilities: transition probabilities between maximal variables,
/// projector and density forms, likelihood densities, the spin-1/2 closed
/// form, and the singlet joint law of two spin-1/2 outcomes.

#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "epiq/effect.hpp"
#include "epiq/epistemic.hpp"
#include "epiq/hilbert.hpp"
#include "epiq/spin.hpp"

namespace epiq {

struct TransitionTable {
  std::string row_variable;
  std::string column_variable;
  std::vector<double> row_values;
  std::vector<double> column_values;
  std::vector<std::vector<double>> p;  // p[i][j] = P(column = u_j | row = u_i)

  /// Header row and column carry the outcome values.
  std::string to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << row_variable << '\\' << column_variable;
    for (double c : column_values) os << ',' << c;
    os << '\n';
    for (std::size_t i = 0; i < p.size(); ++i) {
      os << row_values[i];
      for (double x : p[i]) os << ',' << x;
      os << '\n';
    }
    return os.str();
  }
};

namespace detail {

inline void require_maximal(const AccessibleVariable& v, const Tolerances& tol) {
  if (!is_maximal(v, tol)) throw Error(ErrorKind::NotMaximal, v.name());
}

}  // namespace detail

/// |<a;i|b;j>|^2 = trace(P_i^a P_j^b) for maximal variables.
inline double transition_probability(const AccessibleVariable& va, std::size_t i, const AccessibleVariable& vb,
                                     std::size_t j, const Tolerances& tol = default_tolerances) {
  if (va.dim() != vb.dim()) throw Error(ErrorKind::DimMismatch, va.name() + " vs " + vb.name());
  detail::require_maximal(va, tol);
  detail::require_maximal(vb, tol);
  return checked_probability(trace_product(va.projectors().at(i), vb.projectors().at(j)).real(), tol);
}

inline TransitionTable transition_table(const AccessibleVariable& va, const AccessibleVariable& vb,
                                        const Tolerances& tol = default_tolerances) {
  TransitionTable t{va.name(), vb.name(), va.values(), vb.values(), {}};
  t.p.assign(va.size(), std::vector<double>(vb.size()));
  for (std::size_t i = 0; i < va.size(); ++i) {
    for (std::size_t j = 0; j < vb.size(); ++j) t.p[i][j] = transition_probability(va, i, vb, j, tol);
  }
  return t;
}

/// <s|P|s>
inline double born_projector(const StateVector& s, const Operator& p, const Tolerances& tol = default_tolerances) {
  if (!p.is_projector(tol.projector)) throw Error(ErrorKind::NotProjector, "born_projector");
  return checked_probability(expectation(s, p).real(), tol);
}

/// trace(P sigma)
inline double born_density(const DensityOperator& sigma, const Operator& p, const Tolerances& tol = default_tolerances) {
  if (!p.is_projector(tol.projector)) throw Error(ErrorKind::NotProjector, "born_density");
  return checked_probability(trace_product(p, sigma.op()).real(), tol);
}

/// trace(F sigma)
inline double likelihood_density(const DensityOperator& sigma, const LikelihoodEffect& f,
                                 const Tolerances& tol = default_tolerances) {
  return checked_probability(trace_product(f.op(), sigma.op()).real(), tol);
}

/// Overload validating a raw operator as an effect first.
inline double likelihood_density(const DensityOperator& sigma, const Operator& f,
                                 const Tolerances& tol = default_tolerances) {
  return likelihood_density(sigma, LikelihoodEffect(f, tol), tol);
}

/// Spin-1/2 closed form: P(theta^b = sign | theta^a = +1) = (1 + sign a.b) / 2,
/// where a.b is the cosine of the angle between the unit directions.
inline double spin_half_transition(const spin::Direction& a, const spin::Direction& b, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  return 0.5 * (1.0 + sign * spin::dot(a, b));
}

/// The component variable n . A of spin r, named `name`.
inline AccessibleVariable spin_component_variable(spin::SpinQuantumNumber s, const spin::Direction& n,
                                                  std::string name = "component") {
  return AccessibleVariable::from_operator(std::move(name), spin::component_operator(s, n));
}

/// The same probability as `spin_half_transition`, computed as the abstract
/// transition probability between the eigenvectors of a . A and b . A.
inline double spin_half_transition_abstract(const spin::Direction& a, const spin::Direction& b, int sign) {
  const spin::SpinQuantumNumber half{1};
  const auto va = spin_component_variable(half, a, "a");
  const auto vb = spin_component_variable(half, b, "b");
  const auto i = va.index_of(0.5);
  const auto j = vb.index_of(0.5 * sign);
  if (!i || !j) throw Error(ErrorKind::InvariantViolation, "spin-1/2 component lacks value +-1/2");
  return transition_probability(va, *i, vb, *j);
}

/// Joint law of the outcomes (alpha, beta) in {+1, -1}^2 of measuring a . sigma
/// on particle 1 and b . sigma on particle 2. Index 0 is outcome +1.
struct JointDistribution {
  std::array<std::array<double, 2>, 2> p{};

  static constexpr std::size_t index(int outcome) { return outcome > 0 ? 0 : 1; }
  double probability(int alpha, int beta) const { return p[index(alpha)][index(beta)]; }
  double total() const { return p[0][0] + p[0][1] + p[1][0] + p[1][1]; }
  double correlation() const { return p[0][0] + p[1][1] - p[0][1] - p[1][0]; }
};

/// (|+-> - |-+>) / sqrt(2) in the z-basis product ordering.
inline StateVector singlet_state() {
  Vector v = Vector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return StateVector(std::move(v));
}

inline JointDistribution singlet_joint(const spin::Direction& a, const spin::Direction& b) {
  const spin::SpinQuantumNumber half{1};
  const auto va = spin_component_variable(half, a, "a");
  const auto vb = spin_component_variable(half, b, "b");
  const StateVector psi = singlet_state();
  JointDistribution out;
  for (int alpha : {1, -1}) {
    for (int beta : {1, -1}) {
      const Operator& pa = va.projectors().at(*va.index_of(0.5 * alpha));
      const Operator& pb = vb.projectors().at(*vb.index_of(0.5 * beta));
      out.p[JointDistribution::index(alpha)][JointDistribution::index(beta)] =
          born_projector(psi, tensor(pa, pb));
    }
  }
  return out;
}

}  // namespace epiq
