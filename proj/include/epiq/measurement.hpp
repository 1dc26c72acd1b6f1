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
/// Measurement side: statistical models, likelihood effects, POVMs,
/// density operators built from priors over an accessible variable, the
/// evidence functional q(F) = trace(sigma F), and Kraus instrument updates.
///
/// Every evidence computation here takes (state, effect) and nothing else, so
/// two models that produce the same effect cannot be told apart.

#pragma once

#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "epiq/effect.hpp"
#include "epiq/epistemic.hpp"
#include "epiq/hilbert.hpp"
#include "epiq/random.hpp"

namespace epiq {

/// p(x | theta = u_j) for finitely many sample points x and parameter values u_j.
class StatisticalModel {
 public:
  /// `likelihood[x][j]` is p(x | u_j); every column sums to one.
  StatisticalModel(std::vector<double> parameters, std::vector<std::string> samples,
                   std::vector<std::vector<double>> likelihood, double tol = default_tolerances.completeness)
      : parameters_(std::move(parameters)), samples_(std::move(samples)), likelihood_(std::move(likelihood)) {
    if (parameters_.empty() || samples_.empty()) throw Error(ErrorKind::InvalidArgument, "empty statistical model");
    if (likelihood_.size() != samples_.size()) {
      throw Error(ErrorKind::InvalidArgument, "likelihood needs one row per sample point");
    }
    std::vector<double> col(parameters_.size(), 0.0);
    for (const auto& row : likelihood_) {
      if (row.size() != parameters_.size()) {
        throw Error(ErrorKind::InvalidArgument, "likelihood row needs one entry per parameter value");
      }
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!(row[j] >= 0.0 && row[j] <= 1.0)) throw Error(ErrorKind::BadDistribution, "likelihood entry outside [0, 1]");
        col[j] += row[j];
      }
    }
    for (double c : col) {
      if (std::abs(c - 1.0) > tol) throw Error(ErrorKind::BadDistribution, "likelihood column does not sum to 1");
    }
  }

  const std::vector<double>& parameters() const noexcept { return parameters_; }
  const std::vector<std::string>& samples() const noexcept { return samples_; }
  const std::vector<std::vector<double>>& table() const noexcept { return likelihood_; }
  double likelihood(std::size_t x, std::size_t j) const { return likelihood_.at(x).at(j); }
  std::size_t sample_count() const noexcept { return samples_.size(); }

  std::size_t sample_index(const std::string& label) const {
    for (std::size_t x = 0; x < samples_.size(); ++x) {
      if (samples_[x] == label) return x;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown sample point " + label);
  }

 private:
  std::vector<double> parameters_;
  std::vector<std::string> samples_;
  std::vector<std::vector<double>> likelihood_;
};

namespace detail {

// model parameter j -> index of the same value in v
inline std::vector<std::size_t> parameter_indices(const StatisticalModel& m, const AccessibleVariable& v,
                                                  const Tolerances& tol) {
  if (m.parameters().size() != v.size()) throw Error(ErrorKind::ValueMismatch, "model and variable value counts differ");
  std::vector<std::size_t> out;
  for (double u : m.parameters()) {
    const auto k = v.index_of(u, tol.value_match);
    if (!k) throw Error(ErrorKind::ValueMismatch, "parameter " + std::to_string(u) + " is not a value of " + v.name());
    out.push_back(*k);
  }
  return out;
}

}  // namespace detail

/// F(x) = sum_j p(x | u_j) P_j
inline LikelihoodEffect likelihood_effect(const StatisticalModel& m, const AccessibleVariable& v, std::size_t x,
                                          const Tolerances& tol = default_tolerances) {
  const auto idx = detail::parameter_indices(m, v, tol);
  const auto d = static_cast<Eigen::Index>(v.dim());
  Matrix f = Matrix::Zero(d, d);
  for (std::size_t j = 0; j < idx.size(); ++j) f += m.likelihood(x, j) * v.projectors()[idx[j]].matrix();
  return LikelihoodEffect(Operator(std::move(f)), tol);
}

class Povm {
 public:
  explicit Povm(std::vector<LikelihoodEffect> effects, const Tolerances& tol = default_tolerances)
      : effects_(std::move(effects)) {
    if (effects_.empty()) throw Error(ErrorKind::InvalidArgument, "POVM needs at least one effect");
    if (completeness_residual() > tol.completeness) {
      throw Error(ErrorKind::InvariantViolation, "POVM effects do not sum to the identity");
    }
  }

  const std::vector<LikelihoodEffect>& effects() const noexcept { return effects_; }
  std::size_t size() const noexcept { return effects_.size(); }
  std::size_t dim() const noexcept { return effects_.front().dim(); }

  /// max | sum_j M(j) - I |
  double completeness_residual() const {
    Operator sum = Operator::zero(effects_.front().dim());
    for (const auto& e : effects_) sum = sum + e.op();
    return distance(sum, Operator::identity(sum.dim()));
  }

 private:
  std::vector<LikelihoodEffect> effects_;
};

/// M(x) = F(x) over every sample point of the model.
inline Povm povm_of_model(const StatisticalModel& m, const AccessibleVariable& v,
                          const Tolerances& tol = default_tolerances) {
  std::vector<LikelihoodEffect> effects;
  for (std::size_t x = 0; x < m.sample_count(); ++x) effects.push_back(likelihood_effect(m, v, x, tol));
  return Povm(std::move(effects), tol);
}

/// sigma = sum_j pi_j P_j / rank(P_j)
inline DensityOperator density_of(const std::vector<double>& pi, const AccessibleVariable& v,
                                  const Tolerances& tol = default_tolerances) {
  if (pi.size() != v.size()) throw Error(ErrorKind::BadDistribution, "need one probability per value");
  double sum = 0.0;
  for (double p : pi) {
    if (!(p >= 0.0)) throw Error(ErrorKind::BadDistribution, "negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol.completeness) throw Error(ErrorKind::BadDistribution, "probabilities do not sum to 1");
  const auto d = static_cast<Eigen::Index>(v.dim());
  Matrix s = Matrix::Zero(d, d);
  for (std::size_t j = 0; j < pi.size(); ++j) {
    s += (pi[j] / v.projectors()[j].trace().real()) * v.projectors()[j].matrix();
  }
  return DensityOperator(Operator(std::move(s)), tol);
}

/// The evidence functional q(F) = trace(sigma F) on effects.
class Evidence {
 public:
  explicit Evidence(DensityOperator sigma) : sigma_(std::move(sigma)) {}

  double operator()(const LikelihoodEffect& f) const {
    if (f.dim() != sigma_.dim()) throw Error(ErrorKind::DimMismatch, "evidence");
    return trace_product(sigma_.op(), f.op()).real();
  }
  /// Validates `f` as an effect first; raises NotEffect otherwise.
  double operator()(const Operator& f) const { return (*this)(LikelihoodEffect(f)); }

  const DensityOperator& state() const noexcept { return sigma_; }

 private:
  DensityOperator sigma_;
};

inline Evidence evidence(DensityOperator sigma) { return Evidence(std::move(sigma)); }

class KrausInstrument {
 public:
  explicit KrausInstrument(std::vector<Operator> kraus, const Tolerances& tol = default_tolerances)
      : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw Error(ErrorKind::InvalidArgument, "instrument needs at least one Kraus operator");
    for (const auto& a : kraus_) Operator::require_same(a, kraus_.front());
    if (completeness_residual() > tol.completeness) {
      throw Error(ErrorKind::InvariantViolation, "Kraus operators do not satisfy sum A^dagger A = I");
    }
  }

  const std::vector<Operator>& kraus() const noexcept { return kraus_; }
  std::size_t size() const noexcept { return kraus_.size(); }
  std::size_t dim() const noexcept { return kraus_.front().dim(); }

  /// M(j) = A_j^dagger A_j
  Operator effect(std::size_t j) const { return kraus_.at(j).adjoint() * kraus_.at(j); }

  double completeness_residual() const {
    Operator sum = Operator::zero(dim());
    for (std::size_t j = 0; j < size(); ++j) sum = sum + effect(j);
    return distance(sum, Operator::identity(dim()));
  }

 private:
  std::vector<Operator> kraus_;
};

/// Raised for a branch whose probability is at or below the zero-branch
/// threshold; the probability itself is still available.
class ZeroProbabilityBranchError : public Error {
 public:
  ZeroProbabilityBranchError(std::size_t branch, double probability)
      : Error(ErrorKind::ZeroProbabilityBranch,
              "branch " + std::to_string(branch) + " has probability " + std::to_string(probability)),
        probability_(probability) {}
  double probability() const noexcept { return probability_; }

 private:
  double probability_;
};

/// p_j = trace(A_j^dagger A_j sigma)
inline double branch_probability(const KrausInstrument& k, const DensityOperator& sigma, std::size_t j,
                                 const Tolerances& tol = default_tolerances) {
  if (k.dim() != sigma.dim()) throw Error(ErrorKind::DimMismatch, "kraus_update");
  return checked_probability(trace_product(k.effect(j), sigma.op()).real(), tol);
}

struct KrausUpdate {
  double probability;
  DensityOperator state;
};

/// (p_j, A_j sigma A_j^dagger / p_j)
inline KrausUpdate kraus_update(const KrausInstrument& k, const DensityOperator& sigma, std::size_t j,
                                const Tolerances& tol = default_tolerances) {
  const double p = branch_probability(k, sigma, j, tol);
  if (p <= tol.zero_branch) throw ZeroProbabilityBranchError(j, p);
  const Matrix& a = k.kraus().at(j).matrix();
  Matrix post = a * sigma.matrix() * a.adjoint() / p;
  post = 0.5 * (post + post.adjoint());
  return {p, DensityOperator(Operator(std::move(post)), tol)};
}

struct PosteriorComparison {
  double probability;                  // p_j
  std::vector<double> kraus_posterior;  // diagonal of the updated state
  std::vector<double> bayes_posterior;  // prior(n) |A_j(n,n)|^2 / p_j
};

/// For an instrument diagonal in the working basis, the Kraus update of the
/// prior state sum_n prior(n)|n><n| against Bayes' rule with likelihood
/// P(j | n) = |A_j(n, n)|^2.
inline PosteriorComparison diagonal_kraus_vs_bayes(const KrausInstrument& k, const std::vector<double>& prior,
                                                   std::size_t j, const Tolerances& tol = default_tolerances) {
  for (const auto& a : k.kraus()) {
    Matrix off = a.matrix();
    off.diagonal().setZero();
    if (detail::max_abs(off) > tol.diagonal) throw Error(ErrorKind::NotDiagonal, "diagonal_kraus_vs_bayes");
  }
  if (prior.size() != k.dim()) throw Error(ErrorKind::BadDistribution, "prior length differs from dimension");
  const DensityOperator sigma(Operator::diagonal(std::span<const double>(prior)), tol);
  const KrausUpdate upd = kraus_update(k, sigma, j, tol);

  PosteriorComparison out{upd.probability, {}, {}};
  const Matrix& a = k.kraus().at(j).matrix();
  double evidence = 0.0;
  for (std::size_t n = 0; n < prior.size(); ++n) {
    const auto nn = static_cast<Eigen::Index>(n);
    out.bayes_posterior.push_back(prior[n] * std::norm(a(nn, nn)));
    evidence += out.bayes_posterior.back();
    out.kraus_posterior.push_back(upd.state.matrix()(nn, nn).real());
  }
  for (double& p : out.bayes_posterior) p /= evidence;
  return out;
}

/// P(X = x | sigma) = trace(M(x) sigma)
inline double data_probability(const DensityOperator& sigma, const StatisticalModel& m, const AccessibleVariable& v,
                               std::size_t x, const Tolerances& tol = default_tolerances) {
  return checked_probability(evidence(sigma)(likelihood_effect(m, v, x, tol)), tol);
}

/// Random instrument with `branches` Kraus operators in dimension d: the
/// blocks of the Q factor of a random (branches * d) x d matrix.
inline KrausInstrument random_instrument(std::size_t d, std::size_t branches, Engine& rng) {
  const Matrix g = random_gaussian_matrix(d * branches, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix q = qr.householderQ() * Matrix::Identity(g.rows(), g.cols());
  std::vector<Operator> kraus;
  const auto dd = static_cast<Eigen::Index>(d);
  for (std::size_t j = 0; j < branches; ++j) kraus.emplace_back(q.block(static_cast<Eigen::Index>(j) * dd, 0, dd, dd));
  return KrausInstrument(std::move(kraus));
}

/// Random diagonal instrument: |A_j(n, n)|^2 is a random distribution over j
/// for each n, with random phases.
inline KrausInstrument random_diagonal_instrument(std::size_t d, std::size_t branches, Engine& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<Matrix> blocks(branches, Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
  for (std::size_t n = 0; n < d; ++n) {
    const auto p = random_distribution(branches, rng);
    const auto nn = static_cast<Eigen::Index>(n);
    for (std::size_t j = 0; j < branches; ++j) blocks[j](nn, nn) = std::sqrt(p[j]) * std::exp(kI * phase(rng));
  }
  std::vector<Operator> kraus;
  for (auto& b : blocks) kraus.emplace_back(std::move(b));
  return KrausInstrument(std::move(kraus));
}

/// Random model over the given parameter values with `samples` sample points.
inline StatisticalModel random_model(std::vector<double> parameters, std::size_t samples, Engine& rng) {
  std::vector<std::vector<double>> table(samples, std::vector<double>(parameters.size()));
  for (std::size_t j = 0; j < parameters.size(); ++j) {
    const auto col = random_distribution(samples, rng);
    for (std::size_t x = 0; x < samples; ++x) table[x][j] = col[x];
  }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < samples; ++x) labels.push_back("x" + std::to_string(x));
  return StatisticalModel(std::move(parameters), std::move(labels), std::move(table));
}

/// Random maximal variable: values 0..d-1 on the basis given by a random unitary.
inline AccessibleVariable random_maximal_variable(std::size_t d, Engine& rng, std::string name = "theta") {
  const Operator u = random_unitary(d, rng);
  std::vector<double> values(d);
  std::iota(values.begin(), values.end(), 0.0);
  std::vector<StateVector> basis;
  for (std::size_t k = 0; k < d; ++k) basis.push_back(StateVector::normalized(u.matrix().col(static_cast<Eigen::Index>(k))));
  return AccessibleVariable::from_basis(std::move(name), std::move(values), basis);
}

}  // namespace epiq
