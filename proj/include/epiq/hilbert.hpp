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
/// Finite-dimensional complex linear algebra: operators, unit state vectors,
/// density operators and the Hermitian spectral decomposition that turns an
/// operator into a resolution of the identity.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "epiq/error.hpp"
#include "epiq/tolerance.hpp"

namespace epiq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

namespace detail {

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline std::string dims(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace detail

/// Square complex matrix with finite entries. Value type; immutable through
/// its public interface.
class Operator {
 public:
  explicit Operator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
      throw Error(ErrorKind::InvalidArgument, "operator must be square and non-empty");
    }
    if (!m_.allFinite()) throw Error(ErrorKind::InvalidArgument, "operator has non-finite entries");
  }

  static Operator identity(std::size_t d) { return Operator(Matrix::Identity(idx(d), idx(d))); }
  static Operator zero(std::size_t d) { return Operator(Matrix::Zero(idx(d), idx(d))); }
  static Operator diagonal(std::span<const double> diag) {
    Matrix m = Matrix::Zero(idx(diag.size()), idx(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i) m(idx(i), idx(i)) = diag[i];
    return Operator(std::move(m));
  }
  static Operator diagonal(std::initializer_list<double> diag) {
    return diagonal(std::span<const double>(diag.begin(), diag.size()));
  }

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(idx(i), idx(j)); }

  Operator adjoint() const { return Operator(m_.adjoint()); }
  Complex trace() const { return m_.trace(); }
  /// Largest entry modulus; the norm used by every tolerance check.
  double max_abs() const { return detail::max_abs(m_); }

  bool is_hermitian(double tol = default_tolerances.hermitian) const {
    return detail::max_abs(m_ - m_.adjoint()) <= tol;
  }
  bool is_unitary(double tol = default_tolerances.unitary) const {
    return detail::max_abs(m_.adjoint() * m_ - Matrix::Identity(m_.rows(), m_.cols())) <= tol;
  }
  bool is_projector(double tol = default_tolerances.projector) const {
    return is_hermitian(tol) && detail::max_abs(m_ * m_ - m_) <= tol;
  }

  friend Operator operator+(const Operator& a, const Operator& b) {
    require_same(a, b);
    return Operator(a.m_ + b.m_);
  }
  friend Operator operator-(const Operator& a, const Operator& b) {
    require_same(a, b);
    return Operator(a.m_ - b.m_);
  }
  friend Operator operator*(const Operator& a, const Operator& b) {
    require_same(a, b);
    return Operator(a.m_ * b.m_);
  }
  friend Operator operator*(Complex s, const Operator& a) { return Operator(s * a.m_); }
  friend Operator operator*(double s, const Operator& a) { return Operator(s * a.m_); }
  Operator operator-() const { return Operator(-m_); }

  static void require_same(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimMismatch, detail::dims(a.dim(), b.dim()));
  }

 private:
  static Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }
  Matrix m_;
};

/// Max-entry distance between two operators of equal dimension.
inline double distance(const Operator& a, const Operator& b) { return (a - b).max_abs(); }

inline Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

/// Unit vector in C^d.
class StateVector {
 public:
  explicit StateVector(Vector v, double tol = default_tolerances.norm) : v_(std::move(v)) {
    if (v_.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty state vector");
    if (!v_.allFinite()) throw Error(ErrorKind::InvalidArgument, "state has non-finite amplitudes");
    if (std::abs(v_.norm() - 1.0) > tol) {
      throw Error(ErrorKind::InvalidArgument,
                  "state vector norm " + std::to_string(v_.norm()) + " differs from 1");
    }
  }

  static StateVector normalized(Vector v) {
    const double n = v.norm();
    if (!(n > 0.0)) throw Error(ErrorKind::InvalidArgument, "cannot normalize a zero vector");
    return StateVector(v / n);
  }
  static StateVector basis(std::size_t d, std::size_t k) {
    if (k >= d) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
    Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return StateVector(std::move(v));
  }

  std::size_t dim() const noexcept { return static_cast<std::size_t>(v_.size()); }
  const Vector& amplitudes() const noexcept { return v_; }
  Complex operator[](std::size_t i) const { return v_(static_cast<Eigen::Index>(i)); }

  /// |v><v|
  Operator projector() const { return Operator(v_ * v_.adjoint()); }

  /// The same ray with its first non-negligible amplitude made real positive.
  StateVector canonical_phase(double zero_tol = 1e-12) const {
    for (Eigen::Index i = 0; i < v_.size(); ++i) {
      if (std::abs(v_(i)) > zero_tol) {
        const Complex phase = std::conj(v_(i)) / std::abs(v_(i));
        return StateVector(v_ * phase);
      }
    }
    return *this;
  }

 private:
  Vector v_;
};

/// <a|b>
inline Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimMismatch, detail::dims(a.dim(), b.dim()));
  return a.amplitudes().dot(b.amplitudes());
}

/// <s|A|s>
inline Complex expectation(const StateVector& s, const Operator& a) {
  if (s.dim() != a.dim()) throw Error(ErrorKind::DimMismatch, detail::dims(s.dim(), a.dim()));
  return s.amplitudes().dot(a.matrix() * s.amplitudes());
}

/// Hermitian, positive semidefinite, trace one.
class DensityOperator {
 public:
  explicit DensityOperator(Operator op, const Tolerances& tol = default_tolerances)
      : op_(std::move(op)) {
    if (!op_.is_hermitian(tol.hermitian)) {
      throw Error(ErrorKind::NotHermitian, "density operator is not Hermitian");
    }
    if (std::abs(op_.trace() - 1.0) > tol.trace) {
      throw Error(ErrorKind::InvariantViolation, "density operator trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(op_.matrix(), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol.positivity) {
      throw Error(ErrorKind::InvariantViolation, "density operator has a negative eigenvalue");
    }
  }

  static DensityOperator pure(const StateVector& s) { return DensityOperator(s.projector()); }
  static DensityOperator maximally_mixed(std::size_t d) {
    return DensityOperator((1.0 / static_cast<double>(d)) * Operator::identity(d));
  }

  std::size_t dim() const noexcept { return op_.dim(); }
  const Operator& op() const noexcept { return op_; }
  const Matrix& matrix() const noexcept { return op_.matrix(); }

 private:
  Operator op_;
};

/// Spectral form H = sum_j u_j P_j with distinct ascending u_j.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Operator> projectors;

  std::size_t dim() const { return projectors.empty() ? 0 : projectors.front().dim(); }

  Operator reconstruct() const {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) m += eigenvalues[j] * projectors[j].matrix();
    return Operator(std::move(m));
  }

  Operator projector_sum() const {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
    for (const auto& p : projectors) m += p.matrix();
    return Operator(std::move(m));
  }
};

/// Spectral decomposition of a Hermitian operator. Adjacent eigenvalues closer
/// than `tol.degeneracy * (1 + |u|)` share one eigenspace; the merged value is
/// the mean of the cluster.
inline EigenDecomposition eig_hermitian(const Operator& h, const Tolerances& tol = default_tolerances) {
  if (!h.is_hermitian(tol.hermitian)) throw Error(ErrorKind::NotHermitian, "eig_hermitian input");
  // Symmetrize so the solver sees an exactly Hermitian matrix.
  const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::InvariantViolation, "eigensolver failed");

  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  const Eigen::Index n = vals.size();

  EigenDecomposition out;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && vals(stop) - vals(stop - 1) < tol.degeneracy * (1.0 + std::abs(vals(stop - 1)))) {
      ++stop;
    }
    double sum = 0.0;
    Matrix p = Matrix::Zero(n, n);
    for (Eigen::Index k = start; k < stop; ++k) {
      sum += vals(k);
      p += vecs.col(k) * vecs.col(k).adjoint();
    }
    out.eigenvalues.push_back(sum / static_cast<double>(stop - start));
    out.projectors.emplace_back(std::move(p));
    start = stop;
  }
  return out;
}

/// Eigenvalues with multiplicity, ascending.
inline std::vector<double> spectrum(const Operator& h, const Tolerances& tol = default_tolerances) {
  if (!h.is_hermitian(tol.hermitian)) throw Error(ErrorKind::NotHermitian, "spectrum input");
  const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

/// Kronecker product A (x) B.
inline Operator tensor(const Operator& a, const Operator& b) {
  return Operator(Matrix(Eigen::kroneckerProduct(a.matrix(), b.matrix())));
}

/// U^dagger A U.
inline Operator conjugate(const Operator& u, const Operator& a, const Tolerances& tol = default_tolerances) {
  Operator::require_same(u, a);
  if (!u.is_unitary(tol.unitary)) throw Error(ErrorKind::NotUnitary, "conjugate");
  return Operator(u.matrix().adjoint() * a.matrix() * u.matrix());
}

/// trace(AB) = sum_ik A_ik B_ki, without forming the product.
inline Complex trace_product(const Operator& a, const Operator& b) {
  Operator::require_same(a, b);
  return a.matrix().cwiseProduct(b.matrix().transpose()).sum();
}

/// Operator exponential exp(i t H) for Hermitian H, through its spectrum.
inline Operator exp_i_hermitian(const Operator& h, double t) {
  if (!h.is_hermitian()) throw Error(ErrorKind::NotHermitian, "exp_i_hermitian input");
  const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  Vector phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::exp(kI * (t * es.eigenvalues()(k)));
  return Operator(es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint());
}

/// Rank of a projector, read off its trace.
inline std::size_t projector_rank(const Operator& p) {
  return static_cast<std::size_t>(std::llround(p.trace().real()));
}

}  // namespace epiq
