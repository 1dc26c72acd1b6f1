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
/// Spin-r representation of SU(2): ladder and component operators,
/// rotations, spin coherent states and a quadrature check of the coherent
/// state resolution of the identity.
///
/// Basis order is m = +r, r-1, ..., -r, so index k holds m = r - k.

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/legendre.hpp>

#include "epiq/hilbert.hpp"

namespace epiq::spin {

struct SpinQuantumNumber {
  unsigned two_r = 0;

  double r() const noexcept { return 0.5 * two_r; }
  std::size_t dim() const noexcept { return two_r + 1; }
  /// m value stored at basis index k.
  double m(std::size_t k) const noexcept { return r() - static_cast<double>(k); }

  static SpinQuantumNumber from_r(double r) {
    const double twice = 2.0 * r;
    if (!(twice >= 0.0) || std::abs(twice - std::round(twice)) > 1e-12) {
      throw Error(ErrorKind::InvalidArgument, "spin must be a nonnegative multiple of 1/2");
    }
    return SpinQuantumNumber{static_cast<unsigned>(std::lround(twice))};
  }
};

class Direction {
 public:
  Direction(double x, double y, double z) : v_{x, y, z} {
    if (std::abs(std::hypot(x, y, z) - 1.0) > 1e-12) {
      throw Error(ErrorKind::InvalidArgument, "direction must be a unit vector");
    }
  }

  static Direction normalized(double x, double y, double z) {
    const double n = std::hypot(x, y, z);
    if (!(n > 0.0)) throw Error(ErrorKind::InvalidArgument, "cannot normalize a zero direction");
    return Direction(x / n, y / n, z / n);
  }
  /// Polar angle from +z, azimuth from +x.
  static Direction spherical(double polar, double azimuth) {
    return normalized(std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar));
  }
  /// Direction at `angle` radians from +z towards +x, in the x-z measurement plane.
  static Direction in_plane(double angle) { return normalized(std::sin(angle), 0.0, std::cos(angle)); }

  static Direction x_axis() { return {1.0, 0.0, 0.0}; }
  static Direction y_axis() { return {0.0, 1.0, 0.0}; }
  static Direction z_axis() { return {0.0, 0.0, 1.0}; }

  double x() const noexcept { return v_[0]; }
  double y() const noexcept { return v_[1]; }
  double z() const noexcept { return v_[2]; }
  const std::array<double, 3>& components() const noexcept { return v_; }

  Direction operator-() const { return Direction(-v_[0], -v_[1], -v_[2]); }

 private:
  std::array<double, 3> v_;
};

inline double dot(const Direction& a, const Direction& b) noexcept {
  return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

struct SpinOperators {
  Operator ax, ay, az;
  Operator a_plus, a_minus;

  /// A^2 = Ax^2 + Ay^2 + Az^2
  Operator casimir() const { return ax * ax + ay * ay + az * az; }
};

inline SpinOperators spin_operators(SpinQuantumNumber s) {
  const auto d = static_cast<Eigen::Index>(s.dim());
  const double r = s.r();
  Matrix plus = Matrix::Zero(d, d);
  Matrix z = Matrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double m = s.m(static_cast<std::size_t>(k));
    z(k, k) = m;
    // A+ |m> = sqrt(r(r+1) - m(m+1)) |m+1>, and |m+1> sits at index k-1.
    if (k > 0) plus(k - 1, k) = std::sqrt(r * (r + 1.0) - m * (m + 1.0));
  }
  const Matrix minus = plus.adjoint();
  return SpinOperators{
      Operator(0.5 * (plus + minus)),
      Operator((plus - minus) / (2.0 * kI)),
      Operator(z),
      Operator(plus),
      Operator(minus),
  };
}

/// Largest residual over the relations [A0, A+-] = +-A+- and [A-, A+] = -2 A0.
inline double commutation_residual(const SpinOperators& ops) {
  const double r1 = distance(commutator(ops.az, ops.a_plus), ops.a_plus);
  const double r2 = distance(commutator(ops.az, ops.a_minus), -ops.a_minus);
  const double r3 = distance(commutator(ops.a_minus, ops.a_plus), -2.0 * ops.az);
  return std::max({r1, r2, r3});
}

/// max |A^2 - r(r+1) I|
inline double casimir_residual(SpinQuantumNumber s, const SpinOperators& ops) {
  const double r = s.r();
  return distance(ops.casimir(), r * (r + 1.0) * Operator::identity(s.dim()));
}

/// n . A
inline Operator component_operator(SpinQuantumNumber s, const Direction& a) {
  const SpinOperators ops = spin_operators(s);
  return a.x() * ops.ax + a.y() * ops.ay + a.z() * ops.az;
}

/// exp[i omega (n . A)]. Conjugating by it rotates component operators:
/// U^dagger (b . A) U = (R b) . A with R the right-handed rotation by omega about n.
inline Operator rotation(SpinQuantumNumber s, const Direction& n, double omega) {
  return exp_i_hermitian(component_operator(s, n), omega);
}

/// |r; -r> carried from -z to direction a by the geodesic rotation about
/// (-z) x a (the x axis when a = +z), with the phase fixed so that the first
/// nonzero amplitude is real positive. The spin points along a: the state is
/// the +r eigenvector of a . A, equivalently the -r eigenvector of (-a) . A.
inline StateVector coherent_state(SpinQuantumNumber s, const Direction& a) {
  const StateVector lowest = StateVector::basis(s.dim(), s.dim() - 1);
  const double angle = std::acos(std::clamp(-a.z(), -1.0, 1.0));
  const double ax = a.y(), ay = -a.x();  // (-z) x a
  const double axis_norm = std::hypot(ax, ay);
  Operator u = Operator::identity(s.dim());
  if (axis_norm > 1e-14) {
    u = rotation(s, Direction(ax / axis_norm, ay / axis_norm, 0.0), -angle);
  } else if (a.z() > 0.0) {
    u = rotation(s, Direction::x_axis(), -angle);
  }
  return StateVector::normalized(u.matrix() * lowest.amplitudes()).canonical_phase();
}

/// Gauss-Legendre nodes and weights on [-1, 1].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "quadrature order must be positive");
  std::vector<double> nodes, weights;
  for (double x : boost::math::legendre_p_zeros<double>(order)) {
    const double dp = boost::math::legendre_p_prime(order, x);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes.push_back(x);
    weights.push_back(w);
    if (x != 0.0) {
      nodes.push_back(-x);
      weights.push_back(w);
    }
  }
  return {nodes, weights};
}

/// max | (d / 4 pi) sum_nodes w |a><a| - I | with `order` Gauss-Legendre nodes
/// in cos(polar) and 2 * order equally spaced azimuths.
inline double resolution_deviation(SpinQuantumNumber s, int order) {
  if (order < static_cast<int>(s.two_r) + 2) {
    throw Error(ErrorKind::InvalidArgument, "quadrature order must be at least 2r + 2");
  }
  const auto [nodes, weights] = gauss_legendre(order);
  const int azimuths = 2 * order;
  const double dphi = 2.0 * std::numbers::pi / azimuths;
  const auto d = static_cast<Eigen::Index>(s.dim());
  Matrix acc = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double polar = std::acos(nodes[i]);
    for (int k = 0; k < azimuths; ++k) {
      const StateVector v = coherent_state(s, Direction::spherical(polar, k * dphi));
      acc += (weights[i] * dphi) * (v.amplitudes() * v.amplitudes().adjoint());
    }
  }
  acc *= static_cast<double>(s.dim()) / (4.0 * std::numbers::pi);
  return detail::max_abs(acc - Matrix::Identity(d, d));
}

}  // namespace epiq::spin
