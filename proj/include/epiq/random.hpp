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
/// Seeded random streams and random test objects. Every stochastic routine
/// derives an independent engine per (seed, stream index), so results do not
/// depend on the order in which streams are consumed.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "epiq/hilbert.hpp"

namespace epiq {

using Engine = std::mt19937_64;

namespace detail {

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Engine for substream `index` of `seed`.
inline Engine substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(detail::mix64(seed)), static_cast<std::uint32_t>(detail::mix64(seed) >> 32),
                    static_cast<std::uint32_t>(detail::mix64(index ^ 0x5851f42d4c957f2dULL)),
                    static_cast<std::uint32_t>(detail::mix64(index ^ 0x5851f42d4c957f2dULL) >> 32)};
  return Engine(seq);
}

/// Replicates are processed in fixed-size chunks, one substream per chunk.
inline constexpr std::uint64_t kChunkSize = 4096;

inline Matrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Engine& rng) {
  std::normal_distribution<double> n01;
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(n01(rng), n01(rng));
  }
  return m;
}

inline Operator random_hermitian(std::size_t d, Engine& rng) {
  const Matrix g = random_gaussian_matrix(d, d, rng);
  return Operator(0.5 * (g + g.adjoint()));
}

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
/// R's diagonal folded back into Q.
inline Operator random_unitary(std::size_t d, Engine& rng) {
  const Matrix g = random_gaussian_matrix(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex rkk = r(k, k);
    if (std::abs(rkk) > 0.0) q.col(k) *= rkk / std::abs(rkk);
  }
  return Operator(std::move(q));
}

inline StateVector random_state(std::size_t d, Engine& rng) {
  return StateVector::normalized(random_gaussian_matrix(d, 1, rng).col(0));
}

/// Random density operator W W^dagger / trace with W a d x d Ginibre matrix.
inline DensityOperator random_density(std::size_t d, Engine& rng) {
  const Matrix w = random_gaussian_matrix(d, d, rng);
  Matrix rho = w * w.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityOperator(Operator(std::move(rho)));
}

/// Uniform point on the probability simplex of dimension n.
inline std::vector<double> random_distribution(std::size_t n, Engine& rng) {
  std::exponential_distribution<double> e1(1.0);
  std::vector<double> p(n);
  double sum = 0.0;
  for (auto& x : p) sum += (x = e1(rng));
  for (auto& x : p) x /= sum;
  return p;
}

}  // namespace epiq
