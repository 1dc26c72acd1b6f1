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

#pragma once

#include <algorithm>
#include <string>

#include "epiq/hilbert.hpp"

namespace epiq {

/// Checks that p is a probability up to `tol.clamp`, then clamps it into [0, 1].
inline double checked_probability(double p, const Tolerances& tol = default_tolerances) {
  if (!(p >= -tol.clamp && p <= 1.0 + tol.clamp)) {
    throw Error(ErrorKind::InvariantViolation, "probability " + std::to_string(p) + " outside [0, 1]");
  }
  return std::clamp(p, 0.0, 1.0);
}


/// Hermitian operator F with 0 <= F <= I.
class LikelihoodEffect {
 public:
  explicit LikelihoodEffect(Operator op, const Tolerances& tol = default_tolerances) : op_(std::move(op)) {
    if (!op_.is_hermitian(tol.hermitian)) throw Error(ErrorKind::NotEffect, "effect is not Hermitian");
    const auto ev = spectrum(op_, tol);
    if (ev.front() < -tol.positivity || ev.back() > 1.0 + tol.positivity) {
      throw Error(ErrorKind::NotEffect, "effect spectrum leaves [0, 1]");
    }
  }

  std::size_t dim() const noexcept { return op_.dim(); }
  const Operator& op() const noexcept { return op_; }

  friend LikelihoodEffect operator+(const LikelihoodEffect& a, const LikelihoodEffect& b) {
    return LikelihoodEffect(a.op_ + b.op_);
  }

 private:
  Operator op_;
};

}  // namespace epiq
