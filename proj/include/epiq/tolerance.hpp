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

namespace epiq {

/// Numerical tolerances shared by every module. Operations that take a
/// `Tolerances` argument default to `Tolerances{}`; tests tighten or loosen
/// individual fields per call.
struct Tolerances {
  double hermitian = 1e-10;     // max |H - H^dagger| entry
  double unitary = 1e-10;       // max |U^dagger U - I| entry
  double norm = 1e-10;          // |  ||v|| - 1 |
  double trace = 1e-10;         // | trace(sigma) - 1 |
  double positivity = 1e-10;    // smallest admissible eigenvalue is -positivity
  double projector = 1e-10;     // max |P^2 - P| entry
  double completeness = 1e-10;  // max |sum - I| entry
  double degeneracy = 1e-8;     // eigenvalue merge gap, relative to 1 + |u|
  double value_match = 1e-8;    // equality of real variable values
  double rank = 1e-8;           // |trace(P) - 1| for rank-one projectors
  double catalog_match = 1e-9;  // |<a;j|s>| > 1 - catalog_match
  double clamp = 1e-12;         // probabilities outside [0,1] by less than this are clamped
  double zero_branch = 1e-12;   // Kraus branches at or below this probability have no state
  double diagonal = 1e-10;      // max off-diagonal entry of a "diagonal" operator
};

inline constexpr Tolerances default_tolerances{};

}  // namespace epiq
