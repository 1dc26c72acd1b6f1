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

#include <stdexcept>
#include <string>
#include <string_view>

namespace epiq {

/// Every failure raised by the library carries one of these kinds. The CLI
/// prints `name()` verbatim on the diagnostic stream.
enum class ErrorKind {
  NotHermitian,
  NotUnitary,
  DimMismatch,
  NotProjector,
  NotEffect,
  NotMaximal,
  NotPermutation,
  NotDiagonal,
  NotPermissible,
  SpaceMismatch,
  ValueMismatch,
  BadDistribution,
  ZeroProbabilityBranch,
  ZeroEvidence,
  InvalidArgument,
  InvariantViolation,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::NotProjector: return "NotProjector";
    case ErrorKind::NotEffect: return "NotEffect";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::NotPermissible: return "NotPermissible";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::ValueMismatch: return "ValueMismatch";
    case ErrorKind::BadDistribution: return "BadDistribution";
    case ErrorKind::ZeroProbabilityBranch: return "ZeroProbabilityBranch";
    case ErrorKind::ZeroEvidence: return "ZeroEvidence";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace epiq
