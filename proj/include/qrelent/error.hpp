// Copyright 2026 The qrelent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace qrelent {

enum class ErrorKind {
  NotHermitian,
  NotSquare,
  ConvergenceFailure,
  NegativeEigenvalue,
  DimensionMismatch,
  EmptyKeepSet,
  TraceNotOne,
  NotPositive,
  BadRank,
  BadParameter,
  NotTracePreserving,
  NotNormalized,
  NotPure,
  BadDecomposition,
  NotUnitary,
  BadParty,
  NotOrthonormal,
  StructureMismatch,
  DimensionTooLarge,
  NotLengthEigenstate,
  RegisterTooLarge,
  NotLengthOptimizing,
  InfeasibleLengths,
  NotCondensable,
  SupportViolation,
  ParseError,
  ValidationError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::BadDecomposition: return "BadDecomposition";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::BadParty: return "BadParty";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::NotLengthEigenstate: return "NotLengthEigenstate";
    case ErrorKind::RegisterTooLarge: return "RegisterTooLarge";
    case ErrorKind::NotLengthOptimizing: return "NotLengthOptimizing";
    case ErrorKind::InfeasibleLengths: return "InfeasibleLengths";
    case ErrorKind::NotCondensable: return "NotCondensable";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

/// Library-wide exception; `kind()` lets callers branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace qrelent
