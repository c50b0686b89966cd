// Copyright 2026 The ordtop Authors
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

#ifndef ORDTOP_ERROR_HPP
#define ORDTOP_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordtop {

// Numeric values are mirrored by the ordtop_status codes of the C API.
enum class ErrorCode : int {
  DuplicateLabel = 1,
  EmptyLabelList,
  MalformedLabel,
  UnsupportedSize,
  UnknownPoint,
  MissingEmptyPart,
  MissingFullPart,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  NotReflexive,
  NotTransitive,
  NotAntisymmetric,
  NonSquare,
  BadEntry,
  NonMonotoneStepIndex,
  InvalidDerivationStep,
  ShapeMismatch,
  IncompleteMap,
  ParseError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure in the library is reported as an Error. The witness holds
/// the offending point indices or part masks when the check has one: a pair
/// of masks for closure failures, a (q, p) or (q, p, r) index tuple for
/// relation failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::uint32_t> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::uint32_t> witness_;
};

}  // namespace ordtop

#endif  // ORDTOP_ERROR_HPP
