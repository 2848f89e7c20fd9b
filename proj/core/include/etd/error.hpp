// Copyright 2026 The Equivariant Trisection Diagrams Authors.
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

#ifndef ETD_ERROR_HPP_
#define ETD_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace etd {

enum class ErrorCode {
  kNotInvolution,
  kNotPermutation,
  kDanglingDart,
  kNotClosed,
  kNotConnected,
  kUnknownCell,
  kMalformedColoring,
  kOddMarkedCount,
  kArcOutsideComplementaryDisk,
  kNotAutomorphism,
  kColorBroken,
  kClosureCapExceeded,
  kNonFaithful,
  kNotNormal,
  kNotValidAction,
  kVoltageIncompatible,
  kMeridianMismatch,
  kNotSphere,
  kEdgeInversionUnresolved,
  kUnknownName,
  kNonStandardSlopes,
  kOpenFacet,
  kNonSimplicialAction,
  kSurfaceNotInvariant,
  kNotClosedSurface,
  kGenusMismatch,
  kParse,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every library failure is reported through this exception type. The code
// lets callers triage without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace etd

#endif  // ETD_ERROR_HPP_
