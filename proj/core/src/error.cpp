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

#include "etd/error.hpp"

namespace etd {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotInvolution: return "NotInvolution";
    case ErrorCode::kNotPermutation: return "NotPermutation";
    case ErrorCode::kDanglingDart: return "DanglingDart";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kUnknownCell: return "UnknownCell";
    case ErrorCode::kMalformedColoring: return "MalformedColoring";
    case ErrorCode::kOddMarkedCount: return "OddMarkedCount";
    case ErrorCode::kArcOutsideComplementaryDisk:
      return "ArcOutsideComplementaryDisk";
    case ErrorCode::kNotAutomorphism: return "NotAutomorphism";
    case ErrorCode::kColorBroken: return "ColorBroken";
    case ErrorCode::kClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorCode::kNonFaithful: return "NonFaithful";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kNotValidAction: return "NotValidAction";
    case ErrorCode::kVoltageIncompatible: return "VoltageIncompatible";
    case ErrorCode::kMeridianMismatch: return "MeridianMismatch";
    case ErrorCode::kNotSphere: return "NotSphere";
    case ErrorCode::kEdgeInversionUnresolved: return "EdgeInversionUnresolved";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kNonStandardSlopes: return "NonStandardSlopes";
    case ErrorCode::kOpenFacet: return "OpenFacet";
    case ErrorCode::kNonSimplicialAction: return "NonSimplicialAction";
    case ErrorCode::kSurfaceNotInvariant: return "SurfaceNotInvariant";
    case ErrorCode::kNotClosedSurface: return "NotClosedSurface";
    case ErrorCode::kGenusMismatch: return "GenusMismatch";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace etd
