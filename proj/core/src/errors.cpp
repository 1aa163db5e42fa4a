// Copyright 2026 The phasecx Authors
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
//
#include "phasecx/errors.hpp"

namespace phasecx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPhysical: return "NonPhysical";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kDegenerateCat: return "DegenerateCat";
    case ErrorCode::kTruncationTooSevere: return "TruncationTooSevere";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kOrderingNotAdmissible: return "OrderingNotAdmissible";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kZeroMeanPhoton: return "ZeroMeanPhoton";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace phasecx
