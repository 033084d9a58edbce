// Copyright 2026 The antimagic Authors
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

#include "antimagic/error.hpp"

namespace antimagic {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kNodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::kRootNotInComponent: return "RootNotInComponent";
    case ErrorCode::kInternalInvariant: return "InternalInvariant";
    case ErrorCode::kOddDegree: return "OddDegree";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kEvenEverywhere: return "EvenEverywhere";
    case ErrorCode::kOddSetMismatch: return "OddSetMismatch";
    case ErrorCode::kIsolatedUNode: return "IsolatedUNode";
    case ErrorCode::kSwapLoopOverrun: return "SwapLoopOverrun";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kSharedEndpoint: return "SharedEndpoint";
    case ErrorCode::kNotRegular: return "NotRegular";
    case ErrorCode::kDegreeTooLow: return "DegreeTooLow";
    case ErrorCode::kNoValidRoot: return "NoValidRoot";
    case ErrorCode::kDisconnectedGeneralMode: return "DisconnectedGeneralMode";
    case ErrorCode::kTooFewNodes: return "TooFewNodes";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSDegreeExceeded: return "SDegreeExceeded";
    case ErrorCode::kTDegreeExceeded: return "TDegreeExceeded";
    case ErrorCode::kNonBipartiteEdge: return "NonBipartiteEdge";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kInfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::kRejectionBudgetExhausted:
      return "RejectionBudgetExhausted";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_rejection(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotRegular:
    case ErrorCode::kDegreeTooLow:
    case ErrorCode::kNoValidRoot:
    case ErrorCode::kDisconnectedGeneralMode:
    case ErrorCode::kTooFewNodes:
    case ErrorCode::kRootNotInComponent:
      return true;
    default:
      return false;
  }
}

}  // namespace antimagic
