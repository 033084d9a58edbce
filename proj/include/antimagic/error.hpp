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

#ifndef ANTIMAGIC_ERROR_HPP_
#define ANTIMAGIC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace antimagic {

enum class ErrorCode {
  // graph_core
  kSelfLoop,
  kDuplicateEdge,
  kNodeOutOfRange,
  kRootNotInComponent,
  kInternalInvariant,
  // trails
  kOddDegree,
  kDisconnected,
  kEvenEverywhere,
  kOddSetMismatch,
  kIsolatedUNode,
  kSwapLoopOverrun,
  // labeler
  kSizeMismatch,
  kSharedEndpoint,
  kNotRegular,
  kDegreeTooLow,
  kNoValidRoot,
  kDisconnectedGeneralMode,
  kTooFewNodes,
  kVerificationFailed,
  // verify / liang
  kTooLarge,
  kSDegreeExceeded,
  kTDegreeExceeded,
  kNonBipartiteEdge,
  // generators
  kBadParameters,
  kInfeasibleParameters,
  kRejectionBudgetExhausted,
  // io
  kParseError,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// True for errors that mean "this input is outside what the construction
// covers", as opposed to malformed input or an internal bug.
bool is_rejection(ErrorCode code);

}  // namespace antimagic

#endif  // ANTIMAGIC_ERROR_HPP_
