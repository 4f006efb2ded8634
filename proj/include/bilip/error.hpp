// Copyright 2026 The bilip Authors
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


#ifndef BILIP_ERROR_HPP_
#define BILIP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace bilip {

// Machine-readable failure classes. Every construction reports its
// precondition and certificate failures through one of these.
enum class ErrorCode {
  kMalformedInterval,
  kZeroScale,
  kDegenerateInterval,
  kBadFraction,
  kNotDecreasing,
  kPrefixTooShort,
  kHypothesisFails,
  kRatioHypothesisFails,
  kPreconditionViolated,
  kInfeasible,
  kDensityTooLow,
  kHeadSelectionFails,
  kSupNotAttainedInPrefix,
  kNoAdmissibleIndex,
  kDepthTooSmall,
  kInequalityFails,
  kDeltaTooLarge,
  kRatioTooLarge,
  kNotFound,
  kMeasureTooSmall,
  kDepthExceedsPrefix,
  kNoAdmissibleScale,
  kConnectorSlopeOutOfRange,
  kParseError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for the classes that signal a bug in a construction rather than a
// bad input: the construction guarantees they cannot happen.
bool IsInternalError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bilip

#endif  // BILIP_ERROR_HPP_
