// Copyright 2026 The Hexaforce Authors.
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

#ifndef HEXAFORCE_ERROR_HPP_
#define HEXAFORCE_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hexaforce {

enum class ErrorCode {
  kInvalidInput,
  kNotConnected,
  kNotCatacondensed,
  kOverlappingCells,
  kSingleHexagon,
  kNotMaximal,
  kNotAlternating,
  kNotACycle,
  kNoPerfectMatching,
  kMatchingLimitExceeded,
  kCycleLimitExceeded,
  kGrowthStuck,
  kIndexOutOfRange,
  kParseError,
};

inline constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNotCatacondensed: return "NotCatacondensed";
    case ErrorCode::kOverlappingCells: return "OverlappingCells";
    case ErrorCode::kSingleHexagon: return "SingleHexagon";
    case ErrorCode::kNotMaximal: return "NotMaximal";
    case ErrorCode::kNotAlternating: return "NotAlternating";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kNoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::kMatchingLimitExceeded: return "MatchingLimitExceeded";
    case ErrorCode::kCycleLimitExceeded: return "CycleLimitExceeded";
    case ErrorCode::kGrowthStuck: return "GrowthStuck";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

// All library failures are reported through this exception. `detail` carries
// an optional integer payload: the failing step for kNotAlternating, the
// 1-based line number for kParseError.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::int64_t detail = -1)
      : std::runtime_error(std::string(error_code_name(code)) + ": " +
                           message),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::int64_t detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::int64_t detail_;
};

}  // namespace hexaforce

#endif  // HEXAFORCE_ERROR_HPP_
