//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_ERROR_HPP_
#define HSFORCE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsforce {

enum class ErrorCode {
  kInvalidArgument,
  kDegenerateSimplex,
  kNotFullDimensional,
  kInfeasibleLengths,
  kConcentricSpheres,
  kZeroRadius,
  kOutOfRange,
  kUnsupported,
  kNoSmallLength,
  kTargetTooLarge,
  kCollinearPoints,
  kTooManyPoints,
  kNotAdmissible,
  kPrefixTooLarge,
  kUnsupportedDimension,
  kOverflow,
  kParse,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error: public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) { }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace hsforce

#endif  // HSFORCE_ERROR_HPP_
