// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace polycal {

/// Absolute tolerance used for zero tests unless a call overrides it.
inline constexpr double kDefaultTol = 1e-9;

/// Largest supported ambient dimension.
inline constexpr int kMaxAmbientDim = 12;

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  degenerate,
  not_found,
  parse,
  precondition,
  solver,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polycal
