// Copyright 2026 The pardeg Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pardeg {

enum class ErrorCode {
  ArityMismatch,
  InvalidArgument,
  ComparableRows,
  InconsistentOutputs,
  DuplicateEntry,
  NotMonotone,
  BoundExceeded,
  BudgetExceeded,
  ParseError,
  Inapplicable,
  Internal,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ComparableRows: return "ComparableRows";
    case ErrorCode::InconsistentOutputs: return "InconsistentOutputs";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Inapplicable: return "Inapplicable";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when a search would need more states than it was allowed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what_search, std::uint64_t required,
                 std::uint64_t allowed)
      : Error(ErrorCode::BudgetExceeded,
              what_search + " needs " + describe(required) + " states, budget is " +
                  std::to_string(allowed)),
        required_(required),
        allowed_(allowed) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t allowed() const { return allowed_; }

 private:
  static std::string describe(std::uint64_t n) {
    return n == UINT64_MAX ? std::string(">=2^64") : std::to_string(n);
  }

  std::uint64_t required_;
  std::uint64_t allowed_;
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

}  // namespace detail
}  // namespace pardeg
