/*
 * Copyright 2026 The isogeny-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ISOLAB_ERROR_HPP
#define ISOLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace isolab {

enum class ErrorCode {
  kUsage = 1,
  kDivideByZero = 2,
  kSingularCurve = 3,
  kDegenerateSum = 4,
  kInseparable = 5,
  kIdentityViolation = 6,
  kResourceLimit = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Bad arguments: invalid modulus, mismatched moduli, out-of-range scalars.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& w) : Error(ErrorCode::kUsage, w) {}
};

class DivideByZeroError : public Error {
 public:
  explicit DivideByZeroError(const std::string& w)
      : Error(ErrorCode::kDivideByZero, w) {}
};

// 4a^3 + 27b^2 = 0 in F_p.
class SingularCurveError : public Error {
 public:
  explicit SingularCurveError(const std::string& w)
      : Error(ErrorCode::kSingularCurve, w) {}
};

// Sum/difference composition of two equal x-maps; its denominators vanish
// identically.
class DegenerateSumError : public Error {
 public:
  explicit DegenerateSumError(const std::string& w)
      : Error(ErrorCode::kDegenerateSum, w) {}
};

// Multiplication map [m] with p | m.
class InseparableError : public Error {
 public:
  explicit InseparableError(const std::string& w)
      : Error(ErrorCode::kInseparable, w) {}
};

// A verified algebraic identity failed to hold. Must never fire; if it does,
// either the implementation or the identity itself is wrong.
class IdentityViolationError : public Error {
 public:
  explicit IdentityViolationError(const std::string& w)
      : Error(ErrorCode::kIdentityViolation, w) {}
};

// Input exceeds a documented enumeration or sweep bound.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& w)
      : Error(ErrorCode::kResourceLimit, w) {}
};

}  // namespace isolab

#endif  // ISOLAB_ERROR_HPP
