// Copyright 2026 The Timeable Authors
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

#ifndef TIMEABLE_ERRORS_H_
#define TIMEABLE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace timeable {

enum class ErrorCode {
  kParse,         // malformed document
  kInvalid,       // well-formed input violating a model invariant
  kBudget,        // exact enumeration would exceed the support budget
  kArgument,      // bad parameter or precondition violation
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool cond, const std::string& what) {
  if (!cond) Fail(ErrorCode::kArgument, what);
}

// Default cap on the number of entries any exact enumeration may create.
inline constexpr std::size_t kDefaultBudget = 1'000'000;

inline void CheckBudget(std::size_t size, std::size_t budget,
                        const std::string& what) {
  if (size > budget) {
    Fail(ErrorCode::kBudget, what + ": support size " + std::to_string(size) +
                                 " exceeds budget " + std::to_string(budget));
  }
}

}  // namespace timeable

#endif  // TIMEABLE_ERRORS_H_
