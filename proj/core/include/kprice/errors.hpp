// Copyright 2026 The kprice Authors
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

#ifndef KPRICE_ERRORS_HPP_
#define KPRICE_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kprice {

// A caller violated an operation's contract: malformed profile, rank out of
// range, infeasible construction target. The message names the condition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration refused outright because the profile count would exceed the
// caller's budget; partial sweeps would invalidate completeness claims.
// required_profiles() saturates at UINT64_MAX for astronomically large grids.
class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("enumeration requires " + describe(required) +
                           " profiles, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required_profiles() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  static std::string describe(std::uint64_t required) {
    if (required == UINT64_MAX) return "more than 18446744073709551614";
    return std::to_string(required);
  }

  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace kprice

#endif  // KPRICE_ERRORS_HPP_
