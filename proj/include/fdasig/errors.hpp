// Copyright 2026 The fdasig Authors.
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

#ifndef FDASIG_ERRORS_HPP
#define FDASIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fdasig {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
  using Error::Error;
};

/// Input bit string does not have the length the operation's domain requires.
struct DomainError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

struct EntropyError : Error {
  using Error::Error;
};

/// Exhaustive search would exceed the configured ForgeryBudget.
struct BudgetExceeded : Error {
  using Error::Error;
};

struct EmptyPreimageSet : Error {
  using Error::Error;
};

/// Malformed key/signature/evidence file. `line` is 1-based, 0 when the
/// problem is not attributable to a single line.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fdasig

#endif  // FDASIG_ERRORS_HPP
