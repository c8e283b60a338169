// Copyright 2026 The bmgame Authors
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

#ifndef BMGAME_ERROR_HPP
#define BMGAME_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bmgame {

enum class ErrorKind {
  kParse,          // malformed document
  kInvalid,        // well-formed but violates a data invariant
  kUnknownAgent,   // vertex id not present in the instance
  kNotStar,
  kNotImputation,
  kGuard,          // size or budget guard exceeded
  kPrecondition,   // input outside the domain of a construction
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kInvalid: return "invalid input";
    case ErrorKind::kUnknownAgent: return "unknown agent";
    case ErrorKind::kNotStar: return "not a star";
    case ErrorKind::kNotImputation: return "not an imputation";
    case ErrorKind::kGuard: return "size guard exceeded";
    case ErrorKind::kPrecondition: return "precondition violated";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bmgame

#endif  // BMGAME_ERROR_HPP
