// Copyright 2026 The lexbound Authors
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

#ifndef LEXBOUND_ERRORS_HPP
#define LEXBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lexbound {

// Invalid input or a precondition the caller can fix (bad dimensions,
// wrong representation, infeasible instance). The CLI maps it to exit 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// S_I is empty where a point was demanded.
class InfeasibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed serialized input; `path` is a JSON pointer to the bad field.
class ParseError : public DomainError {
 public:
  ParseError(std::string path, const std::string& what)
      : DomainError(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// A configured budget or scale cap was hit. Never replaced by a heuristic
// answer. The CLI maps it to exit 2.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lexbound

#endif  // LEXBOUND_ERRORS_HPP
