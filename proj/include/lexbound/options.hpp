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

#ifndef LEXBOUND_OPTIONS_HPP
#define LEXBOUND_OPTIONS_HPP

#include <cstddef>
#include <cstdint>

namespace lexbound {

struct SolverOptions {
  /// Search nodes allowed per feasibility query.
  std::uint64_t node_cap = 1'000'000;
  /// Largest number of explicit lex constraints handled by fixing enumeration.
  std::size_t fixing_cap = 3;
  /// Largest box (in points) that may be enumerated outright.
  std::uint64_t enumeration_cap = 1'000'000;
  /// Worker threads for per-permutation loops; results are order-independent.
  unsigned jobs = 1;
};

/// Defaults with LEXBOUND_NODE_CAP applied when set.
SolverOptions options_from_environment();

}  // namespace lexbound

#endif  // LEXBOUND_OPTIONS_HPP
