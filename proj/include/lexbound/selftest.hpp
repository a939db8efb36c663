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

// Built-in sanity suite behind `lexbound selftest`. The quick level checks
// small hand-computable cases; the full level adds seeded differential runs
// against the enumeration oracle.

#ifndef LEXBOUND_SELFTEST_HPP
#define LEXBOUND_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lexbound/options.hpp"

namespace lexbound {

enum class SelftestLevel { quick, full };

SelftestLevel selftest_level_from_string(std::string_view s);

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on success
};

std::vector<SelftestResult> run_selftest(SelftestLevel level, std::uint64_t seed,
                                         const SolverOptions& options = {});

}  // namespace lexbound

#endif  // LEXBOUND_SELFTEST_HPP
