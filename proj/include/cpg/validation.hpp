// Copyright (c) 2026 the cpgraphene developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpg::validation {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the full verification suite: quadrature and summation identities,
/// closed-form cross-checks, coefficient arithmetic, reflection bounds,
/// low-temperature asymptotic comparisons against the computed sums, and
/// output determinism. Progress notes go to `progress` when set.
std::vector<CheckResult> run_acceptance_checks(std::ostream* progress, int threads);

}  // namespace cpg::validation
