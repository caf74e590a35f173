// Copyright 2026 The esdsim Authors
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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace esd::cli {

struct SuiteReport {
  std::string name;
  int passed = 0;
  int total = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string first_failure;  ///< parameters of the first failing case

  bool ok() const { return passed == total; }
};

/// Runs every randomized invariant suite. Each suite draws from its own
/// generator seeded from (seed, suite index), so results do not depend on
/// suite order.
std::vector<SuiteReport> run_verification(std::uint64_t seed, int cases);

void print_reports(std::ostream& out, const std::vector<SuiteReport>& reports);

}  // namespace esd::cli
