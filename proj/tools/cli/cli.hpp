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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "esd/dynamics.hpp"
#include "output.hpp"

namespace esd::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

struct RunConfig {
  Scenario scenario;
  double tau_max = 50.0;
  int grid_points = 2048;
  std::optional<std::string> output_path;
  Format format = Format::Csv;
  std::optional<double> gamma;  ///< rescales output time to t = tau / gamma
};

/// Largest accepted |c_closed - c_wootters| on an evolve row.
inline constexpr double kEvolveMismatchTol = 1e-8;

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_esd(const RunConfig& cfg, double tol, TrajectorySource source, std::ostream& out, std::ostream& err);
int cmd_figure(const std::string& name, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(std::uint64_t seed, int cases, std::ostream& out, std::ostream& err);

/// A named curve of a figure preset.
struct FigureCurve {
  std::string name;
  Scenario scenario;
};

/// Curves for fig1..fig4; empty if the name is unknown.
std::vector<FigureCurve> figure_curves(const std::string& name);

/// Full command line without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace esd::cli
