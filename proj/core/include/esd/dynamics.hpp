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

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "esd/channels.hpp"
#include "esd/entanglement.hpp"
#include "esd/states.hpp"

namespace esd {

/// Which initial state, which single local noise on qubit 1.
struct Scenario {
  std::variant<XStateParams, PureStateParams, FamilyParams> state;
  NoiseSpec noise;
};

void validate(const Scenario& s);

enum class TrajectorySource { ClosedForm, Numeric };

/// Concurrence sampled on a dimensionless time grid tau = Gamma * t.
struct Trajectory {
  std::vector<double> tau;
  std::vector<double> c;
  TrajectorySource source = TrajectorySource::ClosedForm;
};

enum class EsdClass { SuddenDeath, AsymptoticDecay, InitiallySeparable };
enum class EsdMethod { Analytic, Bisection };

const char* to_string(EsdClass cls);
const char* to_string(EsdMethod method);

struct EsdResult {
  EsdClass classification = EsdClass::AsymptoticDecay;
  std::optional<double> tau_death;  ///< present iff SuddenDeath
  EsdMethod method = EsdMethod::Analytic;
  /// Bisection only: AsymptoticDecay is a statement about [0, horizon].
  std::optional<double> horizon;
  /// Bisection only: concurrence became positive again after the first zero.
  bool revived = false;
};

struct BisectionOptions {
  double tau_max = 50.0;
  double tol = 1e-9;
  int scan_points = 2048;
  TrajectorySource source = TrajectorySource::ClosedForm;
};

/// Zero threshold for Wootters values; the closed forms clamp exactly.
inline constexpr double kNumericZero = 1e-12;

/// eta, gamma or p at dimensionless time tau.
double noise_param(const NoiseSpec& noise, double tau);

/// Single-qubit Kraus set for the noise at time tau.
KrausSet noise_kraus(const NoiseSpec& noise, double tau);

DensityMatrix initial_state(const Scenario& s);

/// The closed-form evolved concurrence for the scenario's (state, noise) pair.
Concurrence closed_form_concurrence(const Scenario& s, double tau);

/// Wootters concurrence of the initial state pushed through the lifted
/// channel at parameter value(tau).
Concurrence numeric_concurrence(const Scenario& s, double tau);

Trajectory closed_form_trajectory(const Scenario& s, std::span<const double> tau_grid);
Trajectory numeric_trajectory(const Scenario& s, std::span<const double> tau_grid);

/// points >= 2 uniform samples on [0, tau_max].
std::vector<double> uniform_grid(double tau_max, int points);

/// Closed threshold where one exists. nullopt means the pair has no closed
/// threshold (X/depolarizing, isotropic/amplitude, Werner/amplitude) and
/// esd_time_bisection() must be used.
std::optional<EsdResult> esd_time_analytic(const Scenario& s);

EsdResult esd_time_bisection(const Scenario& s, const BisectionOptions& opts = {});

/// x-range over which a family shows sudden death under a noise kind.
struct EsdBoundary {
  Family family = Family::Werner;
  NoiseKind noise = NoiseKind::Amplitude;
  double entangled_above = 0.0;  ///< initial state entangled iff x > this
  double lower = 0.0;            ///< ESD on the interval (lower, upper) / (lower, upper]
  double upper = 0.0;
  bool upper_inclusive = false;
  std::optional<double> critical_x;  ///< amplitude cases: root of the eta -> 0 limit
  std::string description;
};

EsdBoundary esd_boundary(Family family, NoiseKind noise);

}  // namespace esd
