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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "esd/dynamics.hpp"
#include "esd/sampling.hpp"

using namespace esd;

namespace {
const double kLn2 = std::numbers::ln2;

Scenario xs(double a, double b, double c, double d, double zsq, NoiseKind k) {
  return {XStateParams{a, b, c, d, std::sqrt(zsq)}, {k, 1.0}};
}
Scenario fam(Family f, double x, NoiseKind k) { return {FamilyParams{f, x}, {k, 1.0}}; }

const NoiseKind kAllNoise[] = {NoiseKind::Amplitude, NoiseKind::Phase, NoiseKind::Depolarizing};
}  // namespace

TEST_CASE("noise_param") {
  CHECK(noise_param({NoiseKind::Amplitude, 1.0}, 0.0) == 1.0);
  CHECK(noise_param({NoiseKind::Phase, 1.0}, 0.0) == 1.0);
  CHECK(noise_param({NoiseKind::Depolarizing, 1.0}, 0.0) == 0.0);
  CHECK(noise_param({NoiseKind::Depolarizing, 1.0}, 2 * kLn2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(noise_param({NoiseKind::Amplitude, 1.0}, 2.0) == doctest::Approx(std::exp(-1.0)));
  CHECK_THROWS_AS(noise_param({NoiseKind::Amplitude, 1.0}, -0.1), ParameterError);
  CHECK(noise_kraus({NoiseKind::Phase, 1.0}, 1.0).label() == ChannelLabel::Phase);
}

TEST_CASE("closed forms: reference values") {
  auto f1 = xs(0.1, 0.4, 0.4, 0.1, 0.04, NoiseKind::Amplitude);
  CHECK(closed_form_concurrence(f1, 0.0).value() == doctest::Approx(0.2));
  CHECK(closed_form_concurrence(f1, std::log(4.0)).value() == 0.0);
  CHECK(closed_form_concurrence(f1, 1.3).value() > 0.0);

  Scenario bell{XStateParams{0.0, 0.5, 0.5, 0.0, 0.5}, {NoiseKind::Amplitude, 1.0}};
  for (double t : {0.0, 0.5, 3.0, 20.0}) CHECK(closed_form_concurrence(bell, t).value() == doctest::Approx(std::exp(-t / 2)));
  bell.noise.kind = NoiseKind::Depolarizing;
  CHECK(closed_form_concurrence(bell, 2 * kLn2).value() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(closed_form_concurrence(bell, 1.0).value() == doctest::Approx(1 - 2 * -std::expm1(-0.5)));
}

TEST_CASE("closed forms: hand-evaluated families at tau = 1") {
  const double eta = std::exp(-0.5), p = -std::expm1(-0.5);
  const double x = 0.8;
  CHECK(closed_form_concurrence(fam(Family::Werner, x, NoiseKind::Phase), 1.0).value() ==
        doctest::Approx(0.5 * (2 * x * eta - (1 - x))));
  CHECK(closed_form_concurrence(fam(Family::Isotropic, x, NoiseKind::Phase), 1.0).value() ==
        doctest::Approx(((4 * x - 1) * eta - 2 * (1 - x)) / 3));
  CHECK(closed_form_concurrence(fam(Family::Isotropic, x, NoiseKind::Depolarizing), 1.0).value() ==
        doctest::Approx((2 * p * (1 - 4 * x) + 6 * x - 3) / 3));
  CHECK(closed_form_concurrence(fam(Family::Werner, x, NoiseKind::Depolarizing), 1.0).value() ==
        doctest::Approx((2 * (3 - 4 * p) * x - (3 + (4 * p - 3) * x)) / 6));
  CHECK(closed_form_concurrence(fam(Family::Werner, x, NoiseKind::Amplitude), 1.0).value() ==
        doctest::Approx(eta / 2 * (2 * x - std::sqrt((1 - x) * (2 - (1 + x) * eta * eta)))));
  CHECK(closed_form_concurrence(fam(Family::Isotropic, x, NoiseKind::Amplitude), 1.0).value() ==
        doctest::Approx(eta / 3 * ((4 * x - 1) - std::sqrt(2 * (1 - x) * (3 - (1 + 2 * x) * eta * eta)))));
}

TEST_CASE("closed form agrees with numeric at random points") {
  sampling::Rng rng(505);
  for (int i = 0; i < 300; ++i) {
    auto s = sampling::random_scenario(rng);
    double t = rng.uniform(0.0, 10.0);
    CHECK(std::abs(closed_form_concurrence(s, t).value() - numeric_concurrence(s, t).value()) <= 1e-8);
  }
}

TEST_CASE("closed form agrees with numeric on every family pair") {
  for (auto f : {Family::Isotropic, Family::Werner})
    for (auto k : kAllNoise)
      for (double x : {0.3, 0.45, 0.6, 0.75, 0.9, 1.0})
        for (double t : {0.0, 0.3, 1.0, 2.0, 5.0, 12.0}) {
          auto s = fam(f, x, k);
          CHECK(std::abs(closed_form_concurrence(s, t).value() - numeric_concurrence(s, t).value()) <= 1e-8);
        }
}

TEST_CASE("pure/depolarizing stays dead past 2 ln 2") {
  PureStateParams p{0.5, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0};
  Scenario s{p, {NoiseKind::Depolarizing, 1.0}};
  for (double t : {1.5, 2.0, 4.0, 10.0, 40.0}) {
    CHECK(closed_form_concurrence(s, t).value() == 0.0);
    CHECK(numeric_concurrence(s, t).value() < 1e-9);
  }
}

TEST_CASE("trajectories") {
  auto s = xs(0.2, 0.3, 0.3, 0.2, 0.09, NoiseKind::Phase);
  auto grid = uniform_grid(4.0, 401);
  REQUIRE(grid.size() == 401);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 4.0);
  auto cf = closed_form_trajectory(s, grid);
  auto nu = numeric_trajectory(s, grid);
  CHECK(cf.source == TrajectorySource::ClosedForm);
  CHECK(nu.source == TrajectorySource::Numeric);
  REQUIRE(cf.c.size() == grid.size());
  REQUIRE(nu.c.size() == grid.size());
  CHECK(cf.c[0] == doctest::Approx(2 * (0.3 - 0.2)));
  CHECK(nu.c[0] == doctest::Approx(cf.c[0]).epsilon(1e-10));
  const double death = std::log(2.25);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(cf.c[i] - nu.c[i]) <= 1e-8);
    if (grid[i] > death + 1e-9) CHECK(cf.c[i] == 0.0);
    if (i) CHECK(cf.c[i] <= cf.c[i - 1]);
  }
  std::vector<double> bad{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(closed_form_trajectory(s, bad), ParameterError);
  std::vector<double> neg{-1.0, 1.0};
  CHECK_THROWS_AS(numeric_trajectory(s, neg), ParameterError);
  CHECK_THROWS_AS(uniform_grid(1.0, 1), ParameterError);
  CHECK_THROWS_AS(uniform_grid(0.0, 10), ParameterError);
}

TEST_CASE("numeric trajectory is deterministic") {
  auto s = fam(Family::Isotropic, 0.6, NoiseKind::Amplitude);
  auto grid = uniform_grid(10.0, 300);
  auto a = numeric_trajectory(s, grid), b = numeric_trajectory(s, grid);
  CHECK(a.c == b.c);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(a.c[i] == numeric_concurrence(s, grid[i]).value());
}

TEST_CASE("fig4 curves all vanish at 2 ln 2") {
  const double q = std::numbers::pi / 4;
  for (const auto& p : {PureStateParams{0.125, 0.375, 0.375, 0.125, q, q, q}, PureStateParams{0.25, 0.25, 0.25, 0.25, q, q, q},
                        PureStateParams{0.5, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0}}) {
    Scenario s{p, {NoiseKind::Depolarizing, 1.0}};
    auto r = esd_time_bisection(s);
    REQUIRE(r.tau_death.has_value());
    CHECK(std::abs(*r.tau_death - 2 * kLn2) < 1e-8);
    auto a = esd_time_analytic(s);
    REQUIRE(a.has_value());
    CHECK(std::abs(*a->tau_death - 2 * kLn2) < 1e-12);
  }
}

TEST_CASE("esd_time_analytic examples") {
  auto f1 = esd_time_analytic(xs(0.1, 0.4, 0.4, 0.1, 0.04, NoiseKind::Amplitude));
  REQUIRE(f1.has_value());
  CHECK(f1->classification == EsdClass::SuddenDeath);
  CHECK(f1->method == EsdMethod::Analytic);
  CHECK(*f1->tau_death == doctest::Approx(std::log(4.0)).epsilon(1e-14));

  auto dashed = esd_time_analytic(xs(0.1, 0.2, 0.6, 0.1, 0.04, NoiseKind::Amplitude));
  REQUIRE(dashed.has_value());
  CHECK(dashed->classification == EsdClass::AsymptoticDecay);
  CHECK_FALSE(dashed->tau_death.has_value());

  auto bell = esd_time_analytic(Scenario{XStateParams{0.0, 0.5, 0.5, 0.0, 0.5}, {NoiseKind::Phase, 1.0}});
  CHECK(bell->classification == EsdClass::AsymptoticDecay);

  auto w = esd_time_analytic(fam(Family::Werner, 0.9, NoiseKind::Phase));
  CHECK(*w->tau_death == doctest::Approx(2 * std::log(18.0)));
  CHECK(esd_time_analytic(fam(Family::Werner, 1.0, NoiseKind::Phase))->classification == EsdClass::AsymptoticDecay);

  auto sep = esd_time_analytic(fam(Family::Werner, 0.2, NoiseKind::Phase));
  CHECK(sep->classification == EsdClass::InitiallySeparable);

  // a = 0 needs the limit of the threshold
  auto a0 = esd_time_analytic(xs(0.0, 0.5, 0.4, 0.1, 0.04, NoiseKind::Amplitude));
  CHECK(a0->classification == EsdClass::AsymptoticDecay);

  CHECK_FALSE(esd_time_analytic(xs(0.1, 0.4, 0.4, 0.1, 0.04, NoiseKind::Depolarizing)).has_value());
  CHECK_FALSE(esd_time_analytic(fam(Family::Isotropic, 0.6, NoiseKind::Amplitude)).has_value());
  CHECK_FALSE(esd_time_analytic(fam(Family::Werner, 0.4, NoiseKind::Amplitude)).has_value());
}

TEST_CASE("analytic and bisection agree") {
  sampling::Rng rng(606);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto s = sampling::random_scenario(rng);
    auto a = esd_time_analytic(s);
    if (!a) continue;
    auto b = esd_time_bisection(s);
    if (a->classification == EsdClass::SuddenDeath && *a->tau_death < 50.0) {
      ++checked;
      REQUIRE(b.tau_death.has_value());
      CHECK(std::abs(*a->tau_death - *b.tau_death) <= 1e-8);
    } else if (a->classification == EsdClass::InitiallySeparable) {
      CHECK(b.classification == EsdClass::InitiallySeparable);
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("bisection: families") {
  auto iso6 = esd_time_bisection(fam(Family::Isotropic, 0.6, NoiseKind::Amplitude));
  CHECK(iso6.classification == EsdClass::SuddenDeath);
  CHECK(iso6.method == EsdMethod::Bisection);
  REQUIRE(iso6.tau_death.has_value());
  // zero of C_ia: (4x-1)^2 = 2(1-x)(3-(1+2x) eta^2)
  const double x = 0.6;
  double eta2 = (3 - (4 * x - 1) * (4 * x - 1) / (2 * (1 - x))) / (1 + 2 * x);
  CHECK(*iso6.tau_death == doctest::Approx(-std::log(eta2)).epsilon(1e-8));

  auto iso7 = esd_time_bisection(fam(Family::Isotropic, 0.7, NoiseKind::Amplitude));
  CHECK(iso7.classification == EsdClass::AsymptoticDecay);
  REQUIRE(iso7.horizon.has_value());
  CHECK(*iso7.horizon == 50.0);

  CHECK(esd_time_bisection(fam(Family::Werner, 0.4, NoiseKind::Amplitude)).classification == EsdClass::SuddenDeath);
  CHECK(esd_time_bisection(fam(Family::Werner, 0.6, NoiseKind::Amplitude)).classification == EsdClass::AsymptoticDecay);
  CHECK(esd_time_bisection(fam(Family::Werner, 0.3, NoiseKind::Amplitude)).classification ==
        EsdClass::InitiallySeparable);
}

TEST_CASE("bisection on the numeric trajectory") {
  BisectionOptions opts;
  opts.source = TrajectorySource::Numeric;
  opts.tau_max = 5.0;
  opts.scan_points = 256;
  auto r = esd_time_bisection(xs(0.1, 0.4, 0.4, 0.1, 0.04, NoiseKind::Amplitude), opts);
  REQUIRE(r.tau_death.has_value());
  CHECK(std::abs(*r.tau_death - std::log(4.0)) < 1e-6);
}

TEST_CASE("bisection options are validated") {
  auto s = fam(Family::Werner, 0.9, NoiseKind::Phase);
  CHECK_THROWS_AS(esd_time_bisection(s, {0.0, 1e-9, 2048}), ParameterError);
  CHECK_THROWS_AS(esd_time_bisection(s, {50.0, 0.0, 2048}), ParameterError);
  CHECK_THROWS_AS(esd_time_bisection(s, {50.0, 1e-9, 1}), ParameterError);
}

TEST_CASE("esd_boundary") {
  auto ia = esd_boundary(Family::Isotropic, NoiseKind::Amplitude);
  REQUIRE(ia.critical_x.has_value());
  CHECK(*ia.critical_x == doctest::Approx(0.625));
  CHECK(ia.entangled_above == doctest::Approx(0.5));
  auto wa = esd_boundary(Family::Werner, NoiseKind::Amplitude);
  CHECK(*wa.critical_x == doctest::Approx(0.5));
  CHECK(wa.lower == doctest::Approx(1.0 / 3));
  auto wd = esd_boundary(Family::Werner, NoiseKind::Depolarizing);
  CHECK(wd.lower == doctest::Approx(1.0 / 3));
  CHECK(wd.upper == 1.0);
  CHECK(wd.upper_inclusive);
  CHECK_FALSE(wd.critical_x.has_value());
  auto ip = esd_boundary(Family::Isotropic, NoiseKind::Phase);
  CHECK(ip.lower == doctest::Approx(0.5));
  CHECK_FALSE(ip.upper_inclusive);
  CHECK_FALSE(esd_boundary(Family::Werner, NoiseKind::Phase).description.empty());
}

TEST_CASE("boundaries match bisection") {
  for (auto f : {Family::Isotropic, Family::Werner})
    for (auto k : kAllNoise) {
      auto bd = esd_boundary(f, k);
      for (double x = 0.02; x < 1.0; x += 0.04) {
        if (std::abs(x - bd.lower) < 0.01 || std::abs(x - bd.upper) < 0.01 || std::abs(x - bd.entangled_above) < 0.01)
          continue;
        auto r = esd_time_bisection(fam(f, x, k));
        bool in = x > bd.lower && x < bd.upper;
        if (x <= bd.entangled_above)
          CHECK(r.classification == EsdClass::InitiallySeparable);
        else
          CHECK((r.classification == EsdClass::SuddenDeath) == in);
      }
    }
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(validate(Scenario{XStateParams{0.1, 0.1, 0.1, 0.1, 0.0}, {}}), ParameterError);
  CHECK_THROWS_AS(validate(Scenario{FamilyParams{Family::Werner, 2.0}, {}}), ParameterError);
  CHECK_THROWS_AS(validate(Scenario{FamilyParams{Family::Werner, 0.5}, {NoiseKind::Phase, 0.0}}), ParameterError);
  CHECK(to_string(EsdClass::SuddenDeath) == std::string("SuddenDeath"));
  CHECK(to_string(EsdMethod::Bisection) == std::string("Bisection"));
}
