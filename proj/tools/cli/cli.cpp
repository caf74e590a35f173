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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <numbers>

#include "verify.hpp"

namespace esd::cli {
namespace {

// Opens the destination and hands the stream to `body`; I/O failures map to
// kExitIo.
int with_output(const std::optional<std::string>& path, std::ostream& out, std::ostream& err,
                const std::function<int(std::ostream&)>& body) {
  if (!path) {
    const int rc = body(out);
    out.flush();
    return rc;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << *path << "' for writing\n";
    return kExitIo;
  }
  const int rc = body(file);
  file.flush();
  if (!file) {
    err << "error: failed writing '" << *path << "'\n";
    return kExitIo;
  }
  return rc;
}

double output_time(const RunConfig& cfg, double tau) { return cfg.gamma ? tau / *cfg.gamma : tau; }

// Writes one trajectory; returns the largest closed/numeric mismatch.
double write_trajectory(std::ostream& os, const RunConfig& cfg, const Scenario& s) {
  const std::vector<double> grid = uniform_grid(cfg.tau_max, cfg.grid_points);
  const Trajectory closed = closed_form_trajectory(s, grid);
  const Trajectory numeric = numeric_trajectory(s, grid);
  double worst = 0.0;
  write_header(os, cfg.format);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double diff = std::abs(closed.c[i] - numeric.c[i]);
    worst = std::max(worst, diff);
    write_row(os, cfg.format, Row{output_time(cfg, grid[i]), closed.c[i], numeric.c[i], diff});
  }
  return worst;
}

int report_mismatch(double worst, std::ostream& err) {
  if (worst <= kEvolveMismatchTol) return kExitOk;
  err << "error: closed form and Wootters concurrence differ by " << format_number(worst) << " (tol "
      << format_number(kEvolveMismatchTol) << ")\n";
  return kExitVerifyFailed;
}

void check_config(const RunConfig& cfg) {
  if (!(cfg.tau_max > 0.0) || !std::isfinite(cfg.tau_max)) throw ParameterError("--tau-max must be > 0");
  if (cfg.grid_points < 2) throw ParameterError("--points must be >= 2");
  if (cfg.gamma && !(*cfg.gamma > 0.0)) throw ParameterError("--gamma must be > 0");
  validate(cfg.scenario);
}

// Maps library exceptions onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

XStateParams x_from_zsq(double a, double b, double c, double d, double zsq) {
  return XStateParams{a, b, c, d, Complex(std::sqrt(zsq), 0.0)};
}

}  // namespace

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_config(cfg);
    double worst = 0.0;
    const int rc = with_output(cfg.output_path, out, err, [&](std::ostream& os) {
      worst = write_trajectory(os, cfg, cfg.scenario);
      return kExitOk;
    });
    return rc != kExitOk ? rc : report_mismatch(worst, err);
  });
}

int cmd_esd(const RunConfig& cfg, double tol, TrajectorySource source, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_config(cfg);
    const auto analytic = esd_time_analytic(cfg.scenario);
    const EsdResult bisect = esd_time_bisection(cfg.scenario, BisectionOptions{cfg.tau_max, tol, cfg.grid_points, source});

    auto time_field = [&](const std::optional<double>& tau) {
      return tau ? format_number(output_time(cfg, *tau)) : std::string();
    };
    std::optional<double> tau_analytic = analytic ? analytic->tau_death : std::nullopt;
    std::string difference;
    if (tau_analytic && bisect.tau_death)
      difference = format_number(std::abs(output_time(cfg, *tau_analytic) - output_time(cfg, *bisect.tau_death)));

    std::vector<Field> fields{
        {"classification", to_string(bisect.classification), true},
        {"analytic", analytic ? to_string(analytic->classification) : "unavailable", true},
        {"tau_analytic", time_field(tau_analytic)},
        {"tau_bisection", time_field(bisect.tau_death)},
        {"difference", difference},
        {"horizon", time_field(bisect.horizon)},
    };
    if (bisect.revived) fields.push_back({"revived", "true"});
    return with_output(cfg.output_path, out, err, [&](std::ostream& os) {
      write_record(os, cfg.format, fields);
      return kExitOk;
    });
  });
}

std::vector<FigureCurve> figure_curves(const std::string& name) {
  const NoiseSpec amplitude{NoiseKind::Amplitude, 1.0};
  const NoiseSpec phase{NoiseKind::Phase, 1.0};
  const NoiseSpec depolarizing{NoiseKind::Depolarizing, 1.0};
  const double quarter_pi = std::numbers::pi / 4.0;
  if (name == "fig1")
    return {{"fig1_solid", {x_from_zsq(0.1, 0.4, 0.4, 0.1, 0.04), amplitude}},
            {"fig1_dashed", {x_from_zsq(0.1, 0.2, 0.6, 0.1, 0.04), amplitude}}};
  if (name == "fig2")
    return {{"fig2_solid", {x_from_zsq(0.2, 0.3, 0.3, 0.2, 0.09), phase}},
            {"fig2_dashed", {x_from_zsq(0.5, 0.1, 0.4, 0.0, 0.01), phase}}};
  if (name == "fig3")
    return {{"fig3_solid", {x_from_zsq(0.5, 0.1, 0.4, 0.0, 0.01), depolarizing}},
            {"fig3_dotdashed", {x_from_zsq(0.1, 0.2, 0.6, 0.1, 0.04), depolarizing}}};
  if (name == "fig4")
    return {{"fig4_dashed", {PureStateParams{1.0 / 8, 3.0 / 8, 3.0 / 8, 1.0 / 8, quarter_pi, quarter_pi, quarter_pi}, depolarizing}},
            {"fig4_dotdashed", {PureStateParams{0.25, 0.25, 0.25, 0.25, quarter_pi, quarter_pi, quarter_pi}, depolarizing}},
            {"fig4_solid", {PureStateParams{0.5, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0}, depolarizing}}};
  return {};
}

int cmd_figure(const std::string& name, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<FigureCurve> curves = figure_curves(name);
  if (curves.empty()) {
    err << "error: unknown figure '" << name << "' (expected fig1, fig2, fig3 or fig4)\n";
    return kExitUsage;
  }
  return guarded(err, [&] {
    double worst = 0.0;
    if (cfg.output_path) {
      std::error_code ec;
      std::filesystem::create_directories(*cfg.output_path, ec);
      if (ec) {
        err << "error: cannot create directory '" << *cfg.output_path << "': " << ec.message() << "\n";
        return int(kExitIo);
      }
    }
    for (const FigureCurve& curve : curves) {
      RunConfig c = cfg;
      c.scenario = curve.scenario;
      check_config(c);
      std::optional<std::string> path;
      if (cfg.output_path)
        path = (std::filesystem::path(*cfg.output_path) /
                (curve.name + (cfg.format == Format::Csv ? ".csv" : ".jsonl")))
                   .string();
      const int rc = with_output(path, out, err, [&](std::ostream& os) {
        if (!path) os << "# " << curve.name << "\n";
        worst = std::max(worst, write_trajectory(os, c, curve.scenario));
        return kExitOk;
      });
      if (rc != kExitOk) return rc;
    }
    return report_mismatch(worst, err);
  });
}

int cmd_verify(std::uint64_t seed, int cases, std::ostream& out, std::ostream& err) {
  if (cases < 1) {
    err << "error: --cases must be >= 1\n";
    return kExitUsage;
  }
  const auto reports = run_verification(seed, cases);
  print_reports(out, reports);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.ok(); });
  out << (ok ? "verify: all suites passed\n" : "verify: FAILED\n");
  return ok ? kExitOk : kExitVerifyFailed;
}

namespace {

struct StateFlags {
  bool xstate = false;
  bool pure = false;
  std::string family;
  double a = 0, b = 0, c = 0, d = 0, zsq = 0, zmod = 0, zarg = 0, f = 0, g = 0, h = 0, x = 0;
  std::string noise;
  double tau_max = 50.0;
  int points = 2048;
  std::string out;
  std::string format = "csv";
  double gamma = 1.0;

  std::map<std::string, CLI::Option*> opts;
};

void add_common_flags(CLI::App* cmd, StateFlags& fl) {
  fl.opts["tau-max"] = cmd->add_option("--tau-max", fl.tau_max, "largest dimensionless time Gamma*t")->capture_default_str();
  fl.opts["points"] = cmd->add_option("--points", fl.points, "number of grid points")->capture_default_str();
  fl.opts["out"] = cmd->add_option("--out", fl.out, "output path (default stdout)");
  cmd->add_option("--format", fl.format, "output format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
}

void add_state_flags(CLI::App* cmd, StateFlags& fl) {
  auto* xs = cmd->add_flag("--xstate", fl.xstate, "X state given by --a --b --c --d and --zsq or --zmod [--zarg]");
  auto* pu = cmd->add_flag("--pure", fl.pure, "pure state given by --a --b --c --d --f --g --h");
  auto* fa = cmd->add_option("--family", fl.family, "isotropic or werner, with --x")
                 ->check(CLI::IsMember({"isotropic", "werner"}));
  xs->excludes(pu)->excludes(fa);
  pu->excludes(fa);
  for (const auto& [name, ref] : std::vector<std::pair<std::string, double*>>{
           {"a", &fl.a}, {"b", &fl.b}, {"c", &fl.c}, {"d", &fl.d}, {"zsq", &fl.zsq}, {"zmod", &fl.zmod},
           {"zarg", &fl.zarg}, {"f", &fl.f}, {"g", &fl.g}, {"h", &fl.h}, {"x", &fl.x}})
    fl.opts[name] = cmd->add_option("--" + name, *ref);
  fl.opts["zsq"]->excludes(fl.opts["zmod"]);
  fl.opts["xstate"] = xs;
  fl.opts["pure"] = pu;
  fl.opts["family"] = fa;
  fl.opts["noise"] = cmd->add_option("--noise", fl.noise, "noise acting on qubit 1")
                         ->check(CLI::IsMember({"amplitude", "phase", "depolarizing"}));
  fl.opts["gamma"] = cmd->add_option("--gamma", fl.gamma, "decay rate; rescales output time to t = tau / Gamma");
}

bool given(const StateFlags& fl, const std::string& name) { return fl.opts.at(name)->count() > 0; }

void require(const StateFlags& fl, std::initializer_list<const char*> names, const char* what) {
  for (const char* n : names)
    if (!given(fl, n)) throw ParameterError(std::string(what) + " requires --" + n);
}

RunConfig build_config(const StateFlags& fl, bool needs_state) {
  RunConfig cfg{Scenario{XStateParams{}, NoiseSpec{}}, fl.tau_max, fl.points, std::nullopt,
                fl.format == "jsonl" ? Format::JsonLines : Format::Csv, std::nullopt};
  if (given(fl, "out")) cfg.output_path = fl.out;
  if (given(fl, "gamma")) cfg.gamma = fl.gamma;
  if (!needs_state) return cfg;

  const int selectors = int(fl.xstate) + int(fl.pure) + int(given(fl, "family"));
  if (selectors != 1) throw ParameterError("exactly one of --xstate, --pure, --family is required");
  if (!given(fl, "noise")) throw ParameterError("--noise is required");

  if (fl.xstate) {
    require(fl, {"a", "b", "c", "d"}, "--xstate");
    if (!given(fl, "zsq") && !given(fl, "zmod")) throw ParameterError("--xstate requires --zsq or --zmod");
    if (given(fl, "zsq") && fl.zsq < 0.0) throw ParameterError("--zsq must be >= 0");
    if (given(fl, "zmod") && fl.zmod < 0.0) throw ParameterError("--zmod must be >= 0");
    const double zmod = given(fl, "zsq") ? std::sqrt(fl.zsq) : fl.zmod;
    cfg.scenario.state = XStateParams{fl.a, fl.b, fl.c, fl.d, std::polar(zmod, fl.zarg)};
  } else if (fl.pure) {
    require(fl, {"a", "b", "c", "d"}, "--pure");
    cfg.scenario.state = PureStateParams{fl.a, fl.b, fl.c, fl.d, fl.f, fl.g, fl.h};
  } else {
    require(fl, {"x"}, "--family");
    cfg.scenario.state = FamilyParams{fl.family == "isotropic" ? Family::Isotropic : Family::Werner, fl.x};
  }
  const NoiseKind kind = fl.noise == "amplitude" ? NoiseKind::Amplitude
                         : fl.noise == "phase"   ? NoiseKind::Phase
                                                 : NoiseKind::Depolarizing;
  cfg.scenario.noise = NoiseSpec{kind, cfg.gamma.value_or(1.0)};
  return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement dynamics of two-qubit states under single local noise"};
  app.name("esd");
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  StateFlags evolve_fl, esd_fl, figure_fl;
  auto* evolve = app.add_subcommand("evolve", "closed-form and Wootters concurrence along a time grid");
  evolve->set_help_flag("--help", "print this help message and exit");
  add_state_flags(evolve, evolve_fl);
  add_common_flags(evolve, evolve_fl);

  auto* esd = app.add_subcommand("esd", "classify sudden death and report death times");
  esd->set_help_flag("--help", "print this help message and exit");
  add_state_flags(esd, esd_fl);
  add_common_flags(esd, esd_fl);
  double tol = 1e-9;
  bool numeric = false;
  esd->add_option("--tol", tol, "bisection tolerance in tau")->capture_default_str();
  esd->add_flag("--numeric", numeric, "bisect the Wootters trajectory instead of the closed form");

  auto* figure = app.add_subcommand("figure", "emit the curves of a figure preset");
  figure->set_help_flag("--help", "print this help message and exit");
  std::string figure_name;
  figure->add_option("name", figure_name, "fig1, fig2, fig3 or fig4")->required();
  add_common_flags(figure, figure_fl);
  figure_fl.opts["gamma"] = figure->add_option("--gamma", figure_fl.gamma, "rescale output time to t = tau / Gamma");

  auto* verify = app.add_subcommand("verify", "run the randomized invariant suites");
  verify->set_help_flag("--help", "print this help message and exit");
  std::uint64_t seed = 20261014;
  int cases = 1000;
  verify->add_option("--seed", seed, "generator seed")->capture_default_str();
  verify->add_option("--cases", cases, "cases per suite")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (evolve->parsed()) {
    RunConfig cfg;
    if (int rc = guarded(err, [&] { cfg = build_config(evolve_fl, true); return int(kExitOk); }); rc != kExitOk) return rc;
    return cmd_evolve(cfg, out, err);
  }
  if (esd->parsed()) {
    RunConfig cfg;
    if (int rc = guarded(err, [&] { cfg = build_config(esd_fl, true); return int(kExitOk); }); rc != kExitOk) return rc;
    return cmd_esd(cfg, tol, numeric ? TrajectorySource::Numeric : TrajectorySource::ClosedForm, out, err);
  }
  if (figure->parsed()) {
    RunConfig cfg = build_config(figure_fl, false);
    return cmd_figure(figure_name, cfg, out, err);
  }
  return cmd_verify(seed, cases, out, err);
}

}  // namespace esd::cli
