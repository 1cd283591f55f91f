// Copyright 2026 The Complementarity Authors
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

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "complementarity/errors.hpp"
#include "complementarity/tolerance.hpp"

namespace complementarity::cli {

namespace {

using estimate::EstimatorKind;

double parse_number(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw UsageError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<EstimatorKind> kinds_for(EstimatorChoice choice) {
  switch (choice) {
    case EstimatorChoice::simple:
      return {EstimatorKind::simple};
    case EstimatorChoice::optimal:
      return {EstimatorKind::optimal};
    case EstimatorChoice::both:
      break;
  }
  return {EstimatorKind::simple, EstimatorKind::optimal};
}

ToleranceProfile profile_or(const RunConfig& config, std::string_view fallback) {
  return ToleranceProfile::named(config.tolerance_profile ? *config.tolerance_profile
                                                          : std::string(fallback));
}

qcore::DensityMatrix load_state(const RunConfig& config) {
  return dataio::parse_density_matrix(read_file(*config.state_file),
                                      profile_or(config, "tomographic"));
}

pipeline::Simulation build_simulation(const RunConfig& config, double phi_deg) {
  const double r_h = config.r_h.value_or(0.1244);
  const double r_v = config.r_v.value_or(0.4645);
  if (config.gamma_deg) {
    return pipeline::epr_simulation(*config.gamma_deg, r_h, r_v, config.theta_deg, phi_deg);
  }
  pipeline::Simulation sim(load_state(config));
  sim.state_source = "file";
  sim.r_h = r_h;
  sim.r_v = r_v;
  sim.theta_deg = config.theta_deg;
  sim.phi_deg = phi_deg;
  return sim;
}

std::string emit(const std::vector<relations::RelationReport>& reports, dataio::Format format) {
  if (reports.size() == 1) return dataio::emit_report(reports.front(), format);
  return dataio::emit_reports(reports, format);
}

std::string run_simulate(const RunConfig& config) {
  const double phi = config.phis_deg.empty() ? 180.0 : config.phis_deg.front();
  const pipeline::Simulation sim = build_simulation(config, phi);
  std::vector<relations::RelationReport> reports;
  for (EstimatorKind kind : kinds_for(config.estimator.value_or(EstimatorChoice::both))) {
    reports.push_back(pipeline::simulate(sim, kind));
  }
  return emit(reports, config.format);
}

std::string run_analyze(const RunConfig& config) {
  const dataio::DistributionFile file = dataio::parse_distribution_file(read_file(*config.dist_file));
  const std::optional<double> r_h = config.r_h ? config.r_h : file.r_h();
  const std::optional<double> r_v = config.r_v ? config.r_v : file.r_v();
  if (!r_h || !r_v) {
    throw UsageError("slide reflectivities missing: pass --rh/--rv or add r_H/r_V metadata");
  }
  pipeline::Analysis analysis(dataio::to_joint_distribution(file, profile_or(config, "strict")));
  analysis.r_h = *r_h;
  analysis.r_v = *r_v;
  analysis.overrides = config.overrides;
  if (config.state_file) {
    analysis.rho = load_state(config);
    analysis.state_source = "measured+file";
  }
  const EstimatorChoice choice = config.estimator.value_or(
      config.state_file ? EstimatorChoice::both : EstimatorChoice::simple);
  std::vector<relations::RelationReport> reports;
  for (EstimatorKind kind : kinds_for(choice)) reports.push_back(pipeline::analyze(analysis, kind));
  return emit(reports, config.format);
}

std::string run_sweep(const RunConfig& config) {
  const pipeline::Simulation base = build_simulation(config, config.phis_deg.front());
  const auto rows = pipeline::sweep(
      base, config.phis_deg, kinds_for(config.estimator.value_or(EstimatorChoice::optimal)));
  return dataio::emit_sweep(rows, config.format);
}

void write_output(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (!config.out) {
    out << text;
    return;
  }
  std::ofstream file(*config.out, std::ios::binary);
  if (!file) throw DataError("cannot write '" + *config.out + "'");
  file << text;
  if (!file) throw DataError("failed writing '" + *config.out + "'");
}

}  // namespace

std::vector<double> parse_phi_list(std::string_view text) {
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t start = 0;
    for (;;) {
      const auto pos = text.find(':', start);
      parts.push_back(parse_number(text.substr(start, pos == text.npos ? text.npos : pos - start)));
      if (pos == text.npos) break;
      start = pos + 1;
    }
    if (parts.size() != 3 || parts[2] <= 0.0 || parts[1] < parts[0]) {
      throw UsageError("phi range must be start:stop:step with step > 0 and stop >= start");
    }
    const auto n = static_cast<std::size_t>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    if (n > 100000) throw UsageError("phi range has too many points");
    for (std::size_t k = 0; k <= n; ++k) out.push_back(parts[0] + static_cast<double>(k) * parts[2]);
    return out;
  }
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(',', start);
    out.push_back(parse_number(text.substr(start, pos == text.npos ? text.npos : pos - start)));
    if (pos == text.npos) break;
    start = pos + 1;
  }
  return out;
}

EstimatorChoice parse_estimator_choice(std::string_view name) {
  if (name == "simple") return EstimatorChoice::simple;
  if (name == "optimal") return EstimatorChoice::optimal;
  if (name == "both") return EstimatorChoice::both;
  throw UsageError("unknown estimator '" + std::string(name) + "'");
}

void validate(const RunConfig& config) {
  const bool has_overrides = config.overrides.c_half || config.overrides.delta_x ||
                             config.overrides.delta_y;
  switch (config.mode) {
    case Mode::simulate:
    case Mode::sweep:
      if (config.gamma_deg.has_value() == config.state_file.has_value()) {
        throw UsageError("exactly one of --gamma and --state-file is required");
      }
      if (config.dist_file) throw UsageError("--dist-file is only valid for analyze");
      if (has_overrides) throw UsageError("summary overrides are only valid for analyze");
      if (config.mode == Mode::simulate && config.phis_deg.size() > 1) {
        throw UsageError("simulate takes a single --phi; use sweep for several");
      }
      if (config.mode == Mode::sweep && config.phis_deg.empty()) {
        throw UsageError("sweep requires --phi");
      }
      break;
    case Mode::analyze:
      if (!config.dist_file) throw UsageError("analyze requires --dist-file");
      if (config.gamma_deg) throw UsageError("--gamma is not valid for analyze");
      if (!config.phis_deg.empty()) {
        throw UsageError("analyze reads phi from the distribution file");
      }
      break;
    case Mode::verify:
      if (config.gamma_deg || config.state_file || config.dist_file) {
        throw UsageError("verify samples its own scenarios");
      }
      break;
  }
  for (const std::optional<double>& r : {config.r_h, config.r_v}) {
    if (r && !(*r >= 0.0 && *r <= 1.0)) throw UsageError("reflectivities must lie in [0, 1]");
  }
  if (config.tolerance_profile) ToleranceProfile::named(*config.tolerance_profile);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    std::string text;
    int code = kExitOk;
    switch (config.mode) {
      case Mode::simulate:
        text = run_simulate(config);
        break;
      case Mode::analyze:
        text = run_analyze(config);
        break;
      case Mode::sweep:
        text = run_sweep(config);
        break;
      case Mode::verify: {
        const pipeline::VerifySummary summary =
            pipeline::verify(pipeline::VerifyConfig{config.trials, config.seed});
        text = pipeline::emit_verify(summary, config.format);
        if (!summary.passed()) code = kExitVerification;
        break;
      }
    }
    write_output(config, text, out);
    if (code == kExitVerification) err << "error: verification failed\n";
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint-measurement complementarity relations: simulation and data analysis"};
  app.require_subcommand(1);

  RunConfig config;
  double gamma = 0.0, r_h = 0.0, r_v = 0.0, c_half = 0.0, delta_x = 0.0, delta_y = 0.0;
  std::string phi, estimator, state_file, dist_file, out_path, format = "json", profile;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output file (default: stdout)");
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_scenario = [&](CLI::App* sub, bool needs_phi) {
    sub->add_option("--gamma", gamma, "EPR angle in degrees");
    sub->add_option("--state-file", state_file, "Two-qubit density matrix CSV");
    sub->add_option("--theta", config.theta_deg, "W polar angle in degrees")->capture_default_str();
    sub->add_option("--phi", phi,
                    needs_phi ? "W azimuths: a,b,c or start:stop:step (degrees)"
                              : "W azimuth in degrees (default 180)");
  };
  auto add_slide = [&](CLI::App* sub) {
    sub->add_option("--rh", r_h, "Slide reflectivity for H (default 0.1244)");
    sub->add_option("--rv", r_v, "Slide reflectivity for V (default 0.4645)");
    sub->add_option("--estimator", estimator, "simple, optimal or both")
        ->check(CLI::IsMember({"simple", "optimal", "both"}));
    sub->add_option("--tolerance-profile", profile, "strict or tomographic")
        ->check(CLI::IsMember({"strict", "tomographic"}));
  };

  CLI::App* simulate = app.add_subcommand("simulate", "Simulate one scenario and report");
  add_scenario(simulate, false);
  add_slide(simulate);
  add_output(simulate);

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep the W azimuth");
  add_scenario(sweep, true);
  add_slide(sweep);
  add_output(sweep);

  CLI::App* analyze = app.add_subcommand("analyze", "Analyse a measured joint distribution");
  analyze->add_option("--dist-file", dist_file, "Joint distribution CSV")->required();
  analyze->add_option("--state-file", state_file, "Tomographic density matrix CSV");
  analyze->add_option("--gamma", gamma, "Not valid here");
  analyze->add_option("--phi", phi, "Not valid here");
  analyze->add_option("--c-half", c_half, "Override |<[X,Y]>|/2");
  analyze->add_option("--delta-x", delta_x, "Override the X spread");
  analyze->add_option("--delta-y", delta_y, "Override the Y spread");
  add_slide(analyze);
  add_output(analyze);

  CLI::App* verify = app.add_subcommand("verify", "Randomised verification suite");
  verify->add_option("--trials", config.trials, "Number of random scenarios")
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "Base seed")->capture_default_str();
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  auto given = [&](const char* name) {
    const CLI::Option* opt = active->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (active == simulate) config.mode = Mode::simulate;
  if (active == sweep) config.mode = Mode::sweep;
  if (active == analyze) config.mode = Mode::analyze;
  if (active == verify) config.mode = Mode::verify;

  try {
    if (given("--gamma")) config.gamma_deg = gamma;
    if (given("--rh")) config.r_h = r_h;
    if (given("--rv")) config.r_v = r_v;
    if (given("--c-half")) config.overrides.c_half = c_half;
    if (given("--delta-x")) config.overrides.delta_x = delta_x;
    if (given("--delta-y")) config.overrides.delta_y = delta_y;
    if (given("--phi")) config.phis_deg = parse_phi_list(phi);
    if (given("--estimator")) config.estimator = parse_estimator_choice(estimator);
    if (given("--state-file")) config.state_file = state_file;
    if (given("--dist-file")) config.dist_file = dist_file;
    if (given("--out")) config.out = out_path;
    if (given("--tolerance-profile")) config.tolerance_profile = profile;
    config.format = dataio::parse_format(format);
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace complementarity::cli
