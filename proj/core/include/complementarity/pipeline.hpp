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

// End-to-end workflows shared by the command-line driver, the benchmarks
// and the acceptance suite.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "complementarity/dataio.hpp"
#include "complementarity/estimate.hpp"
#include "complementarity/qcore.hpp"
#include "complementarity/relations.hpp"
#include "complementarity/scenario.hpp"

namespace complementarity::pipeline {

using estimate::Estimator;
using estimate::EstimatorKind;
using qcore::BlochObservable;
using qcore::DensityMatrix;
using relations::RelationReport;

/// A fully specified simulated experiment. Angles in degrees.
struct Simulation {
  explicit Simulation(DensityMatrix state) : rho(std::move(state)) {}

  DensityMatrix rho;
  std::string state_source = "epr";
  std::optional<double> gamma_deg;
  double r_h = 0.1244;
  double r_v = 0.4645;
  double theta_deg = 90.0;
  double phi_deg = 180.0;

  BlochObservable w() const { return BlochObservable::from_degrees(theta_deg, phi_deg); }
};

/// EPR state cos(g)|HV> - sin(g)|VH> with g in degrees.
Simulation epr_simulation(double gamma_deg, double r_h, double r_v, double theta_deg,
                          double phi_deg);

struct EstimatePair {
  Estimator x;  // function of the w outcome
  Estimator y;  // function of the slide-then-Y outcome
};

/// Simple: both +-1. Optimal: least-squares X estimate from the w outcome,
/// with the slide-then-Y outcome itself as the Y estimate.
EstimatePair make_estimates(EstimatorKind kind, const DensityMatrix& rho,
                            const BlochObservable& w);

/// Least-squares estimates for both observables.
EstimatePair fully_optimal_estimates(const DensityMatrix& rho,
                                     const scenario::SemiweakSlide& slide,
                                     const BlochObservable& w);

/// Relation inputs from a joint distribution. Inaccuracies come from the
/// counts; c, dX and dY from `rho`.
RelationReport report_from_counts(const scenario::JointDistribution& dist,
                                  const scenario::SemiweakSlide& slide,
                                  const DensityMatrix& rho, const EstimatePair& est,
                                  relations::ScenarioDescriptor descriptor);

RelationReport simulate(const Simulation& sim, EstimatorKind kind);

/// Replaces quantities that would otherwise be computed from a state.
struct SummaryOverrides {
  std::optional<double> c_half;
  std::optional<double> delta_x;
  std::optional<double> delta_y;
};

struct Analysis {
  explicit Analysis(scenario::JointDistribution d) : dist(std::move(d)) {}

  scenario::JointDistribution dist;
  /// Slide reflectivities; taken from the file metadata when unset.
  double r_h = 0.0;
  double r_v = 0.0;
  /// Needed for optimal estimates and for any summary value without an
  /// override.
  std::optional<DensityMatrix> rho;
  SummaryOverrides overrides;
  std::string state_source = "measured";
};

/// Measured-data path. The W observable comes from the distribution.
/// Throws PreconditionError when a required state or W is missing.
RelationReport analyze(const Analysis& analysis, EstimatorKind kind);

/// One row per (phi, kind), phi-major, in input order.
std::vector<dataio::SweepRow> sweep(const Simulation& base, const std::vector<double>& phis_deg,
                                    const std::vector<EstimatorKind>& kinds);

struct VerifyConfig {
  std::size_t trials = 10000;
  std::uint64_t seed = 42;
};

/// Result of one randomized verification trial.
struct TrialResult {
  EstimatorKind kind = EstimatorKind::simple;
  RelationReport report;
  double oracle_diff = 0.0;
  std::optional<double> dispersion_residual;
  bool dispersion_ok = true;
  bool chain_dilated_ok = false;
  bool chain_generic_ok = false;
  bool md_satisfied = false;
  double md_margin = 0.0;
  /// Ordering for the optimal report plus the gap formula evaluated with
  /// fully optimal estimates.
  std::optional<bool> strength_ok;
  bool fallback = false;
};

/// Deterministic in (seed, index); independent of other trials.
TrialResult run_trial(std::uint64_t seed, std::uint64_t index);

/// Margin below which a universal relation counts as violated.
inline constexpr double kViolationMargin = -1e-9;

struct VerifySummary {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// Indexed like relations::kAllRelations.
  std::array<std::size_t, 4> violations{};
  std::array<double, 4> worst_margin{};
  double oracle_max_diff = 0.0;
  std::size_t dispersion_trials = 0;
  std::size_t dispersion_failures = 0;
  double dispersion_max_residual = 0.0;
  std::size_t chain_trials = 0;
  std::size_t chain_failures = 0;
  std::size_t strength_trials = 0;
  std::size_t strength_failures = 0;
  std::size_t md_violations = 0;
  double md_worst_margin = 0.0;
  std::size_t estimator_fallbacks = 0;

  std::size_t ak_violations() const { return violations[0]; }
  /// Universal relations, oracle agreement, dispersion identity, proof
  /// chain, strength ordering and the disturbance relation all hold.
  bool passed() const;
};

VerifySummary verify(const VerifyConfig& config);

/// JSON object or two-column key,value CSV.
std::string emit_verify(const VerifySummary& summary, dataio::Format format);

}  // namespace complementarity::pipeline
