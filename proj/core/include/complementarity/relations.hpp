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

// Joint-measurement complementarity relations for estimates A_est, B_est of
// observables A, B. With c = |<[A, B]>| every relation has the form
// LHS >= c / 2:
//
//   Arthurs-Kelly   eps_A eps_B
//   Hall            eps_A eps_B + eps_A dB_est + dA_est eps_B
//   Ozawa           eps_A eps_B + eps_A dB + dA eps_B
//   averaged spread eps_A (dB_est + dB) / 2 + eps_B (dA_est + dA) / 2
//
// Only the last three hold for every joint measurement; Arthurs-Kelly
// assumes globally unbiased estimates and fails in EPR-type setups.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "complementarity/estimate.hpp"
#include "complementarity/qcore.hpp"
#include "complementarity/scenario.hpp"

namespace complementarity::relations {

enum class Relation { arthurs_kelly, hall, ozawa, averaged_spread };

inline constexpr std::array<Relation, 4> kAllRelations{
    Relation::arthurs_kelly, Relation::hall, Relation::ozawa, Relation::averaged_spread};

/// Short names used in reports: "ak", "hall", "ozawa", "new".
std::string_view to_string(Relation r);

/// Scalar summary statistics; measured and simulated data share this path.
struct RelationInputs {
  double eps_a = 0.0;
  double eps_b = 0.0;
  double delta_a = 0.0;
  double delta_b = 0.0;
  double delta_a_est = 0.0;
  double delta_b_est = 0.0;
  double c = 0.0;
};

/// Where a report came from; echoed verbatim into serialised output.
struct ScenarioDescriptor {
  std::string state_source;
  std::optional<double> gamma_deg;
  std::optional<double> r_h;
  std::optional<double> r_v;
  std::optional<double> theta_deg;
  std::optional<double> phi_deg;
  std::string estimator;
};

/// Slack below the bound still counted as satisfied (rounding only).
inline constexpr double kSatisfactionSlack = 1e-12;

struct RelationReport {
  RelationInputs inputs;
  double bound = 0.0;  // c / 2
  double lhs_ak = 0.0;
  double lhs_hall = 0.0;
  double lhs_ozawa = 0.0;
  double lhs_new = 0.0;
  bool ak_satisfied = true;
  bool hall_satisfied = true;
  bool ozawa_satisfied = true;
  bool new_satisfied = true;
  ScenarioDescriptor scenario;

  double lhs(Relation r) const;
  bool satisfied(Relation r) const;
  /// lhs - bound; negative means violated.
  double margin(Relation r) const { return lhs(r) - bound; }
};

/// Throws DomainError if any input is negative or not finite.
RelationReport evaluate_relations(const RelationInputs& in, ScenarioDescriptor scenario = {});

/// One term of the triangle inequality and its Schwarz bound
/// |<[R, S]>| <= 2 sqrt(<(R - r)^2> <(S - s)^2>).
struct ChainLink {
  std::string label;
  double commutator_term = 0.0;  // |<[R, S]>|
  double rms_r = 0.0;            // sqrt(<(R - r)^2>)
  double rms_s = 0.0;            // sqrt(<(S - s)^2>)
  double schwarz_bound = 0.0;    // 2 rms_r rms_s
  bool holds = false;
};

/// Link-by-link evaluation of the averaged-spread relation's derivation:
///   2[A, B] = [A - A_est, B + B_est] + [A + A_est, B - B_est]
///   2c <= sum of four |<[., .]>| terms <= sum of Schwarz bounds = 4 LHS.
struct ChainReport {
  double identity_residual = 0.0;
  double c = 0.0;
  std::array<ChainLink, 4> links;
  double triangle_sum = 0.0;
  double schwarz_sum = 0.0;
  double lhs_new = 0.0;  // schwarz_sum / 4
  bool identity_holds = false;
  bool triangle_holds = false;
  bool schwarz_holds = false;
  bool bound_holds = false;

  bool holds() const { return identity_holds && triangle_holds && schwarz_holds && bound_holds; }
};

/// All operators must share one Hilbert space (4 or 8 dimensional when a
/// POVM has been dilated). Throws PreconditionError if [A_est, B_est] != 0
/// within 1e-10.
ChainReport verify_proof_chain(const qcore::HermitianOperator& a_est,
                             const qcore::HermitianOperator& b_est,
                             const qcore::HermitianOperator& a,
                             const qcore::HermitianOperator& b,
                             const qcore::DensityMatrix& rho);

/// h(x) = (sqrt(1 - x^2) - (1 - x)) / 2; non-negative on [0, 1].
double gap_weight(double x);

/// Which of the two estimates are the optimal (least-squares) ones.
enum class EstimateOptimality { none, a_only, both };

struct StrengthComparison {
  bool applicable = false;
  bool new_below_hall = false;
  bool new_below_ozawa = false;
  /// lhs_hall - lhs_new as evaluated.
  double hall_gap = 0.0;
  /// eps_A dB h(beta) + dA eps_B h(alpha) with alpha = eps_A / dA,
  /// beta = eps_B / dB.
  double predicted_gap = 0.0;
  /// The closed form holds only when both estimates are optimal.
  bool gap_checked = false;
  bool gap_matches = false;

  bool holds() const {
    return applicable && new_below_hall && new_below_ozawa && (!gap_checked || gap_matches);
  }
};

/// Ordering of the averaged-spread relation against Hall and Ozawa. Not
/// applicable (all flags false) when neither estimate is optimal.
StrengthComparison strength_comparison(const RelationReport& report,
                                       EstimateOptimality optimality);

/// Measurement-disturbance counterpart of the averaged-spread relation:
///   eps(A_est) (dB + dB') / 2 + eta(B) (dA_est + dA) / 2 >= c / 2
/// with A = X, B = Y on qubit 1, B' the slide's Heisenberg-picture image
/// of Y and eta(B) = <(B' - B)^2>^{1/2}.
struct DisturbanceReport {
  double eps_a = 0.0;
  double eta_b = 0.0;
  double delta_a = 0.0;
  double delta_b = 0.0;
  double delta_b_disturbed = 0.0;
  double delta_a_est = 0.0;
  double c = 0.0;
  double lhs = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

DisturbanceReport evaluate_md_relation(const qcore::DensityMatrix& rho,
                                       const scenario::SemiweakSlide& slide,
                                       const qcore::BlochObservable& w,
                                       const estimate::Estimator& est);

}  // namespace complementarity::relations
