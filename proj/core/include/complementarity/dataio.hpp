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

// Text formats.
//
// Joint distribution CSV:
//
//   # theta=90
//   # phi=180
//   # r_H=0.1244
//   # r_V=0.4645
//   m,y,w,p,sigma
//   1,1,1,0.282,0.002
//   ...            (8 rows, every (m, y, w) in {+1,-1}^3 exactly once)
//
// m = +1 is the transmitted slide port, m = -1 the reflected one. sigma may
// be left empty. Metadata lines are optional and order-free.
//
// Density matrix CSV: optional "# key=value" lines, an optional
// "row,col,re,im" header and 16 rows "row,col,re,im" covering the 4x4
// matrix in the |HH>, |HV>, |VH>, |VV> basis.
//
// Numbers are written with 12 significant digits.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "complementarity/qcore.hpp"
#include "complementarity/relations.hpp"
#include "complementarity/scenario.hpp"
#include "complementarity/tolerance.hpp"

namespace complementarity::dataio {

using Metadata = std::map<std::string, std::string>;

/// "%.12g".
std::string format_number(double v);

struct DistributionRecord {
  int m = 1;
  int y = 1;
  int w = 1;
  double p = 0.0;
  std::optional<double> sigma;
};

struct DistributionFile {
  /// Canonical (m-major) order, see scenario::JointDistribution::index.
  std::array<DistributionRecord, 8> records;
  Metadata metadata;

  std::optional<double> theta_deg() const;
  std::optional<double> phi_deg() const;
  std::optional<double> r_h() const;
  std::optional<double> r_v() const;
  double total() const;
};

/// Structural parse: header, exactly eight distinct (m, y, w) rows,
/// numeric fields. Does not check normalisation. Throws DataError.
DistributionFile parse_distribution_file(std::string_view text);

/// Structural parse plus validation (entries >= -1e-9, sum within
/// `tol.distribution_sum` of 1). The W observable comes from theta/phi
/// metadata when present. Throws DataError naming the offending sum.
scenario::JointDistribution parse_distribution(
    std::string_view text, const ToleranceProfile& tol = ToleranceProfile::strict());

scenario::JointDistribution to_joint_distribution(
    const DistributionFile& file, const ToleranceProfile& tol = ToleranceProfile::strict());

DistributionFile make_distribution_file(const scenario::JointDistribution& dist,
                                        Metadata metadata = {});

std::string write_distribution(const DistributionFile& file);

struct DensityMatrixFile {
  qcore::ComplexMatrix entries = qcore::ComplexMatrix::Zero(4, 4);
  Metadata metadata;
};

DensityMatrixFile parse_density_matrix_file(std::string_view text);

/// Parses and validates a two-qubit state. The default tomographic profile
/// rejects non-Hermiticity above 1e-6 and trace errors above 1e-3, and
/// accepts eigenvalues down to -1e-3 (flagged on the returned state).
qcore::DensityMatrix parse_density_matrix(
    std::string_view text, const ToleranceProfile& tol = ToleranceProfile::tomographic());

std::string write_density_matrix(const qcore::DensityMatrix& rho, const Metadata& metadata = {});

enum class Format { json, csv };

/// Throws DomainError for anything but "json" or "csv".
Format parse_format(std::string_view name);

/// JSON: scenario, inputs, bound, lhs_ak, lhs_hall, lhs_ozawa, lhs_new,
/// flags. CSV: header plus one row.
std::string emit_report(const relations::RelationReport& report, Format format);

/// Several reports: a JSON array, or one CSV header plus a row each.
std::string emit_reports(const std::vector<relations::RelationReport>& reports, Format format);

/// Inverse of emit_report(report, Format::json).
relations::RelationReport parse_report_json(std::string_view text);

/// One point of a W sweep: the relation report for one estimator and the
/// inaccuracy-dispersion columns for simple and optimal estimates.
struct SweepRow {
  double theta_deg = 0.0;
  double phi_deg = 0.0;
  relations::RelationReport report;
  double eps_x_simple = 0.0;
  double eps_x_opt = 0.0;
  double delta_x_opt = 0.0;
  double delta_x = 0.0;
  /// sqrt(eps_x_opt^2 + delta_x_opt^2); tracks delta_x.
  double dispersion_root = 0.0;
};

/// Rows are emitted in the given order.
std::string emit_sweep(const std::vector<SweepRow>& rows, Format format);

}  // namespace complementarity::dataio
