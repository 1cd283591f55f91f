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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "complementarity/dataio.hpp"
#include "complementarity/pipeline.hpp"

namespace complementarity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitVerification = 4;

enum class Mode { simulate, analyze, sweep, verify };
enum class EstimatorChoice { simple, optimal, both };

/// Conflicting or incomplete configuration.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Angles in degrees.
struct RunConfig {
  Mode mode = Mode::simulate;
  std::optional<double> gamma_deg;
  double theta_deg = 90.0;
  /// simulate: at most one value (default 180); sweep: at least one.
  std::vector<double> phis_deg;
  std::optional<double> r_h;
  std::optional<double> r_v;
  std::optional<EstimatorChoice> estimator;
  std::optional<std::string> state_file;
  std::optional<std::string> dist_file;
  std::optional<std::string> out;
  dataio::Format format = dataio::Format::json;
  std::size_t trials = 10000;
  std::uint64_t seed = 42;
  std::optional<std::string> tolerance_profile;
  pipeline::SummaryOverrides overrides;
};

/// "a,b,c" or an inclusive range "start:stop:step".
std::vector<double> parse_phi_list(std::string_view text);

EstimatorChoice parse_estimator_choice(std::string_view name);

/// Throws UsageError on conflicts (e.g. both --gamma and --state-file).
void validate(const RunConfig& config);

/// Runs one mode. Output goes to `config.out` when set, otherwise `out`;
/// diagnostics go to `err`. Returns one of the kExit* codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage problems return kExitUsage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace complementarity::cli
