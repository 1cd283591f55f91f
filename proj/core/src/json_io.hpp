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

// Private JSON helpers shared by dataio.cpp and pipeline.cpp.

#pragma once

#include <json.hpp>

#include "complementarity/relations.hpp"

namespace complementarity::dataio::detail {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so the shortest round-trip
/// representation printed by the JSON writer matches format_number().
double rounded(double v);

Json to_json(const relations::ScenarioDescriptor& s);
Json to_json(const relations::RelationReport& r);
relations::RelationReport report_from_json(const Json& j);

}  // namespace complementarity::dataio::detail
