// Copyright 2026 The Choilab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "choilab/harness.hpp"

namespace choilab::io {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kMapSchema = "choilab/map/v1";
inline constexpr std::string_view kStateSchema = "choilab/state/v1";
inline constexpr std::string_view kReportSchema = "choilab/report/v1";

// Complex entries serialize as [re, im] pairs; matrices as row-major nested
// arrays. Doubles round-trip bit-identically through parse/serialize.

json matrix_to_json(const CMat& m);
CMat matrix_from_json(const json& j);

json map_to_json(const QuantumMap& phi, bool prefer_kraus = true);
QuantumMap map_from_json(const json& j);

json state_to_json(const DualityState& rho);
DualityState state_from_json(const json& j);

enum class FileKind { Map, State };
FileKind peek_kind(const json& j);

json predicate_report_to_json(const PredicateReport& report, std::string_view predicate);
json verify_report_to_json(const std::vector<SuiteResult>& results,
                           const TheoremSuite& config);

json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const json& j);

QuantumMap load_map(const std::filesystem::path& path);
DualityState load_state(const std::filesystem::path& path);

}  // namespace choilab::io
