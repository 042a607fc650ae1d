/**
 *  Copyright (c) 2026 the infomat authors.
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing,
 *  software distributed under the License is distributed on an "AS
 *  IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either
 *  express or implied.  See the License for the specific language
 *  governing permissions and limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "infomat/info.hpp"
#include "infomat/joint_distribution.hpp"
#include "infomat/linalg.hpp"
#include "infomat/search.hpp"

namespace infomat {

// Distribution JSON:
//   {"shape":[2,2], "names":["X1","X2"], "support":[{"o":[0,0],"p":0.5}, ...]}
// "names" is optional; support order in files may be arbitrary and is
// canonicalized (sorted) on load.
nlohmann::json to_json(const JointDistribution& dist);
JointDistribution distribution_from_json(const nlohmann::json& j);

// Matrix JSON: {"n":4, "entries":[[...], ...]}
nlohmann::json to_json(const SymMatrix& m);
nlohmann::json to_json(const MIMatrix& m);
SymMatrix matrix_from_json(const nlohmann::json& j);

// Atom table JSON: {"n":3, "atoms":{"1":0.0, "1,2":1.0, ...}} with keys
// the comma-joined ascending 1-based variable indices of each atom.
nlohmann::json to_json(const AtomTable& atoms);
AtomTable atoms_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchConfig& config);
SearchConfig search_config_from_json(const nlohmann::json& j);

// Run-log JSON:
//   {"config":{...}, "best_lambda_min":..., "trace":[[iter,val],...],
//    "best_distribution":{distribution JSON}}
nlohmann::json run_log_json(const SearchResult& result);
SearchResult run_log_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerifyReport& report);
VerifyReport verify_report_from_json(const nlohmann::json& j);

/// Parses text as JSON; wraps parse failures in Errc::ParseError.
nlohmann::json parse_json(const std::string& text, const std::string& origin);
nlohmann::json parse_json(std::istream& in, const std::string& origin);

}  // namespace infomat
