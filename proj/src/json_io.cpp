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

#include "infomat/json_io.hpp"

#include <istream>
#include <sstream>

#include "infomat/errors.hpp"

namespace infomat {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) {
    raise(Errc::ParseError,
          std::string(what) + " is missing required key \"" + key + "\"");
  }
  return *it;
}

std::string atom_key(std::uint32_t mask) {
  std::string key;
  for (std::uint32_t i = 0; mask >> i; ++i) {
    if (!(mask >> i & 1)) continue;
    if (!key.empty()) key += ',';
    key += std::to_string(i + 1);
  }
  return key;
}

std::uint32_t atom_mask_from_key(const std::string& key, std::uint32_t n) {
  std::uint32_t mask = 0;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t pos = 0;
    unsigned long index = 0;
    try {
      index = std::stoul(part, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != part.size() || index < 1 || index > n) {
      raise(Errc::ParseError, "bad atom key \"" + key + "\"");
    }
    mask |= 1u << (index - 1);
  }
  if (mask == 0) raise(Errc::ParseError, "empty atom key");
  return mask;
}

}  // namespace

json to_json(const JointDistribution& dist) {
  json support = json::array();
  for (std::size_t k = 0; k < dist.support_size(); ++k) {
    const auto o = dist.outcome(k);
    support.push_back(json{{"o", std::vector<JointDistribution::Value>(
                                     o.begin(), o.end())},
                           {"p", dist.probability(k)}});
  }
  json j{{"shape", dist.shape()}, {"support", std::move(support)}};
  if (dist.names()) j["names"] = *dist.names();
  return j;
}

JointDistribution distribution_from_json(const json& j) {
  if (!j.is_object()) raise(Errc::ParseError, "distribution must be an object");
  const json& shape_j = require(j, "shape", "distribution");
  const json& support_j = require(j, "support", "distribution");
  if (!shape_j.is_array() || !support_j.is_array()) {
    raise(Errc::ParseError, "\"shape\" and \"support\" must be arrays");
  }

  std::vector<JointDistribution::Value> shape;
  for (const auto& s : shape_j) {
    if (!s.is_number_unsigned()) {
      raise(Errc::ParseError, "alphabet sizes must be positive integers");
    }
    shape.push_back(s.get<JointDistribution::Value>());
  }

  std::vector<JointDistribution::Entry> entries;
  entries.reserve(support_j.size());
  for (const auto& e : support_j) {
    const json& o = require(e, "o", "support entry");
    const json& p = require(e, "p", "support entry");
    if (!o.is_array() || !p.is_number()) {
      raise(Errc::ParseError, "support entries need an outcome array and a number");
    }
    JointDistribution::Outcome outcome;
    for (const auto& v : o) {
      if (!v.is_number_unsigned()) {
        raise(Errc::ParseError, "outcome coordinates must be nonnegative integers");
      }
      outcome.push_back(v.get<JointDistribution::Value>());
    }
    entries.push_back({std::move(outcome), p.get<double>()});
  }

  std::optional<std::vector<std::string>> names;
  if (const auto it = j.find("names"); it != j.end()) {
    names = it->get<std::vector<std::string>>();
  }
  return JointDistribution(std::move(shape), entries, std::move(names));
}

json to_json(const SymMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.size()}, {"entries", std::move(rows)}};
}

json to_json(const MIMatrix& m) { return to_json(m.sym()); }

SymMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) raise(Errc::ParseError, "matrix must be an object");
  const json& n_j = require(j, "n", "matrix");
  const json& entries_j = require(j, "entries", "matrix");
  if (!n_j.is_number_unsigned() || !entries_j.is_array()) {
    raise(Errc::ParseError, "\"n\" must be a size and \"entries\" an array of rows");
  }
  const std::size_t n = n_j.get<std::size_t>();
  if (entries_j.size() != n) {
    raise(Errc::ParseError, "expected " + std::to_string(n) + " rows, got " +
                                std::to_string(entries_j.size()));
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(n);
  for (const auto& row : entries_j) {
    if (!row.is_array() || row.size() != n) {
      raise(Errc::ParseError, "matrix rows must have length n");
    }
    rows.push_back(row.get<std::vector<double>>());
  }
  return SymMatrix::from_rows(rows);
}

json to_json(const AtomTable& atoms) {
  json table = json::object();
  const std::uint32_t full = (1u << atoms.n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    table[atom_key(mask)] = atoms.value(mask);
  }
  return json{{"n", atoms.n}, {"atoms", std::move(table)}};
}

AtomTable atoms_from_json(const json& j) {
  if (!j.is_object()) raise(Errc::ParseError, "atom table must be an object");
  const json& n_j = require(j, "n", "atom table");
  const json& atoms_j = require(j, "atoms", "atom table");
  if (!n_j.is_number_unsigned() || !atoms_j.is_object()) {
    raise(Errc::ParseError, "\"n\" must be a count and \"atoms\" an object");
  }
  const auto n = n_j.get<std::uint32_t>();
  if (n == 0 || n > 31) raise(Errc::ParseError, "atom table arity out of range");
  const std::uint32_t full = (1u << n) - 1;
  AtomTable atoms{n, std::vector<double>(full, 0.0)};
  std::vector<bool> seen(full, false);
  for (const auto& [key, value] : atoms_j.items()) {
    const std::uint32_t mask = atom_mask_from_key(key, n);
    if (seen[mask - 1]) raise(Errc::ParseError, "repeated atom key \"" + key + "\"");
    seen[mask - 1] = true;
    atoms.values[mask - 1] = value.get<double>();
  }
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!seen[mask - 1]) {
      raise(Errc::ParseError, "missing atom key \"" + atom_key(mask) + "\"");
    }
  }
  return atoms;
}

json to_json(const SearchConfig& config) {
  json j{{"shape", config.shape},
         {"seed", config.seed},
         {"iterations", config.iterations},
         {"restarts", config.restarts},
         {"step_sigma", config.step_sigma},
         {"initial_temperature", config.initial_temperature},
         {"temperature_decay", config.temperature_decay},
         {"init_noise", config.init_noise}};
  if (!config.init_params.empty()) j["init_params"] = config.init_params;
  return j;
}

SearchConfig search_config_from_json(const json& j) {
  if (!j.is_object()) raise(Errc::ParseError, "search config must be an object");
  SearchConfig config;
  config.shape = require(j, "shape", "search config").get<std::vector<std::uint32_t>>();
  config.seed = require(j, "seed", "search config").get<std::uint64_t>();
  config.iterations = require(j, "iterations", "search config").get<std::uint64_t>();
  config.restarts = require(j, "restarts", "search config").get<std::uint32_t>();
  config.step_sigma = require(j, "step_sigma", "search config").get<double>();
  config.initial_temperature =
      require(j, "initial_temperature", "search config").get<double>();
  config.temperature_decay =
      require(j, "temperature_decay", "search config").get<double>();
  if (const auto it = j.find("init_noise"); it != j.end()) {
    config.init_noise = it->get<double>();
  }
  if (const auto it = j.find("init_params"); it != j.end()) {
    config.init_params = it->get<std::vector<double>>();
  }
  return config;
}

json run_log_json(const SearchResult& result) {
  json trace = json::array();
  for (const auto& [iteration, value] : result.trace) {
    trace.push_back(json::array({iteration, value}));
  }
  return json{{"config", to_json(result.config)},
              {"best_lambda_min", result.best_lambda_min},
              {"trace", std::move(trace)},
              {"best_distribution", to_json(result.best_distribution)}};
}

SearchResult run_log_from_json(const json& j) {
  if (!j.is_object()) raise(Errc::ParseError, "run log must be an object");
  const json& trace_j = require(j, "trace", "run log");
  if (!trace_j.is_array()) raise(Errc::ParseError, "\"trace\" must be an array");
  std::vector<std::pair<std::uint64_t, double>> trace;
  trace.reserve(trace_j.size());
  for (const auto& point : trace_j) {
    if (!point.is_array() || point.size() != 2) {
      raise(Errc::ParseError, "trace points must be [iteration, value] pairs");
    }
    trace.emplace_back(point[0].get<std::uint64_t>(), point[1].get<double>());
  }
  return SearchResult{
      .best_lambda_min = require(j, "best_lambda_min", "run log").get<double>(),
      .best_distribution =
          distribution_from_json(require(j, "best_distribution", "run log")),
      .trace = std::move(trace),
      .config = search_config_from_json(require(j, "config", "run log")),
      .best_restart = 0,
      .no_convergence_rejects = 0};
}

json to_json(const VerifyReport& report) {
  return json{{"samples", report.samples},
              {"violations", report.violations},
              {"certificates_checked", report.certificates_checked},
              {"worst_lambda_min", report.worst_lambda_min},
              {"max_certificate_error", report.max_certificate_error},
              {"worst_coefficient", report.worst_coefficient}};
}

VerifyReport verify_report_from_json(const json& j) {
  VerifyReport report;
  report.samples = require(j, "samples", "report").get<std::uint64_t>();
  report.violations = require(j, "violations", "report").get<std::uint64_t>();
  report.certificates_checked =
      require(j, "certificates_checked", "report").get<std::uint64_t>();
  report.worst_lambda_min =
      require(j, "worst_lambda_min", "report").get<double>();
  report.max_certificate_error =
      require(j, "max_certificate_error", "report").get<double>();
  report.worst_coefficient =
      require(j, "worst_coefficient", "report").get<double>();
  return report;
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    raise(Errc::ParseError, origin + ": " + e.what());
  }
}

json parse_json(std::istream& in, const std::string& origin) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    raise(Errc::ParseError, origin + ": " + e.what());
  }
}

}  // namespace infomat
