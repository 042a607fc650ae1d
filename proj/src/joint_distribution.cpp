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

#include "infomat/joint_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "infomat/errors.hpp"
#include "infomat/kahan.hpp"

namespace infomat {

namespace {

constexpr double kNormalizationTol = 1e-12;

std::string outcome_to_string(std::span<const JointDistribution::Value> o) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i) out << ',';
    out << o[i];
  }
  out << ')';
  return out.str();
}

// Lexicographic comparison of two flat outcomes of equal width.
bool flat_less(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
  return std::lexicographical_compare(a, a + n, b, b + n);
}

}  // namespace

JointDistribution::JointDistribution(
    std::vector<Value> shape, const std::vector<Entry>& entries,
    std::optional<std::vector<std::string>> names)
    : shape_(std::move(shape)), names_(std::move(names)) {
  if (shape_.empty()) raise(Errc::OutOfRange, "need at least one variable");
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (shape_[i] == 0) {
      raise(Errc::OutOfRange,
            "alphabet size of variable " + std::to_string(i) + " is zero");
    }
  }
  if (entries.empty()) raise(Errc::OutOfRange, "support must be nonempty");
  if (names_ && names_->size() != shape_.size()) {
    raise(Errc::ShapeMismatch, "got " + std::to_string(names_->size()) +
                                   " names for " +
                                   std::to_string(shape_.size()) + " variables");
  }

  const std::size_t n = shape_.size();
  std::vector<const Entry*> kept;
  kept.reserve(entries.size());
  for (const Entry& e : entries) {
    if (e.first.size() != n) {
      raise(Errc::OutcomeOutOfRange,
            "outcome " + outcome_to_string(e.first) + " has length " +
                std::to_string(e.first.size()) + ", expected " +
                std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (e.first[i] >= shape_[i]) {
        raise(Errc::OutcomeOutOfRange,
              "outcome " + outcome_to_string(e.first) + " exceeds alphabet " +
                  std::to_string(shape_[i]) + " at variable " +
                  std::to_string(i));
      }
    }
    if (e.second < 0.0 || !std::isfinite(e.second)) {
      raise(Errc::NegativeProbability,
            "probability " + std::to_string(e.second) + " at outcome " +
                outcome_to_string(e.first));
    }
    if (e.second > 0.0) kept.push_back(&e);
  }

  std::sort(kept.begin(), kept.end(),
            [](const Entry* a, const Entry* b) { return a->first < b->first; });
  for (std::size_t k = 1; k < kept.size(); ++k) {
    if (kept[k]->first == kept[k - 1]->first) {
      raise(Errc::DuplicateOutcome, outcome_to_string(kept[k]->first));
    }
  }

  values_.reserve(kept.size() * n);
  probs_.reserve(kept.size());
  for (const Entry* e : kept) {
    values_.insert(values_.end(), e->first.begin(), e->first.end());
    probs_.push_back(e->second);
  }
  validate();
}

JointDistribution::JointDistribution(Canonical, std::vector<Value> shape,
                                     std::vector<Value> values,
                                     std::vector<double> probs,
                                     std::optional<std::vector<std::string>> names)
    : shape_(std::move(shape)),
      values_(std::move(values)),
      probs_(std::move(probs)),
      names_(std::move(names)) {
  validate();
}

void JointDistribution::validate() const {
  if (probs_.empty()) {
    raise(Errc::ProbabilityNotNormalized, "support is empty, total mass 0");
  }
  const double total = total_probability();
  const double deviation = total - 1.0;
  if (std::abs(deviation) > kNormalizationTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << total << " (deviation " << deviation
        << ", tolerance " << kNormalizationTol << ")";
    raise(Errc::ProbabilityNotNormalized, msg.str());
  }
}

double JointDistribution::total_probability() const noexcept {
  KahanSum sum;
  for (double p : probs_) sum.add(p);
  return sum.value();
}

JointDistribution JointDistribution::with_names(
    std::vector<std::string> names) const {
  if (names.size() != shape_.size()) {
    raise(Errc::ShapeMismatch, "got " + std::to_string(names.size()) +
                                   " names for " +
                                   std::to_string(shape_.size()) + " variables");
  }
  return JointDistribution(Canonical{}, shape_, values_, probs_,
                           std::move(names));
}

DerivedVariableMap DerivedVariableMap::from_function(
    Value alphabet_size, std::function<Value(std::span<const Value>)> fn,
    std::optional<std::string> name) {
  DerivedVariableMap m;
  m.alphabet_size = alphabet_size;
  m.map = [fn = std::move(fn)](std::span<const Value> o) {
    return std::optional<Value>(fn(o));
  };
  m.name = std::move(name);
  return m;
}

DerivedVariableMap DerivedVariableMap::from_table(
    Value alphabet_size, std::map<JointDistribution::Outcome, Value> table,
    std::optional<std::string> name) {
  DerivedVariableMap m;
  m.alphabet_size = alphabet_size;
  m.map = [table = std::move(table)](
              std::span<const Value> o) -> std::optional<Value> {
    const auto it = table.find(JointDistribution::Outcome(o.begin(), o.end()));
    if (it == table.end()) return std::nullopt;
    return it->second;
  };
  m.name = std::move(name);
  return m;
}

JointDistribution marginal(const JointDistribution& dist, const VariableSet& s) {
  if (s.empty()) raise(Errc::EmptyVariableSet, "marginal needs a nonempty set");
  const std::size_t n = dist.num_variables();
  if (s.max_index() >= n) {
    raise(Errc::IndexOutOfRange, "variable " + std::to_string(s.max_index()) +
                                     " of a " + std::to_string(n) +
                                     "-variable distribution");
  }

  const auto& idx = s.indices();
  const std::size_t m = idx.size();
  const std::size_t k = dist.support_size();

  // Project in source order (already ascending lex), then stable-sort by
  // the projected key. Ties keep source order, so each collision group
  // is Kahan-summed in ascending lexicographic order of the source
  // support.
  std::vector<std::uint32_t> projected(k * m);
  std::vector<std::uint32_t> order(k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto o = dist.outcome(r);
    for (std::size_t c = 0; c < m; ++c) projected[r * m + c] = o[idx[c]];
    order[r] = static_cast<std::uint32_t>(r);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return flat_less(&projected[a * m], &projected[b * m], m);
                   });

  std::vector<JointDistribution::Value> values;
  std::vector<double> probs;
  std::size_t r = 0;
  while (r < k) {
    std::size_t run_end = r + 1;
    while (run_end < k && !flat_less(&projected[order[r] * m],
                                     &projected[order[run_end] * m], m)) {
      ++run_end;
    }
    KahanSum group;
    for (std::size_t q = r; q < run_end; ++q) {
      group.add(dist.probability(order[q]));
    }
    values.insert(values.end(), &projected[order[r] * m],
                  &projected[order[r] * m] + m);
    probs.push_back(group.value());
    r = run_end;
  }

  std::vector<JointDistribution::Value> shape(m);
  for (std::size_t c = 0; c < m; ++c) shape[c] = dist.shape()[idx[c]];

  std::optional<std::vector<std::string>> names;
  if (dist.names()) {
    names.emplace();
    for (std::size_t c = 0; c < m; ++c) names->push_back((*dist.names())[idx[c]]);
  }
  return JointDistribution(JointDistribution::Canonical{}, std::move(shape),
                           std::move(values), std::move(probs), std::move(names));
}

JointDistribution extend_with_derived(const JointDistribution& dist,
                                      const DerivedVariableMap& map) {
  if (map.alphabet_size == 0) {
    raise(Errc::OutOfRange, "derived variable alphabet size is zero");
  }
  const std::size_t n = dist.num_variables();
  const std::size_t k = dist.support_size();

  std::vector<JointDistribution::Value> values;
  values.reserve(k * (n + 1));
  for (std::size_t r = 0; r < k; ++r) {
    const auto o = dist.outcome(r);
    const auto image = map.map(o);
    if (!image) {
      raise(Errc::UnmappedOutcome, outcome_to_string(o));
    }
    if (*image >= map.alphabet_size) {
      raise(Errc::OutcomeOutOfRange,
            "derived value " + std::to_string(*image) + " at outcome " +
                outcome_to_string(o) + " exceeds alphabet " +
                std::to_string(map.alphabet_size));
    }
    values.insert(values.end(), o.begin(), o.end());
    values.push_back(*image);
  }
  // Appending a coordinate to unique, sorted prefixes keeps the support
  // unique and sorted.
  std::vector<JointDistribution::Value> shape = dist.shape();
  shape.push_back(map.alphabet_size);

  std::optional<std::vector<std::string>> names;
  if (dist.names() && map.name) {
    names = *dist.names();
    names->push_back(*map.name);
  }
  return JointDistribution(JointDistribution::Canonical{}, std::move(shape),
                           std::move(values), dist.probabilities(),
                           std::move(names));
}

JointDistribution product(const JointDistribution& d1,
                          const JointDistribution& d2) {
  const std::size_t n1 = d1.num_variables();
  const std::size_t n2 = d2.num_variables();
  const std::size_t k1 = d1.support_size();
  const std::size_t k2 = d2.support_size();

  std::vector<JointDistribution::Value> shape = d1.shape();
  shape.insert(shape.end(), d2.shape().begin(), d2.shape().end());

  // Outer loop over d1 keeps the product support in ascending
  // lexicographic order.
  std::vector<JointDistribution::Value> values;
  std::vector<double> probs;
  values.reserve(k1 * k2 * (n1 + n2));
  probs.reserve(k1 * k2);
  for (std::size_t a = 0; a < k1; ++a) {
    const auto oa = d1.outcome(a);
    for (std::size_t b = 0; b < k2; ++b) {
      const auto ob = d2.outcome(b);
      values.insert(values.end(), oa.begin(), oa.end());
      values.insert(values.end(), ob.begin(), ob.end());
      probs.push_back(d1.probability(a) * d2.probability(b));
    }
  }

  std::optional<std::vector<std::string>> names;
  if (d1.names() && d2.names()) {
    names = *d1.names();
    names->insert(names->end(), d2.names()->begin(), d2.names()->end());
  }
  return JointDistribution(JointDistribution::Canonical{}, std::move(shape),
                           std::move(values), std::move(probs), std::move(names));
}

}  // namespace infomat
