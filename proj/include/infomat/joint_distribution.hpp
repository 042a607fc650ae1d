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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infomat/variable_set.hpp"

namespace infomat {

/// A finite discrete joint distribution over n variables, stored as a
/// sparse support table. Immutable after construction and safe for
/// concurrent reads.
///
/// Invariants maintained by every constructor and transformer:
///   - outcome tuples have length n with coordinate i < shape[i],
///   - the support is unique and sorted in ascending lexicographic
///     order,
///   - every stored probability is > 0 (zero-mass outcomes are dropped,
///     so 0 * log 0 never arises downstream),
///   - probabilities sum to 1 within 1e-12 (Kahan-summed in support
///     order).
class JointDistribution {
 public:
  using Value = std::uint32_t;
  using Outcome = std::vector<Value>;
  using Entry = std::pair<Outcome, double>;

  /// Validating constructor. Zero-probability entries are dropped,
  /// entries are sorted, duplicates and out-of-range outcomes rejected,
  /// and the total probability checked against 1 within 1e-12.
  JointDistribution(std::vector<Value> shape, const std::vector<Entry>& entries,
                    std::optional<std::vector<std::string>> names = std::nullopt);

  std::size_t num_variables() const noexcept { return shape_.size(); }
  const std::vector<Value>& shape() const noexcept { return shape_; }
  std::size_t support_size() const noexcept { return probs_.size(); }

  /// k-th support outcome, in ascending lexicographic order.
  std::span<const Value> outcome(std::size_t k) const noexcept {
    return {values_.data() + k * shape_.size(), shape_.size()};
  }

  double probability(std::size_t k) const noexcept { return probs_[k]; }
  const std::vector<double>& probabilities() const noexcept { return probs_; }

  /// Optional display labels; never semantics.
  const std::optional<std::vector<std::string>>& names() const noexcept {
    return names_;
  }
  JointDistribution with_names(std::vector<std::string> names) const;

  /// Kahan sum of the support probabilities in canonical order.
  double total_probability() const noexcept;

  /// Exact comparison of shape, support and probabilities (names are
  /// display-only and ignored).
  bool same_distribution(const JointDistribution& other) const noexcept {
    return shape_ == other.shape_ && values_ == other.values_ &&
           probs_ == other.probs_;
  }

 private:
  struct Canonical {};  // tag: data already satisfies all invariants
  JointDistribution(Canonical, std::vector<Value> shape,
                    std::vector<Value> values, std::vector<double> probs,
                    std::optional<std::vector<std::string>> names);

  void validate() const;

  std::vector<Value> shape_;
  std::vector<Value> values_;  // flat outcomes, support_size * n
  std::vector<double> probs_;
  std::optional<std::vector<std::string>> names_;

  friend JointDistribution marginal(const JointDistribution&, const VariableSet&);
  friend JointDistribution extend_with_derived(const JointDistribution&,
                                               const struct DerivedVariableMap&);
  friend JointDistribution product(const JointDistribution&, const JointDistribution&);
};

/// A deterministic function of the existing variables, used to append a
/// derived variable. The mapper must produce a value < alphabet_size for
/// every support outcome; std::nullopt marks an outcome as unmapped.
struct DerivedVariableMap {
  using Value = JointDistribution::Value;

  Value alphabet_size = 0;
  std::function<std::optional<Value>(std::span<const Value>)> map;
  std::optional<std::string> name;

  static DerivedVariableMap from_function(
      Value alphabet_size, std::function<Value(std::span<const Value>)> fn,
      std::optional<std::string> name = std::nullopt);

  /// Sparse table form; outcomes absent from the table are unmapped.
  static DerivedVariableMap from_table(
      Value alphabet_size,
      std::map<JointDistribution::Outcome, Value> table,
      std::optional<std::string> name = std::nullopt);
};

/// Projects the distribution onto the variables in s (ascending index
/// order). Probabilities of colliding projections are Kahan-summed in
/// ascending lexicographic order of the source support.
JointDistribution marginal(const JointDistribution& dist, const VariableSet& s);

/// Appends map(outcome) as variable n. Support size and probabilities
/// are unchanged; determinism adds no entropy.
JointDistribution extend_with_derived(const JointDistribution& dist,
                                      const DerivedVariableMap& map);

/// Independent product: concatenated shape, Cartesian-product support
/// with multiplied probabilities.
JointDistribution product(const JointDistribution& d1, const JointDistribution& d2);

}  // namespace infomat
