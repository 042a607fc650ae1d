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

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace infomat {

/// A subset of the variable indices {0, ..., n-1}. Stored as a sorted
/// list of unique indices so it is not capped at 64 variables; the
/// 64-bit mask constructor covers the common case.
class VariableSet {
 public:
  VariableSet() = default;

  VariableSet(std::initializer_list<std::uint32_t> indices)
      : VariableSet(std::vector<std::uint32_t>(indices)) {}

  explicit VariableSet(std::vector<std::uint32_t> indices)
      : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()),
                   indices_.end());
  }

  static VariableSet from_mask(std::uint64_t mask) {
    std::vector<std::uint32_t> indices;
    for (std::uint32_t i = 0; i < 64; ++i) {
      if (mask >> i & 1) indices.push_back(i);
    }
    return VariableSet(std::move(indices));
  }

  /// The full set {0, ..., n-1}.
  static VariableSet full(std::uint32_t n) {
    std::vector<std::uint32_t> indices(n);
    for (std::uint32_t i = 0; i < n; ++i) indices[i] = i;
    return VariableSet(std::move(indices));
  }

  bool empty() const noexcept { return indices_.empty(); }
  std::size_t size() const noexcept { return indices_.size(); }

  bool contains(std::uint32_t i) const noexcept {
    return std::binary_search(indices_.begin(), indices_.end(), i);
  }

  /// Largest contained index; requires a nonempty set.
  std::uint32_t max_index() const noexcept { return indices_.back(); }

  /// Indices in ascending order.
  const std::vector<std::uint32_t>& indices() const noexcept {
    return indices_;
  }

  bool operator==(const VariableSet& other) const noexcept {
    return indices_ == other.indices_;
  }

 private:
  std::vector<std::uint32_t> indices_;
};

}  // namespace infomat
