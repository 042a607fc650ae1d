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

#include "infomat/generators.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "infomat/errors.hpp"
#include "infomat/kahan.hpp"

namespace infomat {

namespace {

using Value = JointDistribution::Value;
using Outcome = JointDistribution::Outcome;

std::vector<std::string> numbered_names(const std::string& prefix,
                                        std::uint32_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace

JointDistribution example_xor4() {
  std::vector<JointDistribution::Entry> entries;
  for (Value x1 = 0; x1 < 2; ++x1) {
    for (Value x2 = 0; x2 < 2; ++x2) {
      entries.push_back({Outcome{x1, x2, x1 ^ x2, 2 * x1 + x2}, 0.25});
    }
  }
  return JointDistribution({2, 2, 2, 4}, entries, numbered_names("X", 4));
}

JointDistribution sum_example() {
  std::vector<JointDistribution::Entry> entries;
  for (Value x1 = 0; x1 < 2; ++x1) {
    for (Value x2 = 0; x2 < 2; ++x2) {
      entries.push_back({Outcome{x1, x2, x1 + x2, 2 * x1 + x2}, 0.25});
    }
  }
  return JointDistribution({2, 2, 3, 4}, entries, numbered_names("X", 4));
}

JointDistribution parity_family(std::uint32_t n) {
  if (n < 2 || n > 12) {
    raise(Errc::OutOfRange, "parity family needs 2 <= n <= 12, got " +
                                std::to_string(n));
  }
  const std::uint32_t subsets = (1u << n) - 1;  // nonempty S, ascending mask
  const std::uint32_t points = 1u << n;
  const double p = 1.0 / static_cast<double>(points);

  std::vector<Value> shape(subsets, 2);
  shape.push_back(points);  // the tuple variable

  std::vector<std::string> names;
  names.reserve(subsets + 1);
  for (std::uint32_t s = 1; s <= subsets; ++s) {
    std::string label = "Y{";
    bool first = true;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!(s >> i & 1)) continue;
      if (!first) label += ',';
      label += std::to_string(i + 1);
      first = false;
    }
    label += '}';
    names.push_back(std::move(label));
  }
  names.push_back("T");

  std::vector<JointDistribution::Entry> entries;
  entries.reserve(points);
  for (std::uint32_t x = 0; x < points; ++x) {
    // bit i of x is the base bit x_{i+1}
    Outcome o;
    o.reserve(subsets + 1);
    for (std::uint32_t s = 1; s <= subsets; ++s) {
      o.push_back(static_cast<Value>(std::popcount(x & s) & 1));
    }
    // tuple encoding (x1..xn) -> sum x_i 2^(n-i): x1 most significant
    Value tuple = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      tuple |= ((x >> i) & 1u) << (n - 1 - i);
    }
    o.push_back(tuple);
    entries.push_back({std::move(o), p});
  }
  return JointDistribution(std::move(shape), entries, std::move(names));
}

SymMatrix parity_mi_matrix_closed_form(std::uint32_t n) {
  if (n < 2 || n > 30) {
    raise(Errc::OutOfRange, "closed form needs 2 <= n <= 30, got " +
                                std::to_string(n));
  }
  const std::size_t size = std::size_t{1} << n;
  SymMatrix m(size);
  for (std::size_t i = 0; i < size - 1; ++i) {
    m.set(i, i, 1.0);
    m.set(i, size - 1, 1.0);
  }
  m.set(size - 1, size - 1, static_cast<double>(n));
  return m;
}

std::vector<double> parity_closed_form_multiply(std::uint32_t n,
                                                std::span<const double> v) {
  if (n < 2 || n > 30) {
    raise(Errc::OutOfRange, "closed form needs 2 <= n <= 30, got " +
                                std::to_string(n));
  }
  const std::size_t size = std::size_t{1} << n;
  if (v.size() != size) {
    raise(Errc::ShapeMismatch, "vector of length " + std::to_string(v.size()) +
                                   " against matrix of size " +
                                   std::to_string(size));
  }
  std::vector<double> out(size);
  KahanSum border;
  for (std::size_t i = 0; i < size - 1; ++i) border.add(v[i]);
  for (std::size_t i = 0; i < size - 1; ++i) out[i] = v[i] + v[size - 1];
  out[size - 1] = border.value() + static_cast<double>(n) * v[size - 1];
  return out;
}

double parity_closed_form_frobenius(std::uint32_t n) {
  const double m = std::ldexp(1.0, static_cast<int>(n));  // 2^n
  return std::sqrt(3.0 * (m - 1.0) + static_cast<double>(n) * n);
}

ClosedFormEigenpair parity_min_eigen_closed_form(std::uint32_t n) {
  if (n < 2 || n > 30) {
    raise(Errc::OutOfRange, "closed form needs 2 <= n <= 30, got " +
                                std::to_string(n));
  }
  const double m = std::ldexp(1.0, static_cast<int>(n));  // 2^n
  const double nn = static_cast<double>(n);
  const double root = std::sqrt((nn - 1.0) * (nn - 1.0) + 4.0 * (m - 1.0));

  ClosedFormEigenpair pair;
  pair.value = (nn + 1.0 - root) / 2.0;
  pair.vector.assign(static_cast<std::size_t>(m), 1.0);
  pair.vector.back() = (nn - 1.0 - root) / 2.0;
  return pair;
}

JointDistribution independent_uniform_bits(std::uint32_t n) {
  if (n == 0) raise(Errc::OutOfRange, "need at least one bit");
  const std::vector<JointDistribution::Entry> bit = {{Outcome{0}, 0.5},
                                                     {Outcome{1}, 0.5}};
  JointDistribution d({2}, bit, std::vector<std::string>{"B1"});
  for (std::uint32_t i = 1; i < n; ++i) {
    JointDistribution next({2}, bit,
                           std::vector<std::string>{"B" + std::to_string(i + 1)});
    d = product(d, next);
  }
  return d;
}

JointDistribution embed_with_independent(const JointDistribution& dist,
                                         std::uint32_t extra_bits) {
  if (extra_bits == 0) return dist;
  return product(dist, independent_uniform_bits(extra_bits));
}

}  // namespace infomat
