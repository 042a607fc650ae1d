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

#include "infomat/info.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "infomat/errors.hpp"
#include "infomat/kahan.hpp"

namespace infomat {

namespace {

// Entropy of a list of positive masses in bits. Terms are sorted by
// value before the compensated sum, so the result depends only on the
// multiset of probabilities, never on how outcomes happen to be
// labeled or ordered.
double entropy_of_masses(std::vector<double>& masses) {
  std::sort(masses.begin(), masses.end());
  KahanSum h;
  for (double p : masses) h.add(-p * std::log2(p));
  // -p log2 p >= 0 for p <= 1; only a total mass a hair above 1 can
  // push the sum epsilon-negative.
  return std::max(h.value(), 0.0);
}

// Entropy of the marginal on the given ascending variable indices.
// Collision groups are summed by ascending probability value (equal
// values are interchangeable), which together with entropy_of_masses
// makes pair and subset entropies exactly permutation-invariant.
double canonical_entropy(const JointDistribution& dist,
                         const std::vector<std::uint32_t>& idx) {
  const std::size_t m = idx.size();
  const std::size_t k = dist.support_size();

  std::vector<std::uint32_t> projected(k * m);
  std::vector<std::uint32_t> order(k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto o = dist.outcome(r);
    for (std::size_t c = 0; c < m; ++c) projected[r * m + c] = o[idx[c]];
    order[r] = static_cast<std::uint32_t>(r);
  }
  auto key_less = [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(&projected[a * m], &projected[a * m] + m,
                                        &projected[b * m], &projected[b * m] + m);
  };
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (key_less(a, b)) return true;
    if (key_less(b, a)) return false;
    return dist.probability(a) < dist.probability(b);
  });

  std::vector<double> masses;
  std::size_t r = 0;
  while (r < k) {
    std::size_t run_end = r + 1;
    while (run_end < k && !key_less(order[r], order[run_end])) ++run_end;
    KahanSum group;
    for (std::size_t q = r; q < run_end; ++q) group.add(dist.probability(order[q]));
    masses.push_back(group.value());
    r = run_end;
  }
  return entropy_of_masses(masses);
}

void check_index(const JointDistribution& dist, std::uint32_t i) {
  if (i >= dist.num_variables()) {
    raise(Errc::IndexOutOfRange, "variable " + std::to_string(i) + " of a " +
                                     std::to_string(dist.num_variables()) +
                                     "-variable distribution");
  }
}

double pair_mi(const JointDistribution& dist, double h_i, double h_j,
               std::uint32_t i, std::uint32_t j) {
  const double h_ij = canonical_entropy(dist, {std::min(i, j), std::max(i, j)});
  return h_i + h_j - h_ij;
}

}  // namespace

double subset_entropy(const JointDistribution& dist, const VariableSet& s) {
  if (s.empty()) raise(Errc::EmptyVariableSet, "entropy needs a nonempty set");
  if (s.max_index() >= dist.num_variables()) {
    raise(Errc::IndexOutOfRange, "variable " + std::to_string(s.max_index()) +
                                     " of a " +
                                     std::to_string(dist.num_variables()) +
                                     "-variable distribution");
  }
  return canonical_entropy(dist, s.indices());
}

double mutual_information(const JointDistribution& dist, std::uint32_t i,
                          std::uint32_t j) {
  check_index(dist, i);
  check_index(dist, j);
  if (i == j) return canonical_entropy(dist, {i});
  const double h_i = canonical_entropy(dist, {i});
  const double h_j = canonical_entropy(dist, {j});
  return pair_mi(dist, h_i, h_j, i, j);
}

MIMatrix mi_matrix(const JointDistribution& dist) {
  const std::size_t n = dist.num_variables();
  MIMatrix m{n, std::vector<double>(n * n, 0.0)};

  std::vector<double> diag(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    diag[i] = canonical_entropy(dist, {static_cast<std::uint32_t>(i)});
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(pairs.size()); ++p) {
    const auto [i, j] = pairs[p];
    const double value = pair_mi(dist, diag[i], diag[j], i, j);
    m.entries[i * n + j] = value;
    m.entries[j * n + i] = value;
  }
  for (std::size_t i = 0; i < n; ++i) m.entries[i * n + i] = diag[i];
  return m;
}

MIMatrix mi_matrix_reference(const JointDistribution& dist) {
  const std::size_t n = dist.num_variables();
  MIMatrix m{n, std::vector<double>(n * n, 0.0)};
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      const double value = mutual_information(dist, i, j);
      m.entries[i * n + j] = value;
      m.entries[j * n + i] = value;
    }
  }
  return m;
}

double conditional_mi(const JointDistribution& dist, std::uint32_t i,
                      std::uint32_t j, std::uint32_t k) {
  check_index(dist, i);
  check_index(dist, j);
  check_index(dist, k);
  if (i == j || i == k || j == k) {
    raise(Errc::IndicesNotDistinct, std::to_string(i) + ", " +
                                        std::to_string(j) + ", " +
                                        std::to_string(k));
  }
  const double h_ik = subset_entropy(dist, {i, k});
  const double h_jk = subset_entropy(dist, {j, k});
  const double h_k = subset_entropy(dist, {k});
  const double h_ijk = subset_entropy(dist, {i, j, k});
  return h_ik + h_jk - h_k - h_ijk;
}

double triple_information(const JointDistribution& dist, std::uint32_t i,
                          std::uint32_t j, std::uint32_t k) {
  return mutual_information(dist, i, j) - conditional_mi(dist, i, j, k);
}

std::vector<double> all_subset_entropies(const JointDistribution& dist,
                                         std::uint32_t max_vars) {
  const std::size_t n = dist.num_variables();
  if (n > max_vars) {
    raise(Errc::TooManyVariables,
          std::to_string(n) + " variables, limit " + std::to_string(max_vars) +
              " (2^n - 1 subsets)");
  }
  const std::uint32_t total = (1u << n) - 1;
  std::vector<double> h(total);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t mask = 1; mask <= static_cast<std::int64_t>(total); ++mask) {
    std::vector<std::uint32_t> idx;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask >> i & 1) idx.push_back(i);
    }
    h[mask - 1] = canonical_entropy(dist, idx);
  }
  return h;
}

AtomTable i_measure_atoms(const JointDistribution& dist, std::uint32_t max_vars) {
  const std::vector<double> h = all_subset_entropies(dist, max_vars);
  const auto n = static_cast<std::uint32_t>(dist.num_variables());
  const std::uint32_t full = (1u << n) - 1;

  // Inclusion-exclusion: the atom on T equals the multivariate mutual
  // information among the variables of T conditioned on all others,
  //   atoms(T) = -sum_{V subset of T} (-1)^|V| H(X_{V | union complement}),
  // with the H(complement) terms cancelling.
  AtomTable atoms{n, std::vector<double>(full, 0.0)};
  for (std::uint32_t t = 1; t <= full; ++t) {
    const std::uint32_t complement = full & ~t;
    KahanSum sum;
    std::uint32_t v = t;
    while (true) {  // submask enumeration of T, descending, ending at 0
      const std::uint32_t u = v | complement;
      if (u != 0) {
        const double sign = (std::popcount(v) % 2 == 0) ? -1.0 : 1.0;
        sum.add(sign * h[u - 1]);
      }
      if (v == 0) break;
      v = (v - 1) & t;
    }
    atoms.values[t - 1] = sum.value();
  }
  return atoms;
}

double atom_reconstruction_error(const AtomTable& atoms,
                                 const std::vector<double>& subset_entropies) {
  const std::uint32_t full = (1u << atoms.n) - 1;
  double worst = 0.0;
  for (std::uint32_t u = 1; u <= full; ++u) {
    KahanSum sum;
    for (std::uint32_t t = 1; t <= full; ++t) {
      if (t & u) sum.add(atoms.value(t));
    }
    worst = std::max(worst, std::abs(sum.value() - subset_entropies[u - 1]));
  }
  return worst;
}

ThreeVarDecomposition three_var_decomposition(const JointDistribution& dist) {
  if (dist.num_variables() != 3) {
    raise(Errc::WrongArity, "need exactly 3 variables, got " +
                                std::to_string(dist.num_variables()));
  }
  const std::vector<double> h = all_subset_entropies(dist, 3);
  const auto H = [&](std::uint32_t mask) { return h[mask - 1]; };

  const double cmi_12_3 = H(0b101) + H(0b110) - H(0b100) - H(0b111);
  const double cmi_13_2 = H(0b011) + H(0b110) - H(0b010) - H(0b111);
  const double cmi_23_1 = H(0b011) + H(0b101) - H(0b001) - H(0b111);
  const double mi_12 = H(0b001) + H(0b010) - H(0b011);
  const double t = mi_12 - cmi_12_3;

  ThreeVarDecomposition d;
  d.a = std::max(0.0, -t);
  double raw[7];
  raw[0] = H(0b111) - H(0b110);  // b1: H(X1 | X2, X3)
  raw[1] = cmi_12_3 - d.a;       // b2: I(X1; X2 | X3) minus the identity share
  raw[2] = H(0b111) - H(0b101);  // b3: H(X2 | X1, X3)
  raw[3] = H(0b111) - H(0b011);  // b4: H(X3 | X1, X2)
  raw[4] = cmi_13_2 - d.a;       // b5
  raw[5] = cmi_23_1 - d.a;       // b6
  raw[6] = std::max(0.0, t);     // b7: the center when it is nonnegative

  for (int k = 0; k < 7; ++k) {
    if (raw[k] < 0.0) {
      d.clamp_magnitude = std::max(d.clamp_magnitude, -raw[k]);
      raw[k] = 0.0;
    }
    d.b[k] = raw[k];
  }
  return d;
}

Certificate3 psd_certificate_3(const JointDistribution& dist) {
  if (dist.num_variables() != 3) {
    raise(Errc::WrongArity, "need exactly 3 variables, got " +
                                std::to_string(dist.num_variables()));
  }
  const ThreeVarDecomposition d = three_var_decomposition(dist);

  // Subset masks matching b1..b7 (bit i = variable i).
  constexpr std::uint32_t kBlock[7] = {0b001, 0b011, 0b010, 0b100,
                                       0b101, 0b110, 0b111};
  MIMatrix recon{3, std::vector<double>(9, 0.0)};
  for (int i = 0; i < 3; ++i) recon.entries[i * 3 + i] = d.a;
  for (int k = 0; k < 7; ++k) {
    for (int i = 0; i < 3; ++i) {
      if (!(kBlock[k] >> i & 1)) continue;
      for (int j = 0; j < 3; ++j) {
        if (kBlock[k] >> j & 1) recon.entries[i * 3 + j] += d.b[k];
      }
    }
  }

  const MIMatrix m = mi_matrix(dist);
  double worst = 0.0;
  for (int e = 0; e < 9; ++e) {
    worst = std::max(worst, std::abs(recon.entries[e] - m.entries[e]));
  }
  return Certificate3{d, std::move(recon), worst};
}

}  // namespace infomat
