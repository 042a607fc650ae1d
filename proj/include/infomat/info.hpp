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

#include <array>
#include <cstdint>
#include <vector>

#include "infomat/joint_distribution.hpp"
#include "infomat/linalg.hpp"
#include "infomat/variable_set.hpp"

namespace infomat {

/// Symmetric matrix of pairwise mutual informations in bits; the
/// diagonal holds the single-variable entropies.
struct MIMatrix {
  std::size_t n = 0;
  std::vector<double> entries;  // row-major n*n

  double at(std::size_t i, std::size_t j) const noexcept {
    return entries[i * n + j];
  }

  SymMatrix sym() const { return SymMatrix(n, entries); }
};

/// Signed information-diagram measure over the 2^n - 1 atoms. The atom
/// for mask T is the region inside every variable of T and outside all
/// others; masks use bit i for variable i.
struct AtomTable {
  std::uint32_t n = 0;
  std::vector<double> values;  // index mask - 1, mask in [1, 2^n - 1]

  double value(std::uint32_t mask) const noexcept { return values[mask - 1]; }
};

/// Nonnegative coefficients of the three-variable split: a scales the
/// identity, b[k] scales the all-ones block on the variable subset
/// (b1 <-> {X1}, b2 <-> {X1,X2}, b3 <-> {X2}, b4 <-> {X3}, b5 <-> {X1,X3},
/// b6 <-> {X2,X3}, b7 <-> {X1,X2,X3}). At most one of a and b7 is
/// nonzero. Coefficients that come out negative within tolerance are
/// clamped to zero; clamp_magnitude records the largest clamp applied.
struct ThreeVarDecomposition {
  double a = 0.0;
  std::array<double, 7> b{};  // b[0] = b1, ..., b[6] = b7
  double clamp_magnitude = 0.0;
};

struct Certificate3 {
  ThreeVarDecomposition decomposition;
  MIMatrix reconstructed;
  double max_error = 0.0;  // entrywise vs. the MI matrix
};

/// Entropy of the marginal on s, in bits: -sum p log2 p with
/// compensated summation in canonical order. The canonical order sums
/// collision groups and entropy terms by ascending probability value,
/// which makes the result exactly invariant under permutations of
/// variable labels and of alphabet symbols.
double subset_entropy(const JointDistribution& dist, const VariableSet& s);

/// H(Xi) + H(Xj) - H(Xi, Xj); for i == j, exactly H(Xi).
double mutual_information(const JointDistribution& dist, std::uint32_t i,
                          std::uint32_t j);

/// Full MI matrix. Each unordered pair is computed once and mirrored;
/// pairs run in parallel, each with the canonical sequential summation,
/// so the result is bit-identical to mi_matrix_reference.
MIMatrix mi_matrix(const JointDistribution& dist);

/// Straightforward serial implementation kept as the reference for the
/// parallel kernel; byte-identical output.
MIMatrix mi_matrix_reference(const JointDistribution& dist);

/// I(Xi; Xj | Xk) = H(Xi,Xk) + H(Xj,Xk) - H(Xk) - H(Xi,Xj,Xk).
double conditional_mi(const JointDistribution& dist, std::uint32_t i,
                      std::uint32_t j, std::uint32_t k);

/// I(Xi; Xj; Xk) = I(Xi; Xj) - I(Xi; Xj | Xk). May be negative.
double triple_information(const JointDistribution& dist, std::uint32_t i,
                          std::uint32_t j, std::uint32_t k);

/// Entropies of all nonempty variable subsets, indexed by mask - 1.
/// Requires n <= max_vars (the 2^n - 1 growth is the real limit).
std::vector<double> all_subset_entropies(const JointDistribution& dist,
                                         std::uint32_t max_vars = 10);

/// The unique signed measure whose unions reproduce the subset
/// entropies, computed by inclusion-exclusion over subset entropies.
AtomTable i_measure_atoms(const JointDistribution& dist,
                          std::uint32_t max_vars = 10);

/// Largest deviation |sum_{T : T cap U != 0} atoms(T) - H(X_U)| over all
/// nonempty U; the defining property of the atom table.
double atom_reconstruction_error(const AtomTable& atoms,
                                 const std::vector<double>& subset_entropies);

/// The nonnegative split of a three-variable information diagram:
/// b7 = 0 when the triple information is <= 0 and a = 0 when it is >= 0.
ThreeVarDecomposition three_var_decomposition(const JointDistribution& dist);

/// Rebuilds a*I + sum_S b_S E_S (E_S the 0/1 block matrix on S x S) and
/// reports the entrywise error against mi_matrix(dist). Error within
/// 1e-9 constitutes a constructive PSD proof for the instance.
Certificate3 psd_certificate_3(const JointDistribution& dist);

}  // namespace infomat
