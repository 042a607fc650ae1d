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
#include <span>
#include <vector>

#include "infomat/joint_distribution.hpp"
#include "infomat/linalg.hpp"

namespace infomat {

/// (X1, X2, X1 xor X2, (X1,X2)) over two fair bits: shape (2,2,2,4),
/// four equiprobable outcomes. Its MI matrix has minimum eigenvalue
/// (3 - sqrt(13)) / 2, so it is not PSD.
JointDistribution example_xor4();

/// The monotone variant (X1, X2, X1 + X2, (X1,X2)): shape (2,2,3,4),
/// four equiprobable outcomes; minimum eigenvalue approx -0.11062.
JointDistribution sum_example();

/// n independent fair bits x, one parity variable Y_S = xor of the bits
/// in S for every nonempty S (ascending bitmask order), then the tuple
/// variable (x1..xn) encoded as sum x_i 2^(n-i). 2^n variables over a
/// support of size 2^n. Requires 2 <= n <= 12.
JointDistribution parity_family(std::uint32_t n);

/// The closed-form MI matrix of parity_family(n): an identity of size
/// 2^n - 1 bordered by a final row/column of ones with corner n.
/// Requires 2 <= n <= 30; materialization is memory-bound well before
/// that, see parity_closed_form_multiply for larger n.
SymMatrix parity_mi_matrix_closed_form(std::uint32_t n);

/// Multiplies the closed-form matrix by v without materializing it.
std::vector<double> parity_closed_form_multiply(std::uint32_t n,
                                                std::span<const double> v);

/// Squared Frobenius norm of the closed-form matrix: 3 (2^n - 1) + n^2.
double parity_closed_form_frobenius(std::uint32_t n);

struct ClosedFormEigenpair {
  double value = 0.0;
  std::vector<double> vector;  // (1, ..., 1, x_n), not normalized
};

/// The closed-form minimum eigenpair of the bordered-identity matrix:
/// value (n + 1 - sqrt((n-1)^2 + 4(2^n - 1))) / 2 with eigenvector
/// (1, ..., 1, x_n), x_n = (n - 1 - sqrt((n-1)^2 + 4(2^n - 1))) / 2.
/// |value| grows as Theta(2^(n/2)). Requires 2 <= n <= 30.
ClosedFormEigenpair parity_min_eigen_closed_form(std::uint32_t n);

/// n independent fair bits.
JointDistribution independent_uniform_bits(std::uint32_t n);

/// Product of dist with extra_bits independent fair bits. The MI matrix
/// gains an identity block, so non-PSD instances stay non-PSD.
JointDistribution embed_with_independent(const JointDistribution& dist,
                                         std::uint32_t extra_bits);

}  // namespace infomat
