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

#include <cstddef>
#include <span>
#include <vector>

namespace infomat {

/// Dense symmetric matrix. Construction symmetrizes as (A + A^T) / 2
/// and rejects inputs whose asymmetry exceeds 1e-12 * max(1, maxabs).
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}
  SymMatrix(std::size_t n, std::vector<double> row_major_entries);

  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * n_ + j];
  }

  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v) noexcept {
    entries_[i * n_ + j] = v;
    entries_[j * n_ + i] = v;
  }

  const std::vector<double>& entries() const noexcept { return entries_; }

  double max_abs() const noexcept;
  double frobenius_norm() const noexcept;
  double trace() const noexcept;

  std::vector<double> multiply(std::span<const double> v) const;

 private:
  std::size_t n_;
  std::vector<double> entries_;  // row-major
};

/// Full symmetric eigendecomposition result. Eigenvalues ascend;
/// eigenvectors are the matching orthonormal columns.
struct EigenResult {
  std::vector<double> values;
  std::vector<double> vectors;  // row-major n*n; column k pairs with values[k]
  double residual = 0.0;        // max_k ||A v_k - values[k] v_k||_2

  std::vector<double> eigenvector(std::size_t k) const;
};

/// Cyclic Jacobi eigendecomposition. Sweeps until the off-diagonal
/// Frobenius norm falls below 1e-13 * ||A||_F or 64 sweeps elapse;
/// throws Errc::NoConvergence past that (not expected for n <= 4096).
/// Deterministic: fixed rotation order, no pivot search.
EigenResult eigen_sym(const SymMatrix& a);

/// Smallest eigenvalue and a matching unit eigenvector.
std::pair<double, std::vector<double>> min_eigenvalue(const SymMatrix& a);

struct PsdVerdict {
  bool psd = true;
  double witness_value = 0.0;           // smallest eigenvalue when NotPSD
  std::vector<double> witness_vector;   // its unit eigenvector
  double quadratic_form = 0.0;          // v^T A v, independently checkable
};

/// PSD iff the minimum eigenvalue is >= -tol. A NotPSD verdict carries
/// the violating eigenpair and its quadratic form as a witness.
PsdVerdict is_psd(const SymMatrix& a, double tol);

/// Uses default_psd_tolerance(a).
PsdVerdict is_psd(const SymMatrix& a);

/// 1e-9 * max(1, maxabs(a)); the 1e-9 base can be overridden globally
/// through the INFOMAT_TOL environment variable.
double default_psd_tolerance(const SymMatrix& a);

/// The INFOMAT_TOL override if set and parseable, else fallback.
double global_tolerance(double fallback = 1e-9);

}  // namespace infomat
