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

#include "infomat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "infomat/errors.hpp"
#include "infomat/kahan.hpp"

namespace infomat {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kOffDiagonalTarget = 1e-13;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  KahanSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = a[i * n + j];
      sum.add(2.0 * v * v);
    }
  }
  return std::sqrt(sum.value());
}

}  // namespace

SymMatrix::SymMatrix(std::size_t n, std::vector<double> row_major_entries)
    : n_(n), entries_(std::move(row_major_entries)) {
  if (entries_.size() != n * n) {
    raise(Errc::ShapeMismatch, "expected " + std::to_string(n * n) +
                                   " entries, got " +
                                   std::to_string(entries_.size()));
  }
  double scale = 1.0;
  for (double v : entries_) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double upper = entries_[i * n_ + j];
      const double lower = entries_[j * n_ + i];
      if (std::abs(upper - lower) > 1e-12 * scale) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "entries (" << i << "," << j << ") = " << upper << " and ("
            << j << "," << i << ") = " << lower << " differ beyond tolerance";
        raise(Errc::NotSymmetric, msg.str());
      }
      const double mean = 0.5 * (upper + lower);
      entries_[i * n_ + j] = mean;
      entries_[j * n_ + i] = mean;
    }
  }
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) {
      raise(Errc::ShapeMismatch, "row of length " + std::to_string(row.size()) +
                                     " in a " + std::to_string(n) +
                                     " by " + std::to_string(n) + " matrix");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return SymMatrix(n, std::move(flat));
}

double SymMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

double SymMatrix::frobenius_norm() const noexcept {
  KahanSum sum;
  for (double v : entries_) sum.add(v * v);
  return std::sqrt(sum.value());
}

double SymMatrix::trace() const noexcept {
  KahanSum sum;
  for (std::size_t i = 0; i < n_; ++i) sum.add(entries_[i * n_ + i]);
  return sum.value();
}

std::vector<double> SymMatrix::multiply(std::span<const double> v) const {
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    KahanSum sum;
    for (std::size_t j = 0; j < n_; ++j) sum.add(entries_[i * n_ + j] * v[j]);
    out[i] = sum.value();
  }
  return out;
}

std::vector<double> EigenResult::eigenvector(std::size_t k) const {
  const std::size_t n = values.size();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = vectors[i * n + k];
  return v;
}

EigenResult eigen_sym(const SymMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) raise(Errc::OutOfRange, "empty matrix");

  std::vector<double> a = input.entries();
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double fro = input.frobenius_norm();
  const double target = kOffDiagonalTarget * fro;

  // Cyclic Jacobi: rotate every upper pair (p, q) in fixed row order per
  // sweep. No pivot search so the rotation sequence, and therefore the
  // result, is deterministic.
  double off = off_diagonal_norm(a, n);
  int sweep = 0;
  while (off > target && n > 1) {
    if (sweep++ >= kMaxSweeps) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "off-diagonal norm " << off << " above target " << target
          << " after " << kMaxSweeps << " sweeps";
      raise(Errc::NoConvergence, msg.str());
    }
    for (std::size_t p = 0; p < n - 1; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0)
                             ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = c * arp - s * arq;
          a[p * n + r] = a[r * n + p];
          a[r * n + q] = s * arp + c * arq;
          a[q * n + r] = a[r * n + q];
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v[r * n + p];
          const double vrq = v[r * n + q];
          v[r * n + p] = c * vrp - s * vrq;
          v[r * n + q] = s * vrp + c * vrq;
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  // Stable ascending sort; degenerate eigenvalues keep rotation order.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x] < a[y * n + y];
  });

  EigenResult result;
  result.values.resize(n);
  result.vectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a[perm[k] * n + perm[k]];
    for (std::size_t r = 0; r < n; ++r) {
      result.vectors[r * n + k] = v[r * n + perm[k]];
    }
  }

  double residual = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    KahanSum norm2;
    for (std::size_t i = 0; i < n; ++i) {
      KahanSum row;
      for (std::size_t j = 0; j < n; ++j) {
        row.add(input(i, j) * result.vectors[j * n + k]);
      }
      const double r = row.value() - result.values[k] * result.vectors[i * n + k];
      norm2.add(r * r);
    }
    residual = std::max(residual, std::sqrt(norm2.value()));
  }
  result.residual = residual;
  return result;
}

std::pair<double, std::vector<double>> min_eigenvalue(const SymMatrix& a) {
  EigenResult r = eigen_sym(a);
  return {r.values.front(), r.eigenvector(0)};
}

double global_tolerance(double fallback) {
  static const double value = [] {
    if (const char* env = std::getenv("INFOMAT_TOL")) {
      char* end = nullptr;
      const double parsed = std::strtod(env, &end);
      if (end != env && parsed > 0.0) return parsed;
    }
    return -1.0;
  }();
  return value > 0.0 ? value : fallback;
}

double default_psd_tolerance(const SymMatrix& a) {
  return global_tolerance(1e-9) * std::max(1.0, a.max_abs());
}

PsdVerdict is_psd(const SymMatrix& a, double tol) {
  if (tol < 0.0) raise(Errc::OutOfRange, "tolerance must be >= 0");
  EigenResult r = eigen_sym(a);
  PsdVerdict verdict;
  verdict.psd = r.values.front() >= -tol;
  verdict.witness_value = r.values.front();
  verdict.witness_vector = r.eigenvector(0);
  KahanSum quad;
  const std::vector<double> av = a.multiply(verdict.witness_vector);
  for (std::size_t i = 0; i < a.size(); ++i) {
    quad.add(av[i] * verdict.witness_vector[i]);
  }
  verdict.quadratic_form = quad.value();
  return verdict;
}

PsdVerdict is_psd(const SymMatrix& a) { return is_psd(a, default_psd_tolerance(a)); }

}  // namespace infomat
