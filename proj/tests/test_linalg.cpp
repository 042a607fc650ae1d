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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "infomat/errors.hpp"
#include "infomat/generators.hpp"
#include "infomat/info.hpp"
#include "infomat/linalg.hpp"
#include "infomat/rng.hpp"
#include "oracles.hpp"

using namespace infomat;

namespace {

SymMatrix xor4_matrix() {
  return SymMatrix::from_rows(
      {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 2}});
}

SymMatrix random_symmetric(Rng& rng, std::size_t n, double scale) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m.set(i, j, scale * (2.0 * rng.next_double() - 1.0));
    }
  }
  return m;
}

// angle between v and u up to sign, via the smaller chord
double angular_distance(const std::vector<double>& v,
                        const std::vector<double>& u) {
  double plus = 0.0;
  double minus = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    plus += (v[i] - u[i]) * (v[i] - u[i]);
    minus += (v[i] + u[i]) * (v[i] + u[i]);
  }
  const double chord = std::sqrt(std::min(plus, minus));
  return 2.0 * std::asin(std::min(1.0, chord / 2.0));
}

std::vector<double> normalized(std::vector<double> v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

}  // namespace

TEST_SUITE("symmetric eigensolver") {
  TEST_CASE("identity") {
    SymMatrix m(3);
    for (std::size_t i = 0; i < 3; ++i) m.set(i, i, 1.0);
    const EigenResult r = eigen_sym(m);
    for (double v : r.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.residual <= 1e-10);
  }

  TEST_CASE("one by one") {
    SymMatrix m(1);
    m.set(0, 0, -2.5);
    const EigenResult r = eigen_sym(m);
    CHECK(r.values[0] == -2.5);
    CHECK(r.vectors[0] == 1.0);
  }

  TEST_CASE("diagonal matrix") {
    SymMatrix m(2);
    m.set(0, 0, 5.0);
    m.set(1, 1, 2.0);
    const auto [value, vector] = min_eigenvalue(m);
    CHECK(value == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(std::abs(vector[1]) - 1.0) <= 1e-12);
    CHECK(std::abs(vector[0]) <= 1e-12);
  }

  TEST_CASE("xor4 matrix has the closed-form minimum eigenpair") {
    const double expected = (3.0 - std::sqrt(13.0)) / 2.0;
    const auto [value, vector] = min_eigenvalue(xor4_matrix());
    CHECK(value == doctest::Approx(expected).epsilon(1e-9));

    const std::vector<double> reference = normalized(
        {1.0, 1.0, 1.0, (1.0 - std::sqrt(13.0)) / 2.0});
    CHECK(angular_distance(vector, reference) <= 1e-6);
  }

  TEST_CASE("sum example matrix eigenvalue") {
    const SymMatrix m = mi_matrix(sum_example()).sym();
    const auto [value, vector] = min_eigenvalue(m);
    CHECK(std::abs(value - (-0.11062)) <= 5e-6);
  }

  TEST_CASE("bordered identity at n = 3 gives 2 - 2 sqrt(2)") {
    const auto [value, vector] = min_eigenvalue(parity_mi_matrix_closed_form(3));
    CHECK(value == doctest::Approx(2.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-9));
  }

  TEST_CASE("reconstruction, orthonormality and trace on random matrices") {
    Rng rng(17);
    for (int round = 0; round < 20; ++round) {
      const std::size_t n = 2 + rng.uniform_int(0, 6);
      const SymMatrix m = random_symmetric(rng, n, 3.0);
      const EigenResult r = eigen_sym(m);
      const double scale = std::max(1.0, m.max_abs());

      CHECK(r.residual <= 1e-10 * scale);

      // V^T V = I
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          double dot = 0.0;
          for (std::size_t i = 0; i < n; ++i) {
            dot += r.vectors[i * n + a] * r.vectors[i * n + b];
          }
          CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= 1e-10);
        }
      }

      // V diag(values) V^T = A
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          double acc = 0.0;
          for (std::size_t k = 0; k < n; ++k) {
            acc += r.vectors[i * n + k] * r.values[k] * r.vectors[j * n + k];
          }
          CHECK(std::abs(acc - m(i, j)) <= 1e-9 * scale);
        }
      }

      double value_sum = 0.0;
      for (double v : r.values) value_sum += v;
      CHECK(std::abs(value_sum - m.trace()) <= 1e-9 * std::max(1.0, m.trace()));

      for (std::size_t k = 1; k < n; ++k) CHECK(r.values[k - 1] <= r.values[k]);
    }
  }

  TEST_CASE("deterministic for identical input") {
    Rng rng(29);
    const SymMatrix m = random_symmetric(rng, 6, 2.0);
    const EigenResult a = eigen_sym(m);
    const EigenResult b = eigen_sym(m);
    CHECK(a.values == b.values);
    CHECK(a.vectors == b.vectors);
  }
}

TEST_SUITE("psd testing") {
  TEST_CASE("identity is PSD") {
    SymMatrix m(3);
    for (std::size_t i = 0; i < 3; ++i) m.set(i, i, 1.0);
    CHECK(is_psd(m).psd);
  }

  TEST_CASE("xor4 matrix is not PSD and the witness checks out") {
    const PsdVerdict v = is_psd(xor4_matrix());
    CHECK(!v.psd);
    CHECK(std::abs(v.witness_value - (3.0 - std::sqrt(13.0)) / 2.0) <= 1e-9);
    // quadratic-form double check straight from the matrix
    const SymMatrix m = xor4_matrix();
    double quad = 0.0;
    const auto av = m.multiply(v.witness_vector);
    for (std::size_t i = 0; i < 4; ++i) quad += av[i] * v.witness_vector[i];
    CHECK(quad < -default_psd_tolerance(m) / 2.0);
    CHECK(std::abs(quad - v.quadratic_form) <= 1e-12);
  }

  TEST_CASE("3-variable MI matrices are PSD") {
    Rng rng(37);
    for (int round = 0; round < 30; ++round) {
      const JointDistribution d = oracles::random_distribution(rng, {2, 4, 3});
      CHECK(is_psd(mi_matrix(d).sym()).psd);
    }
  }

  TEST_CASE("verdicts agree with the principal-minor oracle") {
    Rng rng(41);
    int decided = 0;
    for (int round = 0; round < 200; ++round) {
      const std::size_t n = 1 + rng.uniform_int(0, 2);
      const SymMatrix m = random_symmetric(rng, n, 1.0);
      const PsdVerdict verdict = is_psd(m, 1e-9);

      std::vector<std::vector<double>> rows(n, std::vector<double>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
      }
      const double minor = oracles::min_principal_minor(rows);

      if (std::abs(verdict.witness_value) <= 1e-6) continue;  // boundary fuzz
      ++decided;
      if (verdict.psd) {
        CHECK(minor >= -1e-12);
      } else {
        CHECK(minor <= 1e-12);
      }
    }
    CHECK(decided > 100);
  }

  TEST_CASE("negative tolerance is rejected") {
    CHECK_THROWS_AS(is_psd(xor4_matrix(), -1.0), Error);
  }
}

TEST_SUITE("sym matrix") {
  TEST_CASE("symmetrization and asymmetry rejection") {
    const SymMatrix m(2, {1.0, 2.0 + 1e-13, 2.0, 3.0});
    CHECK(m(0, 1) == m(1, 0));
    CHECK_THROWS_AS(SymMatrix(2, {1.0, 2.1, 2.0, 3.0}), Error);
    CHECK_THROWS_AS(SymMatrix(2, {1.0, 2.0, 3.0}), Error);
  }

  TEST_CASE("norms and trace") {
    const SymMatrix m = SymMatrix::from_rows({{3, 0}, {0, 4}});
    CHECK(m.frobenius_norm() == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(m.trace() == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(m.max_abs() == 4.0);
  }
}
