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

// Acceptance suite: one line per criterion, every threshold pinned in
// code. Returns the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "infomat/generators.hpp"
#include "infomat/info.hpp"
#include "infomat/json_io.hpp"
#include "infomat/linalg.hpp"
#include "infomat/rng.hpp"
#include "infomat/search.hpp"

using namespace infomat;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

struct Criterion {
  explicit Criterion(int number, std::string label)
      : number_(number), label_(std::move(label)), start_(clock_type::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      problems_.push_back(what);
    }
  }

  // Budget <= 0 means the criterion carries no runtime bound.
  void finish(double runtime_budget_seconds = 0.0) {
    const double elapsed =
        std::chrono::duration<double>(clock_type::now() - start_).count();
    if (runtime_budget_seconds > 0.0 && elapsed >= runtime_budget_seconds) {
      std::ostringstream msg;
      msg << "runtime " << elapsed << "s exceeds " << runtime_budget_seconds
          << "s";
      problems_.push_back(msg.str());
    }
    const bool pass = problems_.empty();
    std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL",
                number_, label_.c_str(), elapsed);
    for (const auto& p : problems_) std::printf("       - %s\n", p.c_str());
    if (!pass) ++failures;
  }

 private:
  int number_;
  std::string label_;
  clock_type::time_point start_;
  std::vector<std::string> problems_;
};

std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

double angular_distance(const std::vector<double>& a,
                        const std::vector<double>& b) {
  double plus = 0.0;
  double minus = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    plus += (a[i] - b[i]) * (a[i] - b[i]);
    minus += (a[i] + b[i]) * (a[i] + b[i]);
  }
  const double chord = std::sqrt(std::min(plus, minus));
  return 2.0 * std::asin(std::min(1.0, chord / 2.0));
}

JointDistribution random_dense(Rng& rng, const std::vector<std::uint32_t>& shape) {
  std::size_t count = 1;
  for (auto s : shape) count *= s;
  std::vector<double> w(count);
  double total = 0.0;
  for (auto& x : w) {
    x = rng.exponential();
    total += x;
  }
  std::vector<JointDistribution::Entry> entries;
  entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    JointDistribution::Outcome o(shape.size());
    std::size_t rest = i;
    for (std::size_t v = shape.size(); v-- > 0;) {
      o[v] = static_cast<std::uint32_t>(rest % shape[v]);
      rest /= shape[v];
    }
    if (w[i] > 0.0) entries.push_back({std::move(o), w[i] / total});
  }
  return JointDistribution(shape, entries);
}

void criterion_1() {
  Criterion c(1, "xor4 reproduction: matrix, eigenvalue, eigenvector");
  const MIMatrix m = mi_matrix(example_xor4());
  const std::vector<std::vector<double>> want{
      {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 2}};
  double matrix_err = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      matrix_err = std::max(matrix_err, std::abs(m.at(i, j) - want[i][j]));
    }
  }
  c.require(matrix_err <= 1e-12, "matrix error " + fmt(matrix_err) + " > 1e-12");

  const auto [value, vector] = min_eigenvalue(m.sym());
  const double expected = (3.0 - std::sqrt(13.0)) / 2.0;
  c.require(std::abs(value - expected) <= 1e-9,
            "min eigenvalue " + fmt(value) + " vs " + fmt(expected));

  std::vector<double> reference{1.0, 1.0, 1.0, (1.0 - std::sqrt(13.0)) / 2.0};
  double norm = 0.0;
  for (double x : reference) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : reference) x /= norm;
  const double angle = angular_distance(vector, reference);
  c.require(angle <= 1e-6, "eigenvector angle " + fmt(angle) + " > 1e-6");
  c.finish(1.0);
}

void criterion_2() {
  Criterion c(2, "parity family: closed-form matrix, eigenpair, growth");
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const MIMatrix computed = mi_matrix(parity_family(n));
    const SymMatrix closed = parity_mi_matrix_closed_form(n);
    double err = 0.0;
    for (std::size_t i = 0; i < computed.n; ++i) {
      for (std::size_t j = 0; j < computed.n; ++j) {
        err = std::max(err, std::abs(computed.at(i, j) - closed(i, j)));
      }
    }
    c.require(err <= 1e-10, "n=" + std::to_string(n) + " matrix error " +
                                fmt(err) + " > 1e-10");
  }

  double previous_ratio = 0.0;
  for (std::uint32_t n = 2; n <= 14; ++n) {
    const ClosedFormEigenpair pair = parity_min_eigen_closed_form(n);
    const double m = std::ldexp(1.0, static_cast<int>(n));
    const double nn = static_cast<double>(n);
    const double formula =
        (nn + 1.0 - std::sqrt((nn - 1.0) * (nn - 1.0) + 4.0 * (m - 1.0))) / 2.0;
    c.require(std::abs(pair.value - formula) <= 1e-9,
              "n=" + std::to_string(n) + " eigenvalue " + fmt(pair.value) +
                  " vs formula " + fmt(formula));

    const auto av = parity_closed_form_multiply(n, pair.vector);
    double err2 = 0.0;
    for (std::size_t i = 0; i < av.size(); ++i) {
      const double r = av[i] - pair.value * pair.vector[i];
      err2 += r * r;
    }
    const double bound = 1e-9 * parity_closed_form_frobenius(n);
    c.require(std::sqrt(err2) <= bound,
              "n=" + std::to_string(n) + " residual " + fmt(std::sqrt(err2)) +
                  " > " + fmt(bound));

    if (n >= 6) {
      const double ratio = std::abs(pair.value) / std::exp2(nn / 2.0);
      if (n > 6) {
        c.require(ratio > previous_ratio,
                  "growth ratio not increasing at n=" + std::to_string(n));
      }
      previous_ratio = ratio;
    }
  }
  c.finish(30.0);
}

void criterion_3() {
  Criterion c(3, "sum example reproduction: matrix and eigenvalue");
  const MIMatrix m = mi_matrix(sum_example());
  const std::vector<std::vector<double>> want{{1, 0, 0.5, 1},
                                              {0, 1, 0.5, 1},
                                              {0.5, 0.5, 1.5, 1.5},
                                              {1, 1, 1.5, 2}};
  double err = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      err = std::max(err, std::abs(m.at(i, j) - want[i][j]));
    }
  }
  c.require(err <= 1e-12, "matrix error " + fmt(err) + " > 1e-12");

  const auto [value, vector] = min_eigenvalue(m.sym());
  c.require(std::abs(value - (-0.11062)) <= 5e-6,
            "min eigenvalue " + fmt(value) + " not within 5e-6 of -0.11062");
  c.finish(1.0);
}

void criterion_4() {
  Criterion c(4, "randomized three-variable verification, 10000 samples");
  const VerifyReport report = verify_three_var_conjecture(
      10000, 4, 1, static_cast<std::uint32_t>(hardware_jobs()));
  c.require(report.violations == 0,
            std::to_string(report.violations) + " violations");
  c.require(report.worst_lambda_min >= -1e-9,
            "worst eigenvalue " + fmt(report.worst_lambda_min) + " < -1e-9");
  c.require(report.max_certificate_error <= 1e-9,
            "certificate error " + fmt(report.max_certificate_error) + " > 1e-9");
  c.require(report.worst_coefficient >= -1e-12,
            "coefficient " + fmt(report.worst_coefficient) + " < -1e-12");
  c.require(report.certificates_checked == 10000, "not every sample certified");
  c.finish(60.0);
}

void criterion_5() {
  Criterion c(5, "atom oracle equivalence on 1000 random distributions");
  double worst_reconstruction = 0.0;
  double worst_triple_gap = 0.0;
  std::uint64_t three_var_samples = 0;
  for (std::uint64_t sample = 0; sample < 1000; ++sample) {
    Rng rng = Rng::substream(5, sample);
    const auto n = static_cast<std::uint32_t>(rng.uniform_int(2, 5));
    std::vector<std::uint32_t> shape(n);
    for (auto& s : shape) {
      s = static_cast<std::uint32_t>(rng.uniform_int(2, 3));
    }
    const JointDistribution d = random_dense(rng, shape);
    const AtomTable atoms = i_measure_atoms(d);
    const auto h = all_subset_entropies(d);
    worst_reconstruction =
        std::max(worst_reconstruction, atom_reconstruction_error(atoms, h));
    if (n == 3) {
      ++three_var_samples;
      const double gap =
          std::abs(triple_information(d, 0, 1, 2) - atoms.value(0b111));
      worst_triple_gap = std::max(worst_triple_gap, gap);
    }
  }
  c.require(worst_reconstruction <= 1e-9,
            "reconstruction error " + fmt(worst_reconstruction) + " > 1e-9");
  c.require(worst_triple_gap <= 1e-9,
            "triple vs center atom gap " + fmt(worst_triple_gap) + " > 1e-9");
  c.require(three_var_samples > 100, "too few 3-variable samples");
  c.finish();
}

void criterion_6() {
  Criterion c(6, "two-variable PSD property on 10000 random distributions");
  double worst_lambda = 0.0;
  double worst_gram = 0.0;
  for (std::uint64_t sample = 0; sample < 10000; ++sample) {
    Rng rng = Rng::substream(6, sample);
    std::vector<std::uint32_t> shape{
        static_cast<std::uint32_t>(rng.uniform_int(2, 4)),
        static_cast<std::uint32_t>(rng.uniform_int(2, 4))};
    const JointDistribution d = random_dense(rng, shape);
    const MIMatrix m = mi_matrix(d);
    const auto [lambda, vector] = min_eigenvalue(m.sym());
    worst_lambda = std::min(worst_lambda, lambda);
    worst_gram = std::min(worst_gram, m.at(0, 0) * m.at(1, 1) -
                                          m.at(0, 1) * m.at(0, 1));
  }
  c.require(worst_lambda >= -1e-9,
            "min eigenvalue " + fmt(worst_lambda) + " < -1e-9");
  c.require(worst_gram >= -1e-9,
            "H(X1)H(X2) - I^2 = " + fmt(worst_gram) + " < -1e-9");
  c.finish();
}

void criterion_7() {
  Criterion c(7, "independent embedding keeps the xor4 eigenvalue");
  const double expected = (3.0 - std::sqrt(13.0)) / 2.0;
  for (std::uint32_t m = 1; m <= 4; ++m) {
    const JointDistribution d = embed_with_independent(example_xor4(), m);
    const auto [value, vector] = min_eigenvalue(mi_matrix(d).sym());
    c.require(std::abs(value - expected) <= 1e-9,
              "m=" + std::to_string(m) + ": eigenvalue " + fmt(value));
  }
  c.finish();
}

void criterion_8() {
  Criterion c(8, "search sanity: recovery, PSD floor, reproducibility");

  SearchConfig config;
  config.shape = {2, 2, 2, 4};
  config.seed = 7;
  config.iterations = 10000;
  config.restarts = 1;
  config.step_sigma = 0.15;
  config.initial_temperature = 0.002;
  config.temperature_decay = 0.999;
  config.init_params = pmf_logits(example_xor4());
  config.init_noise = 0.05;
  const SearchResult near_xor = search_min_eigen(config);
  c.require(near_xor.best_lambda_min <= -0.30,
            "best " + fmt(near_xor.best_lambda_min) + " > -0.30");

  SearchConfig cube;
  cube.shape = {2, 2, 2};
  cube.iterations = 2000;
  cube.restarts = 2;
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    cube.seed = seed;
    const SearchResult r = search_min_eigen(cube);
    c.require(r.best_lambda_min >= -1e-9,
              "3-variable search reported " + fmt(r.best_lambda_min) +
                  " at seed " + std::to_string(seed));
  }

  SearchConfig repro;
  repro.shape = {2, 2, 2, 4};
  repro.seed = 20260808;
  repro.iterations = 1500;
  repro.restarts = 2;
  const std::string log_a = run_log_json(search_min_eigen(repro, 1)).dump(2);
  const std::string log_b = run_log_json(search_min_eigen(repro, 2)).dump(2);
  c.require(log_a == log_b, "run logs differ between runs/job counts");
  c.finish();
}

// Soft exploration property, logged but never failed: from random
// starts on shape (2,2,2,4), at least one of ten seeded restarts should
// dip below -0.05 well within its 50k-iteration allowance.
void exploration_note() {
  SearchConfig config;
  config.shape = {2, 2, 2, 4};
  config.seed = 1;
  config.iterations = 20000;
  config.restarts = 10;
  config.step_sigma = 0.35;
  config.initial_temperature = 0.02;
  config.temperature_decay = 0.9995;
  const SearchResult r =
      search_min_eigen(config, static_cast<std::uint32_t>(hardware_jobs()));
  std::printf(
      "[note] exploration (soft): random-start best over 10 restarts = %s "
      "(restart %u) %s\n",
      fmt(r.best_lambda_min).c_str(), r.best_restart,
      r.best_lambda_min < -0.05 ? "< -0.05 as expected" : "did NOT reach -0.05");
}

}  // namespace

int main() {
  std::printf("acceptance: %d worker thread(s) available\n", hardware_jobs());
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  exploration_note();
  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures;
}
