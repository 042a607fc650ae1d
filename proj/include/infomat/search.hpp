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
#include <utility>
#include <vector>

#include "infomat/joint_distribution.hpp"

namespace infomat {

/// Configuration of the stochastic minimum-eigenvalue search. Purely
/// semantic: two runs with equal configs produce bit-identical results
/// regardless of how many worker threads execute the restarts.
struct SearchConfig {
  std::vector<std::uint32_t> shape;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 1000;
  std::uint32_t restarts = 1;
  double step_sigma = 0.25;           // proposal scale in logit space
  double initial_temperature = 0.05;  // Metropolis temperature at iteration 1
  double temperature_decay = 0.999;   // geometric cooling per iteration

  /// Optional dense logit vector to start from (length = product of
  /// shape). Empty means a standard-normal random start per restart.
  std::vector<double> init_params;
  /// Stddev of the per-restart Gaussian perturbation added to
  /// init_params; ignored for random starts.
  double init_noise = 0.0;
};

struct SearchResult {
  double best_lambda_min = 0.0;
  JointDistribution best_distribution;
  /// (iteration, best-so-far lambda_min) at iteration 0, every power of
  /// two, and the final iteration; monotone nonincreasing. Taken from
  /// the winning restart.
  std::vector<std::pair<std::uint64_t, double>> trace;
  SearchConfig config;
  std::uint32_t best_restart = 0;
  /// Eigensolver NoConvergence events, each handled as a rejected
  /// proposal.
  std::uint64_t no_convergence_rejects = 0;
};

/// Softmax-normalizes params into a dense PMF over the full outcome
/// space of shape (entries below 1e-15 dropped), builds the
/// distribution, and returns the minimum eigenvalue of its MI matrix.
std::pair<double, JointDistribution> objective(
    std::span<const double> params, const std::vector<std::uint32_t>& shape);

/// Dense logit vector log(p) for a distribution (log(1e-18) floor on
/// outcomes outside the support); objective() of this vector recovers
/// the distribution.
std::vector<double> pmf_logits(const JointDistribution& dist);

/// Simulated annealing over logits: Gaussian proposals, Metropolis
/// acceptance on lambda_min, geometric cooling, best-of-restarts with
/// ties broken by lowest restart index. Restart r draws only from RNG
/// substream (seed, r), so jobs > 1 changes wall time, never results.
SearchResult search_min_eigen(const SearchConfig& config, std::uint32_t jobs = 1);

struct VerifyReport {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  std::uint64_t certificates_checked = 0;
  double worst_lambda_min = 0.0;
  double max_certificate_error = 0.0;
  double worst_coefficient = 0.0;  // most negative pre-clamp coefficient
};

/// Samples random 3-variable distributions (alphabet sizes uniform in
/// 2..max_alphabet, PMF Dirichlet(1,..,1) over the full outcome space,
/// sample s drawn from RNG substream (seed, s)) and checks that the MI
/// matrix has lambda_min >= -1e-9 and that the three-variable
/// certificate reconstructs it within 1e-9 with coefficients >= -1e-12.
/// Violations are data, not errors.
VerifyReport verify_three_var_conjecture(std::uint64_t samples,
                                         std::uint32_t max_alphabet,
                                         std::uint64_t seed,
                                         std::uint32_t jobs = 1);

/// The per-distribution check behind verify_three_var_conjecture,
/// exposed so known instances can be pushed through the same path.
VerifyReport verify_distributions(std::span<const JointDistribution> dists);

}  // namespace infomat
