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

#include "infomat/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>

#include "infomat/errors.hpp"
#include "infomat/info.hpp"
#include "infomat/kahan.hpp"
#include "infomat/linalg.hpp"
#include "infomat/rng.hpp"

namespace infomat {

namespace {

constexpr double kDropThreshold = 1e-15;
constexpr double kLogitFloor = -41.446531673892822;  // log(1e-18)
constexpr std::size_t kMaxDenseOutcomes = std::size_t{1} << 22;

std::size_t dense_outcome_count(const std::vector<std::uint32_t>& shape) {
  if (shape.empty()) raise(Errc::ShapeMismatch, "empty shape");
  std::size_t count = 1;
  for (std::uint32_t s : shape) {
    if (s == 0) raise(Errc::ShapeMismatch, "alphabet size zero");
    if (count > kMaxDenseOutcomes / s) {
      raise(Errc::ShapeMismatch,
            "dense outcome space exceeds " + std::to_string(kMaxDenseOutcomes));
    }
    count *= s;
  }
  return count;
}

// Row-major decode: the last variable varies fastest, so ascending index
// order is ascending lexicographic outcome order.
JointDistribution::Outcome decode_outcome(std::size_t index,
                                          const std::vector<std::uint32_t>& shape) {
  JointDistribution::Outcome o(shape.size());
  for (std::size_t i = shape.size(); i-- > 0;) {
    o[i] = static_cast<JointDistribution::Value>(index % shape[i]);
    index /= shape[i];
  }
  return o;
}

std::size_t encode_outcome(std::span<const JointDistribution::Value> o,
                           const std::vector<std::uint32_t>& shape) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    index = index * shape[i] + o[i];
  }
  return index;
}

struct RestartOutcome {
  double best_lambda = 0.0;
  std::optional<JointDistribution> best_dist;
  std::vector<std::pair<std::uint64_t, double>> trace;
  std::uint64_t no_convergence = 0;
};

// One verification sample: alphabet sizes first, then a dense PMF,
// Dirichlet(1,...,1) via normalized exponential (unit-gamma) variates.
// Sample s depends only on (seed, s), never on execution order.
JointDistribution sample_three_var(std::uint64_t seed, std::uint64_t s,
                                   std::uint32_t max_alphabet) {
  Rng rng = Rng::substream(seed, s);
  std::vector<std::uint32_t> shape(3);
  for (auto& a : shape) {
    a = static_cast<std::uint32_t>(rng.uniform_int(2, max_alphabet));
  }
  const std::size_t count =
      static_cast<std::size_t>(shape[0]) * shape[1] * shape[2];
  std::vector<double> gamma(count);
  KahanSum total;
  for (auto& g : gamma) {
    g = rng.exponential();
    total.add(g);
  }
  std::vector<JointDistribution::Entry> entries;
  entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double p = gamma[i] / total.value();
    if (p > 0.0) entries.push_back({decode_outcome(i, shape), p});
  }
  return JointDistribution(shape, entries);
}

RestartOutcome run_restart(const SearchConfig& config, std::uint32_t restart,
                           std::size_t dense_count) {
  Rng rng = Rng::substream(config.seed, restart);

  std::vector<double> params(dense_count);
  if (config.init_params.empty()) {
    for (double& x : params) x = rng.gaussian();
  } else {
    for (std::size_t i = 0; i < dense_count; ++i) {
      params[i] = config.init_params[i] +
                  (config.init_noise > 0.0 ? config.init_noise * rng.gaussian()
                                           : 0.0);
    }
  }

  RestartOutcome out;
  auto [lambda, dist] = objective(params, config.shape);
  out.best_lambda = lambda;
  out.best_dist = std::move(dist);
  out.trace.emplace_back(0, out.best_lambda);

  double current_lambda = lambda;
  std::vector<double> current = params;
  std::vector<double> proposal(dense_count);

  double temperature = config.initial_temperature;
  std::uint64_t next_checkpoint = 1;
  for (std::uint64_t iter = 1; iter <= config.iterations; ++iter) {
    for (std::size_t i = 0; i < dense_count; ++i) {
      proposal[i] = current[i] + config.step_sigma * rng.gaussian();
    }
    bool accepted = false;
    try {
      auto [lambda_new, dist_new] = objective(proposal, config.shape);
      const double delta = lambda_new - current_lambda;
      if (delta <= 0.0) {
        accepted = true;
      } else if (temperature > 0.0 &&
                 rng.next_double() < std::exp(-delta / temperature)) {
        accepted = true;
      }
      if (accepted) {
        current.swap(proposal);
        current_lambda = lambda_new;
        if (lambda_new < out.best_lambda) {
          out.best_lambda = lambda_new;
          out.best_dist = std::move(dist_new);
        }
      }
    } catch (const Error& e) {
      if (e.code() != Errc::NoConvergence) throw;
      ++out.no_convergence;  // rejected proposal
    }
    temperature *= config.temperature_decay;
    if (iter == next_checkpoint || iter == config.iterations) {
      out.trace.emplace_back(iter, out.best_lambda);
      while (next_checkpoint <= iter) next_checkpoint *= 2;
    }
  }
  return out;
}

}  // namespace

std::pair<double, JointDistribution> objective(
    std::span<const double> params, const std::vector<std::uint32_t>& shape) {
  const std::size_t dense_count = dense_outcome_count(shape);
  if (params.size() != dense_count) {
    raise(Errc::ShapeMismatch, "got " + std::to_string(params.size()) +
                                   " parameters for an outcome space of " +
                                   std::to_string(dense_count));
  }

  double max_logit = params[0];
  for (double x : params) max_logit = std::max(max_logit, x);

  std::vector<double> weights(dense_count);
  KahanSum total;
  for (std::size_t i = 0; i < dense_count; ++i) {
    weights[i] = std::exp(params[i] - max_logit);
    total.add(weights[i]);
  }
  const double z = total.value();

  // Normalize, drop the dust, renormalize the kept mass.
  KahanSum kept;
  for (std::size_t i = 0; i < dense_count; ++i) {
    weights[i] /= z;
    if (weights[i] < kDropThreshold) {
      weights[i] = 0.0;
    } else {
      kept.add(weights[i]);
    }
  }
  const double renorm = kept.value();

  std::vector<JointDistribution::Entry> entries;
  entries.reserve(dense_count);
  for (std::size_t i = 0; i < dense_count; ++i) {
    if (weights[i] > 0.0) {
      entries.push_back({decode_outcome(i, shape), weights[i] / renorm});
    }
  }
  JointDistribution dist(shape, entries);
  const auto [lambda, vec] = min_eigenvalue(mi_matrix(dist).sym());
  (void)vec;
  return {lambda, std::move(dist)};
}

std::vector<double> pmf_logits(const JointDistribution& dist) {
  const std::size_t dense_count = dense_outcome_count(dist.shape());
  std::vector<double> logits(dense_count, kLogitFloor);
  for (std::size_t k = 0; k < dist.support_size(); ++k) {
    logits[encode_outcome(dist.outcome(k), dist.shape())] =
        std::log(dist.probability(k));
  }
  return logits;
}

SearchResult search_min_eigen(const SearchConfig& config, std::uint32_t jobs) {
  if (config.iterations < 1) raise(Errc::OutOfRange, "iterations must be >= 1");
  if (config.restarts < 1) raise(Errc::OutOfRange, "restarts must be >= 1");
  if (!(config.step_sigma > 0.0)) raise(Errc::OutOfRange, "step_sigma must be > 0");
  if (!(config.temperature_decay > 0.0) || config.temperature_decay > 1.0) {
    raise(Errc::OutOfRange, "temperature decay must lie in (0, 1]");
  }
  const std::size_t dense_count = dense_outcome_count(config.shape);
  if (!config.init_params.empty() && config.init_params.size() != dense_count) {
    raise(Errc::ShapeMismatch,
          "init_params length " + std::to_string(config.init_params.size()) +
              " does not match outcome space " + std::to_string(dense_count));
  }

  std::vector<RestartOutcome> outcomes(config.restarts);
  std::exception_ptr failure;  // exceptions may not cross the parallel region
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? static_cast<int>(jobs) : 1)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(config.restarts); ++r) {
    try {
      outcomes[r] = run_restart(config, static_cast<std::uint32_t>(r), dense_count);
    } catch (...) {
#pragma omp critical(infomat_search_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  // Deterministic reduction: lowest lambda wins, ties to the lowest
  // restart index; independent of thread count.
  std::uint32_t best = 0;
  for (std::uint32_t r = 1; r < config.restarts; ++r) {
    if (outcomes[r].best_lambda < outcomes[best].best_lambda) best = r;
  }

  SearchResult result{.best_lambda_min = outcomes[best].best_lambda,
                      .best_distribution = *outcomes[best].best_dist,
                      .trace = std::move(outcomes[best].trace),
                      .config = config,
                      .best_restart = best,
                      .no_convergence_rejects = 0};
  for (const auto& o : outcomes) result.no_convergence_rejects += o.no_convergence;
  return result;
}

VerifyReport verify_distributions(std::span<const JointDistribution> dists) {
  VerifyReport report;
  report.samples = dists.size();
  report.worst_lambda_min = std::numeric_limits<double>::infinity();
  for (const JointDistribution& dist : dists) {
    const auto [lambda, vec] = min_eigenvalue(mi_matrix(dist).sym());
    (void)vec;
    const Certificate3 cert = psd_certificate_3(dist);
    ++report.certificates_checked;
    report.worst_lambda_min = std::min(report.worst_lambda_min, lambda);
    report.max_certificate_error =
        std::max(report.max_certificate_error, cert.max_error);
    report.worst_coefficient =
        std::min(report.worst_coefficient, -cert.decomposition.clamp_magnitude);
    if (lambda < -1e-9 || cert.max_error > 1e-9 ||
        cert.decomposition.clamp_magnitude > 1e-12) {
      ++report.violations;
    }
  }
  return report;
}

VerifyReport verify_three_var_conjecture(std::uint64_t samples,
                                         std::uint32_t max_alphabet,
                                         std::uint64_t seed,
                                         std::uint32_t jobs) {
  if (samples < 1) raise(Errc::InvalidSampleCount, "need at least one sample");
  if (max_alphabet < 2) {
    raise(Errc::OutOfRange, "max alphabet must be >= 2, got " +
                                std::to_string(max_alphabet));
  }

  VerifyReport report;
  report.samples = samples;
  report.worst_lambda_min = std::numeric_limits<double>::infinity();

  std::uint64_t violations = 0;
  std::uint64_t certificates = 0;
  double worst_lambda = std::numeric_limits<double>::infinity();
  double max_cert_error = 0.0;
  double worst_coefficient = 0.0;
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 32) num_threads(jobs > 0 ? static_cast<int>(jobs) : 1) \
    reduction(+ : violations, certificates) reduction(min : worst_lambda, worst_coefficient) \
    reduction(max : max_cert_error)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(samples); ++s) {
    try {
      const JointDistribution dist =
          sample_three_var(seed, static_cast<std::uint64_t>(s), max_alphabet);
      const auto [lambda, vec] = min_eigenvalue(mi_matrix(dist).sym());
      (void)vec;
      const Certificate3 cert = psd_certificate_3(dist);
      ++certificates;
      worst_lambda = std::min(worst_lambda, lambda);
      max_cert_error = std::max(max_cert_error, cert.max_error);
      worst_coefficient =
          std::min(worst_coefficient, -cert.decomposition.clamp_magnitude);
      if (lambda < -1e-9 || cert.max_error > 1e-9 ||
          cert.decomposition.clamp_magnitude > 1e-12) {
        ++violations;
      }
    } catch (...) {
#pragma omp critical(infomat_verify_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  report.violations = violations;
  report.certificates_checked = certificates;
  report.worst_lambda_min = worst_lambda;
  report.max_certificate_error = max_cert_error;
  report.worst_coefficient = worst_coefficient;
  return report;
}

}  // namespace infomat
