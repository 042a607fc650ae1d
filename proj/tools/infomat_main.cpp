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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "infomat/errors.hpp"
#include "infomat/generators.hpp"
#include "infomat/info.hpp"
#include "infomat/json_io.hpp"
#include "infomat/linalg.hpp"
#include "infomat/search.hpp"

namespace {

using namespace infomat;

std::string format15(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", v);
  return buffer;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::ParseError, "cannot open " + path + " for writing");
  out << text;
}

JointDistribution load_distribution(const std::string& path) {
  return distribution_from_json(parse_json(read_text(path), path));
}

SymMatrix load_matrix(const std::string& path) {
  return matrix_from_json(parse_json(read_text(path), path));
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// Parses "1,3,4" (1-based CLI indices) into 0-based indices.
std::vector<std::uint32_t> parse_indices(const std::string& text) {
  std::vector<std::uint32_t> indices;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(part, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != part.size() || v < 1) {
      raise(Errc::ParseError, "bad variable index \"" + part + "\" (1-based)");
    }
    indices.push_back(static_cast<std::uint32_t>(v - 1));
  }
  if (indices.empty()) raise(Errc::ParseError, "empty index list");
  return indices;
}

std::vector<std::uint32_t> parse_shape(const std::string& text) {
  std::vector<std::uint32_t> shape;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(part, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != part.size() || v < 1) {
      raise(Errc::ParseError, "bad alphabet size \"" + part + "\"");
    }
    shape.push_back(static_cast<std::uint32_t>(v));
  }
  if (shape.empty()) raise(Errc::ParseError, "empty shape");
  return shape;
}

JointDistribution make_example(const std::string& spec) {
  if (spec == "xor4") return example_xor4();
  if (spec == "sum4") return sum_example();
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    std::size_t pos = 0;
    unsigned long n = 0;
    try {
      n = std::stoul(arg, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == arg.size() && pos > 0) {
      if (kind == "parity") return parity_family(static_cast<std::uint32_t>(n));
      if (kind == "independent") {
        return independent_uniform_bits(static_cast<std::uint32_t>(n));
      }
    }
  }
  raise(Errc::OutOfRange,
        "unknown example \"" + spec +
            "\" (expected xor4, sum4, parity:<n> or independent:<n>)");
}

std::string matrix_table(const MIMatrix& m) {
  std::vector<std::string> cells(m.n * m.n);
  std::size_t width = 0;
  for (std::size_t i = 0; i < m.n * m.n; ++i) {
    cells[i] = format15(m.entries[i]);
    width = std::max(width, cells[i].size());
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      if (j) out << "  ";
      out << std::string(width - cells[i * m.n + j].size(), ' ')
          << cells[i * m.n + j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mutual information matrices of discrete variable systems: "
      "construction, eigenvalues, PSD tests, certificates and search"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "run metadata on stderr");

  int exit_code = 0;

  // entropy
  std::string entropy_in = "-";
  std::string entropy_subset;
  auto* entropy_cmd =
      app.add_subcommand("entropy", "entropy of a variable subset, in bits");
  entropy_cmd->add_option("-i,--input", entropy_in, "distribution JSON ('-' = stdin)");
  entropy_cmd->add_option("--subset", entropy_subset, "1-based indices, e.g. 1,3")
      ->required();
  entropy_cmd->callback([&] {
    const JointDistribution dist = load_distribution(entropy_in);
    const VariableSet s(parse_indices(entropy_subset));
    std::cout << format15(subset_entropy(dist, s)) << "\n";
  });

  // mi
  std::string mi_in = "-";
  std::string mi_pair;
  auto* mi_cmd = app.add_subcommand("mi", "mutual information of a pair, in bits");
  mi_cmd->add_option("-i,--input", mi_in, "distribution JSON ('-' = stdin)");
  mi_cmd->add_option("--pair", mi_pair, "1-based pair, e.g. 1,4")->required();
  mi_cmd->callback([&] {
    const JointDistribution dist = load_distribution(mi_in);
    const auto indices = parse_indices(mi_pair);
    if (indices.size() != 2) {
      raise(Errc::ParseError, "--pair needs exactly two indices");
    }
    std::cout << format15(mutual_information(dist, indices[0], indices[1]))
              << "\n";
  });

  // mimatrix
  std::string mimatrix_in = "-";
  std::string mimatrix_out;
  bool mimatrix_json = false;
  auto* mimatrix_cmd = app.add_subcommand("mimatrix", "full MI matrix");
  mimatrix_cmd->add_option("-i,--input", mimatrix_in, "distribution JSON");
  mimatrix_cmd->add_option("-o,--output", mimatrix_out,
                           "write matrix JSON here instead of a text table");
  mimatrix_cmd->add_flag("--json", mimatrix_json, "emit JSON on stdout");
  mimatrix_cmd->callback([&] {
    const MIMatrix m = mi_matrix(load_distribution(mimatrix_in));
    if (!mimatrix_out.empty()) {
      write_text(mimatrix_out, dump(to_json(m)));
    } else if (mimatrix_json) {
      write_text("-", dump(to_json(m)));
    } else {
      std::cout << matrix_table(m);
    }
  });

  // eig
  std::string eig_in = "-";
  auto* eig_cmd =
      app.add_subcommand("eig", "eigenvalues of a symmetric matrix, ascending");
  eig_cmd->add_option("-i,--input", eig_in, "matrix JSON");
  eig_cmd->callback([&] {
    const EigenResult r = eigen_sym(load_matrix(eig_in));
    for (double v : r.values) std::cout << format15(v) << "\n";
  });

  // check-psd
  std::string psd_in = "-";
  double psd_tol = -1.0;
  auto* psd_cmd = app.add_subcommand(
      "check-psd", "PSD test of the MI matrix (exit 0 = PSD, 2 = not PSD)");
  psd_cmd->add_option("-i,--input", psd_in, "distribution JSON");
  psd_cmd->add_option("--tol", psd_tol, "eigenvalue tolerance (default 1e-9 scaled)");
  psd_cmd->callback([&] {
    const SymMatrix m = mi_matrix(load_distribution(psd_in)).sym();
    const PsdVerdict verdict =
        psd_tol >= 0.0 ? is_psd(m, psd_tol) : is_psd(m);
    if (verdict.psd) {
      std::cout << "PSD (min eigenvalue " << format15(verdict.witness_value)
                << ")\n";
    } else {
      std::cout << "NotPSD: eigenvalue " << format15(verdict.witness_value)
                << ", quadratic form " << format15(verdict.quadratic_form)
                << "\n";
      std::cout << "witness:";
      for (double v : verdict.witness_vector) std::cout << ' ' << format15(v);
      std::cout << "\n";
      exit_code = 2;
    }
  });

  // imeasure
  std::string imeasure_in = "-";
  std::string imeasure_out = "-";
  auto* imeasure_cmd =
      app.add_subcommand("imeasure", "information-diagram atom table JSON");
  imeasure_cmd->add_option("-i,--input", imeasure_in, "distribution JSON");
  imeasure_cmd->add_option("-o,--output", imeasure_out, "atom table JSON");
  imeasure_cmd->callback([&] {
    const AtomTable atoms = i_measure_atoms(load_distribution(imeasure_in));
    write_text(imeasure_out, dump(to_json(atoms)));
  });

  // certify3
  std::string certify_in = "-";
  auto* certify_cmd = app.add_subcommand(
      "certify3", "three-variable sum-of-PSD certificate coefficients");
  certify_cmd->add_option("-i,--input", certify_in, "distribution JSON");
  certify_cmd->callback([&] {
    const Certificate3 cert = psd_certificate_3(load_distribution(certify_in));
    std::cout << "a  = " << format15(cert.decomposition.a) << "\n";
    for (int k = 0; k < 7; ++k) {
      std::cout << "b" << k + 1 << " = " << format15(cert.decomposition.b[k])
                << "\n";
    }
    std::cout << "max reconstruction error = " << format15(cert.max_error)
              << "\n";
  });

  // example
  std::string example_spec;
  std::string example_out = "-";
  auto* example_cmd = app.add_subcommand(
      "example", "emit a built-in distribution (xor4, sum4, parity:<n>, independent:<n>)");
  example_cmd->add_option("spec", example_spec, "which example")->required();
  example_cmd->add_option("-o,--output", example_out, "distribution JSON");
  example_cmd->callback([&] {
    write_text(example_out, dump(to_json(make_example(example_spec))));
  });

  // search
  std::string search_shape;
  std::string search_out = "-";
  std::string search_init;
  SearchConfig config;
  std::uint32_t search_jobs = 1;
  auto* search_cmd = app.add_subcommand(
      "search", "simulated-annealing search for low MI-matrix eigenvalues");
  search_cmd->add_option("--shape", search_shape, "alphabet sizes, e.g. 2,2,2,4")
      ->required();
  search_cmd->add_option("--seed", config.seed, "RNG seed");
  search_cmd->add_option("--iters", config.iterations, "iterations per restart");
  search_cmd->add_option("--restarts", config.restarts, "independent restarts");
  search_cmd->add_option("--sigma", config.step_sigma, "proposal stddev (logits)");
  search_cmd->add_option("--temp", config.initial_temperature,
                         "initial Metropolis temperature");
  search_cmd->add_option("--decay", config.temperature_decay,
                         "geometric cooling factor");
  search_cmd->add_option("--init", search_init,
                         "distribution JSON to start from (logit encoding)");
  search_cmd->add_option("--init-noise", config.init_noise,
                         "per-restart Gaussian noise on the init logits");
  search_cmd->add_option("--jobs", search_jobs, "parallel restart workers");
  search_cmd->add_option("-o,--output", search_out, "run-log JSON");
  search_cmd->callback([&] {
    config.shape = parse_shape(search_shape);
    if (!search_init.empty()) {
      config.init_params = pmf_logits(load_distribution(search_init));
    }
    const SearchResult result = search_min_eigen(config, search_jobs);
    if (result.no_convergence_rejects > 0) {
      std::cerr << "note: " << result.no_convergence_rejects
                << " proposals rejected for eigensolver non-convergence\n";
    }
    if (verbose) {
      std::cerr << "best restart: " << result.best_restart << "\n";
    }
    write_text(search_out, dump(run_log_json(result)));
  });

  // verify3
  std::uint64_t verify_samples = 1000;
  std::uint32_t verify_alphabet = 4;
  std::uint64_t verify_seed = 1;
  std::uint32_t verify_jobs = 1;
  std::string verify_out = "-";
  auto* verify_cmd = app.add_subcommand(
      "verify3", "randomized check that 3-variable MI matrices are PSD");
  verify_cmd->add_option("--samples", verify_samples, "number of random instances");
  verify_cmd->add_option("--max-alphabet", verify_alphabet, "alphabet cap (>= 2)");
  verify_cmd->add_option("--seed", verify_seed, "RNG seed");
  verify_cmd->add_option("--jobs", verify_jobs, "parallel workers");
  verify_cmd->add_option("-o,--output", verify_out, "report JSON");
  verify_cmd->callback([&] {
    const VerifyReport report = verify_three_var_conjecture(
        verify_samples, verify_alphabet, verify_seed, verify_jobs);
    write_text(verify_out, dump(to_json(report)));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // exit 1 for any usage error; 0 stays 0 (help and friends)
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
