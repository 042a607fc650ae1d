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

// End-to-end tests that drive the installed CLI binary through a shell,
// pipelines included. The binary path arrives as argv[1].

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "infomat/generators.hpp"
#include "infomat/info.hpp"
#include "infomat/json_io.hpp"

namespace {

std::string g_cli;

struct CmdResult {
  int status = -1;
  std::string output;
};

CmdResult run(const std::string& command) {
  CmdResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> values;
  std::istringstream in(text);
  double v = 0.0;
  while (in >> v) values.push_back(v);
  return values;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("xor4 through check-psd exits 2 with the witness") {
    const CmdResult r = run(g_cli + " example xor4 | " + g_cli + " check-psd");
    CHECK(r.status == 2);
    CHECK(r.output.find("NotPSD") != std::string::npos);
    CHECK(r.output.find("-0.302775637") != std::string::npos);
  }

  TEST_CASE("independent bits are PSD, exit 0") {
    const CmdResult r =
        run(g_cli + " example independent:3 | " + g_cli + " check-psd");
    CHECK(r.status == 0);
    CHECK(r.output.rfind("PSD", 0) == 0);
  }

  TEST_CASE("sum4 matrix text table") {
    const CmdResult r = run(g_cli + " example sum4 | " + g_cli + " mimatrix");
    CHECK(r.status == 0);
    const std::vector<double> got = parse_numbers(r.output);
    const std::vector<double> want{1,   0,   0.5, 1,   0,   1,   0.5, 1,
                                   0.5, 0.5, 1.5, 1.5, 1,   1,   1.5, 2};
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(std::abs(got[i] - want[i]) <= 1e-12);
    }
  }

  TEST_CASE("entropy and mi use 1-based indices") {
    CHECK(run(g_cli + " example xor4 | " + g_cli + " entropy --subset 4").output ==
          "2\n");
    CHECK(run(g_cli + " example xor4 | " + g_cli + " entropy --subset 1,2,3").output ==
          "2\n");
    CHECK(run(g_cli + " example xor4 | " + g_cli + " mi --pair 1,4").output ==
          "1\n");
    CHECK(run(g_cli + " example xor4 | " + g_cli + " mi --pair 1,2").output ==
          "0\n");
  }

  TEST_CASE("eig prints ascending eigenvalues, 15 significant digits") {
    const CmdResult r = run(g_cli + " example xor4 | " + g_cli +
                            " mimatrix --json | " + g_cli + " eig");
    CHECK(r.status == 0);
    const std::vector<double> values = parse_numbers(r.output);
    REQUIRE(values.size() == 4);
    CHECK(std::abs(values.front() - (3.0 - std::sqrt(13.0)) / 2.0) <= 1e-9);
    for (std::size_t i = 1; i < values.size(); ++i) {
      CHECK(values[i - 1] <= values[i]);
    }
    // 15 significant digits on the wire
    CHECK(r.output.find("-0.302775637731") != std::string::npos);
  }

  TEST_CASE("imeasure emits the atom table JSON") {
    const CmdResult r =
        run(g_cli + " example independent:3 | " + g_cli + " imeasure");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 3);
    CHECK(j["atoms"]["1"] == 1.0);
    CHECK(j["atoms"]["1,2,3"] == 0.0);
  }

  TEST_CASE("certify3 prints the coefficients") {
    const CmdResult r =
        run(g_cli + " example independent:3 | " + g_cli + " certify3");
    CHECK(r.status == 0);
    CHECK(r.output.find("a  = 0") != std::string::npos);
    CHECK(r.output.find("b1 = 1") != std::string::npos);
    CHECK(r.output.find("max reconstruction error = 0") != std::string::npos);
  }

  TEST_CASE("distribution JSON round trips through files") {
    const std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    const std::string dist_path = dir + "/infomat_cli_test_dist.json";
    const std::string matrix_path = dir + "/infomat_cli_test_matrix.json";

    CHECK(run(g_cli + " example parity:3 -o " + dist_path).status == 0);
    CHECK(run(g_cli + " mimatrix -i " + dist_path + " -o " + matrix_path).status == 0);
    const CmdResult eig = run(g_cli + " eig -i " + matrix_path);
    CHECK(eig.status == 0);
    const std::vector<double> values = parse_numbers(eig.output);
    REQUIRE(values.size() == 8);
    CHECK(std::abs(values.front() - (2.0 - 2.0 * std::sqrt(2.0))) <= 1e-9);

    std::remove(dist_path.c_str());
    std::remove(matrix_path.c_str());
  }

  TEST_CASE("search run log is reproducible byte for byte") {
    const std::string cmd = g_cli +
                            " search --shape 2,2,2 --seed 42 --iters 200 "
                            "--restarts 2";
    const CmdResult a = run(cmd);
    const CmdResult b = run(cmd);
    CHECK(a.status == 0);
    CHECK(a.output == b.output);
    const auto j = nlohmann::json::parse(a.output);
    CHECK(j.contains("config"));
    CHECK(j.contains("best_lambda_min"));
    CHECK(j.contains("trace"));
    CHECK(j.contains("best_distribution"));
    CHECK(j["best_lambda_min"].get<double>() >= -1e-9);
  }

  TEST_CASE("verify3 reports zero violations") {
    const CmdResult r = run(g_cli + " verify3 --samples 50 --max-alphabet 4 --seed 1");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["samples"] == 50);
    CHECK(j["violations"] == 0);
    CHECK(j["certificates_checked"] == 50);
  }

  TEST_CASE("usage and data errors exit 1") {
    CHECK(run(g_cli + " example nosuchthing").status == 1);
    CHECK(run(g_cli + " entropy --subset 1 -i /does/not/exist.json").status == 1);
    CHECK(run("echo '{broken' | " + g_cli + " entropy --subset 1").status == 1);
    CHECK(run(g_cli + " mi --pair 1").status == 1);       // needs two indices
    CHECK(run(g_cli + " nosubcommand").status == 1);
    CHECK(run(g_cli + " example xor4 | " + g_cli + " entropy --subset 9").status == 1);
  }

  TEST_CASE("INFOMAT_TOL loosens the default PSD tolerance") {
    const CmdResult strict =
        run(g_cli + " example xor4 | " + g_cli + " check-psd");
    CHECK(strict.status == 2);
    const CmdResult loose =
        run(g_cli + " example xor4 | INFOMAT_TOL=0.5 " + g_cli + " check-psd");
    CHECK(loose.status == 0);
    CHECK(loose.output.rfind("PSD", 0) == 0);
  }

  TEST_CASE("explicit --tol outranks the default") {
    const CmdResult loose =
        run(g_cli + " example xor4 | " + g_cli + " check-psd --tol 0.5");
    CHECK(loose.status == 0);
  }

  TEST_CASE("help succeeds") {
    CHECK(run(g_cli + " --help").status == 0);
  }
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-cli> [doctest args]\n");
    return 1;
  }
  g_cli = argv[1];
  doctest::Context context;
  context.applyCommandLine(argc - 1, argv + 1);
  return context.run();
}
