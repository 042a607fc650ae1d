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

// Times the OpenMP kernels against their serial reference
// implementations and checks that the outputs stay bit-identical.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "infomat/generators.hpp"
#include "infomat/info.hpp"
#include "infomat/search.hpp"

using namespace infomat;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

int threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int main() {
  std::printf("infomat kernel benchmark (%d thread(s))\n\n", threads());

  std::printf("mi_matrix: parallel pair kernel vs serial reference\n");
  std::printf("%8s %10s %12s %12s %9s %6s\n", "family", "variables",
              "serial[s]", "parallel[s]", "speedup", "equal");
  for (std::uint32_t n = 4; n <= 6; ++n) {
    const JointDistribution dist = parity_family(n);

    auto t0 = clock_type::now();
    const MIMatrix serial = mi_matrix_reference(dist);
    const double serial_s = seconds_since(t0);

    t0 = clock_type::now();
    const MIMatrix parallel = mi_matrix(dist);
    const double parallel_s = seconds_since(t0);

    const bool equal =
        serial.n == parallel.n &&
        std::memcmp(serial.entries.data(), parallel.entries.data(),
                    serial.entries.size() * sizeof(double)) == 0;
    std::printf("%8s %10zu %12.4f %12.4f %8.2fx %6s\n",
                ("parity:" + std::to_string(n)).c_str(),
                dist.num_variables(), serial_s, parallel_s,
                serial_s / parallel_s, equal ? "yes" : "NO");
  }

  std::printf("\nverify3: parallel samples vs single worker\n");
  const std::uint64_t samples = 4000;
  auto t0 = clock_type::now();
  const VerifyReport one = verify_three_var_conjecture(samples, 4, 7, 1);
  const double one_s = seconds_since(t0);

  t0 = clock_type::now();
  const VerifyReport many =
      verify_three_var_conjecture(samples, 4, 7,
                                  static_cast<std::uint32_t>(threads()));
  const double many_s = seconds_since(t0);

  const bool equal = one.violations == many.violations &&
                     one.worst_lambda_min == many.worst_lambda_min &&
                     one.max_certificate_error == many.max_certificate_error;
  std::printf("%8llu samples: 1 worker %.4fs, %d workers %.4fs, %.2fx, %s\n",
              static_cast<unsigned long long>(samples), one_s, threads(),
              many_s, one_s / many_s, equal ? "results equal" : "RESULTS DIFFER");
  return equal ? 0 : 1;
}
