// SPDX-License-Identifier: Apache-2.0
//
// Times the Monte Carlo interference kernel: serial reference versus the
// OpenMP version, on the default scenario.
//
//   bench_mc [realizations] [threads]
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "snlink/interference.hpp"
#include "snlink/scenario.hpp"

int main(int argc, char** argv) {
    namespace chrono = std::chrono;
    const std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
    if (argc > 2) omp_set_num_threads(std::atoi(argv[2]));

    const auto scenario = snlink::default_scenario();
    const snlink::InterferenceField field(scenario.interference_config());

    auto t0 = chrono::steady_clock::now();
    const auto serial = snlink::reference::mc_expected_interference_serial(field, n, 7);
    auto t1 = chrono::steady_clock::now();
    const auto parallel = snlink::mc_expected_interference(field, n, 7);
    auto t2 = chrono::steady_clock::now();

    const auto ms = [](auto d) { return chrono::duration<double, std::milli>(d).count(); };
    std::printf("realizations      %llu\n", static_cast<unsigned long long>(n));
    std::printf("threads           %d\n", omp_get_max_threads());
    std::printf("campbell mean     %.9e W\n", field.expected());
    std::printf("serial   mean     %.9e W  (%.1f ms)\n", serial.mean_w, ms(t1 - t0));
    std::printf("parallel mean     %.9e W  (%.1f ms)\n", parallel.mean_w, ms(t2 - t1));
    std::printf("identical         %s\n", serial.mean_w == parallel.mean_w ? "yes" : "no");
    std::printf("speedup           %.2fx\n", ms(t1 - t0) / ms(t2 - t1));
    return serial.mean_w == parallel.mean_w ? 0 : 1;
}
