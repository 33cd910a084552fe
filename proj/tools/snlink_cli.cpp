// SPDX-License-Identifier: Apache-2.0
//
// snlink: power ceiling of a suborbital downlink under satellite interference.
//
// Exit codes: 0 success, 1 a sweep row did not converge, 2 invalid input,
// 3 I/O failure.
#include <omp.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "snlink/errors.hpp"
#include "snlink/scenario.hpp"
#include "snlink/sweep.hpp"

namespace {

constexpr int kExitNotConverged = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct Options {
    std::string config;
    std::string sweep_u;
    std::string sweep_dk;
    std::optional<std::uint64_t> mc_check;
    std::optional<std::uint64_t> seed;
    bool overlap_table = false;
    std::string out;
    int threads = 0;
};

int run(const Options& opt) {
    using namespace snlink;
    Scenario scenario = opt.config.empty() ? default_scenario() : load_config(opt.config);
    if (opt.threads > 0) omp_set_num_threads(opt.threads);

    const std::uint64_t seed = opt.seed.value_or(scenario.seed);
    const std::uint64_t n_mc = opt.mc_check.value_or(scenario.mc_realizations);

    std::ostringstream buf;
    write_metadata(buf, scenario, seed);
    int status = 0;
    if (opt.overlap_table) {
        const auto u = opt.sweep_u.empty() ? std::vector<double>{scenario.rx_steer_u}
                                           : parse_grid(opt.sweep_u, "--sweep-u");
        for (double steer : u) {
            buf << "# rx_steer_u " << format_double(steer) << " elevation_deg "
                << format_double(u_to_elevation_deg(steer)) << '\n';
            write_overlap_csv(buf, emit_overlap_table(scenario.interference_config(steer)));
        }
    } else {
        SweepSpec spec{
            .steer_u = opt.sweep_u.empty() ? std::vector<double>{scenario.rx_steer_u}
                                           : parse_grid(opt.sweep_u, "--sweep-u"),
            .sn_distance_m = opt.sweep_dk.empty() ? std::vector<double>{scenario.link.sn_distance_m}
                                                  : parse_grid(opt.sweep_dk, "--sweep-dk"),
            .base = scenario,
            .mc_check = n_mc > 0,
            .n_realizations = n_mc,
            .seed = seed,
        };
        const auto rows = run_sweep(spec);
        write_sweep_csv(buf, rows, spec.mc_check);
        for (const auto& r : rows) {
            if (!r.solution.converged) status = kExitNotConverged;
        }
    }

    if (opt.out.empty()) {
        std::cout << buf.str() << std::flush;
        if (!std::cout) throw IoError("failed writing to standard output");
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) throw IoError("cannot open output file: " + opt.out);
        file << buf.str();
        file.close();
        if (!file) throw IoError("failed writing output file: " + opt.out);
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum transmit-power ceiling of a suborbital downlink under "
                 "Poisson satellite interference"};
    Options opt;
    app.add_option("--config", opt.config, "Scenario file (key = value, [shell] blocks)");
    app.add_option("--sweep-u", opt.sweep_u, "Receiver steering grid in direction cosine, start:stop:n");
    app.add_option("--sweep-dk", opt.sweep_dk, "SN distance grid in meters, start:stop:n");
    app.add_option("--mc-check", opt.mc_check, "Monte Carlo realizations per steering value");
    app.add_option("--seed", opt.seed, "Seed of the Monte Carlo streams");
    app.add_flag("--overlap-table", opt.overlap_table, "Emit the per-shell overlap gain table");
    app.add_option("--out", opt.out, "Write CSV to this path instead of stdout");
    app.add_option("--threads", opt.threads, "OpenMP worker count (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        return run(opt);
    } catch (const snlink::IoError& e) {
        std::cerr << "snlink: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "snlink: " << e.what() << '\n';
        return kExitInvalid;
    }
}
