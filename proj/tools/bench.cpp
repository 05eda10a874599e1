// cfsim: compute-and-forward simulator for the cell-free massive MIMO uplink
// Copyright (C) 2026 cfsim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Times the serial reference loop against the OpenMP campaign kernel on
// the same workload and checks that they produce identical outcomes.

#include <chrono>
#include <cstdio>
#include <omp.h>

#include <CLI11.hpp>

#include "cfsim/campaign.hpp"

namespace {

double time_run(const cfsim::RunConfig& cfg, int workers,
                std::vector<cfsim::RealizationOutcome>& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = cfsim::run_realizations(cfg, workers);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool same_outcomes(const std::vector<cfsim::RealizationOutcome>& a,
                   const std::vector<cfsim::RealizationOutcome>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].m_rank != b[i].m_rank || a[i].cnf_rates != b[i].cnf_rates ||
            a[i].mrc_rates != b[i].mrc_rates || a[i].sc_rates != b[i].sc_rates)
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP campaign benchmark"};
    int m = 100, l = 40, n = 20, workers = 0;
    std::uint64_t seed = 1;
    app.add_option("--aps", m, "number of APs");
    app.add_option("--users", l, "number of users");
    app.add_option("--realizations", n, "realizations per run");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--workers", workers, "threads for the parallel run; 0 = all cores");
    CLI11_PARSE(app, argc, argv);

    cfsim::RunConfig cfg;
    cfg.sim.num_aps = m;
    cfg.sim.num_users = l;
    cfg.sim.num_realizations = n;
    cfg.sim.master_seed = seed;

    std::vector<cfsim::RealizationOutcome> serial_out, parallel_out;
    const double t_serial = time_run(cfg, 1, serial_out);
    const int threads = workers > 0 ? workers : omp_get_max_threads();
    const double t_parallel = time_run(cfg, workers, parallel_out);

    std::printf("M=%d L=%d realizations=%d seed=%llu\n", m, l, n,
                static_cast<unsigned long long>(seed));
    std::printf("serial reference : %8.3f s  (%.1f ms/realization)\n", t_serial,
                1e3 * t_serial / n);
    std::printf("openmp x%-8d : %8.3f s  (%.1f ms/realization)\n", threads, t_parallel,
                1e3 * t_parallel / n);
    std::printf("speedup          : %8.2fx\n", t_serial / t_parallel);

    if (!same_outcomes(serial_out, parallel_out)) {
        std::printf("MISMATCH: serial and parallel outcomes differ\n");
        return 1;
    }
    std::printf("outcomes identical\n");
    return 0;
}
