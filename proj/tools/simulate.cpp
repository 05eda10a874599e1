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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cfsim/campaign.hpp"
#include "cfsim/errors.hpp"
#include "cfsim/report.hpp"
#include "cfsim/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Monte-Carlo uplink campaigns: compute-and-forward vs MRC and small cells "
                 "over a cell-free massive MIMO network"};
    app.set_version_flag("--version", std::string(cfsim::kVersion));

    std::string config_path;
    std::string scenario;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int workers = 0;

    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--scenario", scenario,
                   "named preset (fig2-m40, fig2-m100, fig2-m200, fig4a, fig4b, fig5a, fig5b, "
                   "fig5c); overrides num_aps, num_users, r0, rho");
    app.add_option("--seed", seed, "master seed (overrides master_seed from the file)")
        ->each([&](const std::string&) { seed_given = true; });
    app.add_option("--workers", workers, "worker threads; 0 = all cores, 1 = serial");
    app.add_option("--out-dir", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        cfsim::RunConfig cfg;
        if (!config_path.empty()) cfsim::apply_config_file(cfg, config_path);
        if (!scenario.empty()) cfsim::apply_scenario(cfg, scenario);
        if (seed_given) cfg.sim.master_seed = seed;
        cfg.validate();

        const auto out = cfsim::run_campaign(cfg, out_dir, workers, scenario);
        const auto& st = out.stats;
        std::cout << "realizations: " << st.num_realizations << "  (M=" << cfg.sim.num_aps
                  << ", L=" << cfg.sim.num_users << ", seed=" << cfg.sim.master_seed << ")\n"
                  << "full-rank fraction: " << cfsim::format_double(st.full_rank_fraction)
                  << "  min rank: " << st.min_m_rank << '\n';
        for (int s = 0; s < 3; ++s)
            std::cout << "outage probability (" << cfsim::scheme_name(static_cast<cfsim::Scheme>(s))
                      << "): " << cfsim::format_double(st.outage_probability[s]) << '\n';
        std::cout << "mean backhaul: all=" << cfsim::format_double(st.mean_backhaul_all)
                  << "  selected=" << cfsim::format_double(st.mean_backhaul_selected) << '\n';
        for (const auto& f : out.files) std::cout << "wrote " << f.string() << '\n';
        std::cout << "done in " << cfsim::format_double(out.duration_s) << " s\n";
        return 0;
    } catch (const cfsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const cfsim::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
