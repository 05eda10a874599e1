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

#include "cfsim/campaign.hpp"

#include <chrono>
#include <exception>
#include <sstream>

#include <omp.h>

#include "cfsim/errors.hpp"
#include "cfsim/report.hpp"
#include "cfsim/version.hpp"

namespace cfsim {

namespace {
// Substream domains, so layout/channel draws and evaluation draws stay
// decoupled.
constexpr std::uint64_t kDomainChannel = 0;
constexpr std::uint64_t kDomainEvaluation = 1;
} // namespace

RealizationOutcome run_single(const RunConfig& cfg, int index) {
    RandomStream chan_stream =
        RandomStream::substream(cfg.sim.master_seed, static_cast<std::uint64_t>(index),
                                kDomainChannel);
    const NetworkLayout layout = sample_layout(cfg.sim, chan_stream);
    const ChannelRealization ch = sample_channel(layout, cfg.sim, chan_stream, index);

    RandomStream eval_stream =
        RandomStream::substream(cfg.sim.master_seed, static_cast<std::uint64_t>(index),
                                kDomainEvaluation);
    return evaluate_realization(ch, cfg.eval, eval_stream, cfg.search);
}

std::vector<RealizationOutcome> run_realizations(const RunConfig& cfg, int workers) {
    cfg.validate();
    const int n = cfg.sim.num_realizations;
    std::vector<RealizationOutcome> out(n);

    if (workers == 1) {
        // serial reference path
        for (int i = 0; i < n; ++i) out[i] = run_single(cfg, i);
        return out;
    }

    const int threads = workers > 0 ? workers : omp_get_max_threads();
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < n; ++i) {
        try {
            out[i] = run_single(cfg, i);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

namespace {

void append_config_snapshot(std::ostringstream& m, const RunConfig& cfg) {
    const SimConfig& s = cfg.sim;
    m << "area_side_m = " << format_double(s.area_side_m) << '\n'
      << "num_aps = " << s.num_aps << '\n'
      << "num_users = " << s.num_users << '\n'
      << "carrier_freq_hz = " << format_double(s.carrier_freq_hz) << '\n'
      << "ap_height_m = " << format_double(s.ap_height_m) << '\n'
      << "user_height_m = " << format_double(s.user_height_m) << '\n'
      << "bandwidth_hz = " << format_double(s.bandwidth_hz) << '\n'
      << "tx_power_w = " << format_double(s.tx_power_w) << '\n'
      << "noise_density_dbm_hz = " << format_double(s.noise_density_dbm_hz) << '\n'
      << "noise_figure_db = " << format_double(s.noise_figure_db) << '\n'
      << "shadow_sigma_db = " << format_double(s.shadow_sigma_db) << '\n'
      << "d0_m = " << format_double(s.d0_m) << '\n'
      << "d1_m = " << format_double(s.d1_m) << '\n'
      << "master_seed = " << s.master_seed << '\n'
      << "num_realizations = " << s.num_realizations << '\n'
      << "r0 = " << format_double(cfg.eval.r0) << '\n'
      << "rho = " << format_double(cfg.eval.rho) << '\n'
      << "phase_samples = " << cfg.search.phase_samples << '\n'
      << "prune_criterion = " << prune_criterion_name(cfg.search.criterion) << '\n';
}

} // namespace

CampaignOutputs run_campaign(const RunConfig& cfg, const std::filesystem::path& out_dir,
                             int workers, const std::string& scenario) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<RealizationOutcome> outcomes = run_realizations(cfg, workers);
    CampaignOutputs result;
    result.stats = aggregate(outcomes, cfg.eval, cfg.sim.num_users);
    const auto t1 = std::chrono::steady_clock::now();
    result.duration_s = std::chrono::duration<double>(t1 - t0).count();

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

    const CampaignStats& st = result.stats;

    const SvgSeries rank_series[] = {{"C&F", "#1f4fd8", &st.rank_cdf}};
    const SvgSeries outage_series[] = {{"C&F", "#1f4fd8", &st.outage_cdf[0]},
                                       {"MRC", "#000000", &st.outage_cdf[1]},
                                       {"SC", "#c62828", &st.outage_cdf[2]}};
    const SvgSeries thr_series[] = {{"C&F", "#1f4fd8", &st.throughput_cdf[0]},
                                    {"MRC", "#000000", &st.throughput_cdf[1]},
                                    {"SC", "#c62828", &st.throughput_cdf[2]}};

    const std::pair<const char*, std::string> files[] = {
        {"rank-cdf.csv", rank_cdf_csv(st)},
        {"outage-cdf.csv", outage_cdf_csv(st)},
        {"throughput-cdf.csv", throughput_cdf_csv(st)},
        {"rates-example.csv", rates_example_csv(outcomes.front())},
        {"rank-cdf.svg", render_cdf_svg(rank_series, "recoverable users (matrix rank)",
                                        "empirical CDF")},
        {"outage-cdf.svg", render_cdf_svg(outage_series, "outage users per realization",
                                          "empirical CDF")},
        {"throughput-cdf.svg", render_cdf_svg(thr_series, "per-user throughput (bits/channel use)",
                                              "empirical CDF")},
    };

    std::ostringstream manifest;
    manifest << "version = " << kVersion << '\n';
    if (!scenario.empty()) manifest << "scenario = " << scenario << '\n';
    append_config_snapshot(manifest, cfg);

    manifest << "stat.full_rank_fraction = " << format_double(st.full_rank_fraction) << '\n'
             << "stat.min_m_rank = " << st.min_m_rank << '\n';
    for (int s = 0; s < 3; ++s)
        manifest << "stat.outage_probability." << scheme_name(static_cast<Scheme>(s)) << " = "
                 << format_double(st.outage_probability[s]) << '\n';
    manifest << "stat.mean_backhaul_all = " << format_double(st.mean_backhaul_all) << '\n'
             << "stat.mean_backhaul_selected = " << format_double(st.mean_backhaul_selected)
             << '\n';

    for (const auto& [name, content] : files) {
        const auto path = out_dir / name;
        write_file_atomic(path, content);
        result.files.push_back(path);
        manifest << "checksum." << name << " = fnv1a64:" << fnv1a64_hex(content) << '\n';
    }

    const auto t2 = std::chrono::steady_clock::now();
    manifest << "duration_ms = "
             << std::chrono::duration_cast<std::chrono::milliseconds>(t2 - t0).count() << '\n';

    const auto manifest_path = out_dir / "manifest.txt";
    write_file_atomic(manifest_path, manifest.str());
    result.files.push_back(manifest_path);
    return result;
}

} // namespace cfsim
