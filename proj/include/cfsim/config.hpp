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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace cfsim {

// User pruning rule applied before the coefficient search.
//   Magnitude:         drop user l when sqrt(SNR)*|g_l| < 0.5 (rotation-sound).
//   ComponentRounding: drop user l when round(sqrt(SNR)*g_l) == 0 component-wise.
enum class PruneCriterion { Magnitude, ComponentRounding };

// Network geometry, propagation and campaign parameters.
struct SimConfig {
    double area_side_m = 1000.0;
    int num_aps = 0;  // M, required
    int num_users = 0; // L, required
    double carrier_freq_hz = 1.9e9;
    double ap_height_m = 15.0;
    double user_height_m = 1.65;
    double bandwidth_hz = 20e6;
    double tx_power_w = 0.2;
    double noise_density_dbm_hz = -174.0;
    double noise_figure_db = 9.0;
    double shadow_sigma_db = 8.0;
    double d0_m = 10.0;
    double d1_m = 50.0;
    std::uint64_t master_seed = 1;
    int num_realizations = 200;

    // Throws ConfigError naming the offending field and bound.
    void validate() const;
};

// Rate target and outage probability target for the evaluation layer.
struct EvalConfig {
    double r0 = 0.5;  // common transmit rate, bits per channel use
    double rho = 0.125; // target outage probability

    void validate() const;
};

// Granularity of the scaling-factor search.
struct SearchOptions {
    int phase_samples = 64; // phase offsets in [0, pi/2)
    PruneCriterion criterion = PruneCriterion::Magnitude;

    void validate() const;
};

// Everything a campaign needs.
struct RunConfig {
    SimConfig sim;
    EvalConfig eval;
    SearchOptions search;

    void validate() const;
};

// Parse a key = value config file. Unknown keys are rejected; keys written
// by the run manifest (version, duration_ms, checksum.*, ...) are tolerated
// so a manifest can be replayed as a config. Fields absent from the file
// keep their defaults; num_aps and num_users have no default and must be
// set by the file or a scenario.
RunConfig parse_config(const std::filesystem::path& path);

// Same file grammar, applied onto an existing config without the final
// validation; lets the CLI layer defaults, file, scenario and flags before
// validating once.
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

// Apply one line of "key = value" to the config. Used by the file parser
// and by scenario presets. Throws ConfigError for unknown keys or bad values.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

// Named presets: fig2-m40, fig2-m100, fig2-m200, fig4a, fig4b, fig5a,
// fig5b, fig5c. Each sets num_aps, num_users, r0 and rho only.
void apply_scenario(RunConfig& cfg, const std::string& name);

const char* prune_criterion_name(PruneCriterion c);

} // namespace cfsim
