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

#include "cfsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "cfsim/errors.hpp"

namespace cfsim {

namespace {

std::string trim(std::string s) {
    const auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size() || !std::isfinite(v)) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for '" + key + "': " + value);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    if (v != std::floor(v) || std::abs(v) > 2e9)
        throw ConfigError("'" + key + "' must be an integer, got: " + value);
    return static_cast<int>(v);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size())
        throw ConfigError("'" + key + "' must be an unsigned integer, got: " + value);
    return v;
}

// Keys emitted by the run manifest besides the config snapshot; tolerated
// so a manifest file replays as a config.
bool is_manifest_metadata(const std::string& key) {
    return key == "version" || key == "scenario" || key == "workers" ||
           key == "duration_ms" || key.rfind("checksum.", 0) == 0 || key.rfind("stat.", 0) == 0;
}

} // namespace

void SimConfig::validate() const {
    const auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (num_aps < 1) fail("num_aps must be >= 1 (required)");
    if (num_users < 1) fail("num_users must be >= 1 (required)");
    if (!(area_side_m >= 0.0)) fail("area_side_m must be >= 0");
    if (!(carrier_freq_hz > 0.0)) fail("carrier_freq_hz must be > 0");
    if (!(ap_height_m > 0.0)) fail("ap_height_m must be > 0");
    if (!(user_height_m > 0.0)) fail("user_height_m must be > 0");
    if (!(bandwidth_hz > 0.0)) fail("bandwidth_hz must be > 0");
    if (!(tx_power_w > 0.0)) fail("tx_power_w must be > 0");
    if (!(noise_figure_db >= 0.0)) fail("noise_figure_db must be >= 0");
    if (!(shadow_sigma_db >= 0.0)) fail("shadow_sigma_db must be >= 0");
    if (!(d0_m > 0.0)) fail("d0_m must be > 0");
    if (!(d1_m > d0_m)) fail("d1_m must be > d0_m");
    if (num_realizations < 1) fail("num_realizations must be >= 1");
}

void EvalConfig::validate() const {
    if (!(r0 >= 0.0)) throw ConfigError("r0 must be >= 0");
    if (!(rho >= 0.0 && rho < 1.0)) throw ConfigError("rho must be in [0, 1)");
}

void SearchOptions::validate() const {
    if (phase_samples < 1)
        throw ConfigError("phase_samples must be >= 1");
}

void RunConfig::validate() const {
    sim.validate();
    eval.validate();
    search.validate();
    if (sim.num_aps < sim.num_users)
        throw ConfigError("num_aps must be >= num_users "
                          "(the small-cell baseline assigns one AP per user)");
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "area_side_m") cfg.sim.area_side_m = parse_double(key, value);
    else if (key == "num_aps") cfg.sim.num_aps = parse_int(key, value);
    else if (key == "num_users") cfg.sim.num_users = parse_int(key, value);
    else if (key == "carrier_freq_hz") cfg.sim.carrier_freq_hz = parse_double(key, value);
    else if (key == "ap_height_m") cfg.sim.ap_height_m = parse_double(key, value);
    else if (key == "user_height_m") cfg.sim.user_height_m = parse_double(key, value);
    else if (key == "bandwidth_hz") cfg.sim.bandwidth_hz = parse_double(key, value);
    else if (key == "tx_power_w") cfg.sim.tx_power_w = parse_double(key, value);
    else if (key == "noise_density_dbm_hz") cfg.sim.noise_density_dbm_hz = parse_double(key, value);
    else if (key == "noise_figure_db") cfg.sim.noise_figure_db = parse_double(key, value);
    else if (key == "shadow_sigma_db") cfg.sim.shadow_sigma_db = parse_double(key, value);
    else if (key == "d0_m") cfg.sim.d0_m = parse_double(key, value);
    else if (key == "d1_m") cfg.sim.d1_m = parse_double(key, value);
    else if (key == "master_seed") cfg.sim.master_seed = parse_u64(key, value);
    else if (key == "num_realizations") cfg.sim.num_realizations = parse_int(key, value);
    else if (key == "r0") cfg.eval.r0 = parse_double(key, value);
    else if (key == "rho") cfg.eval.rho = parse_double(key, value);
    else if (key == "phase_samples") cfg.search.phase_samples = parse_int(key, value);
    else if (key == "prune_criterion") {
        if (value == "magnitude") cfg.search.criterion = PruneCriterion::Magnitude;
        else if (value == "component-rounding") cfg.search.criterion = PruneCriterion::ComponentRounding;
        else throw ConfigError("prune_criterion must be 'magnitude' or 'component-rounding', got: " + value);
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              " is not 'key = value': " + line);
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        if (is_manifest_metadata(key)) continue;
        apply_config_entry(cfg, key, value);
    }
}

RunConfig parse_config(const std::filesystem::path& path) {
    RunConfig cfg;
    apply_config_file(cfg, path);
    cfg.validate();
    return cfg;
}

void apply_scenario(RunConfig& cfg, const std::string& name) {
    struct Preset {
        int m, l;
        double r0, rho;
    };
    static const std::map<std::string, Preset> presets = {
        {"fig2-m40", {40, 40, 0.5, 1.0 / 8}},  {"fig2-m100", {100, 40, 0.5, 1.0 / 8}},
        {"fig2-m200", {200, 40, 0.5, 1.0 / 8}}, {"fig4a", {100, 40, 0.5, 1.0 / 8}},
        {"fig4b", {200, 40, 0.5, 1.0 / 8}},     {"fig5a", {100, 40, 0.5, 1.0 / 8}},
        {"fig5b", {200, 40, 0.5, 1.0 / 8}},     {"fig5c", {200, 40, 0.5, 1.0 / 40}},
    };
    const auto it = presets.find(name);
    if (it == presets.end()) {
        std::ostringstream msg;
        msg << "unknown scenario '" << name << "'; valid names:";
        for (const auto& [k, v] : presets) msg << ' ' << k;
        throw ConfigError(msg.str());
    }
    cfg.sim.num_aps = it->second.m;
    cfg.sim.num_users = it->second.l;
    cfg.eval.r0 = it->second.r0;
    cfg.eval.rho = it->second.rho;
}

const char* prune_criterion_name(PruneCriterion c) {
    return c == PruneCriterion::Magnitude ? "magnitude" : "component-rounding";
}

} // namespace cfsim
