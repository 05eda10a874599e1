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

#include "cfsim/channel.hpp"

#include <cmath>

#include "cfsim/errors.hpp"

namespace cfsim {

namespace {
constexpr double kMinDistanceM = 1.0; // clamp against the log singularity at d -> 0
}

std::vector<std::complex<double>> ChannelRealization::user_column(int l) const {
    std::vector<std::complex<double>> col(num_aps);
    for (int m = 0; m < num_aps; ++m) col[m] = gain(m, l);
    return col;
}

NetworkLayout sample_layout(const SimConfig& config, RandomStream& stream) {
    config.validate();
    NetworkLayout layout;
    layout.ap_positions.resize(config.num_aps);
    layout.user_positions.resize(config.num_users);
    const double side = config.area_side_m;
    for (auto& p : layout.ap_positions) {
        p.x = side * stream.uniform01();
        p.y = side * stream.uniform01();
    }
    for (auto& p : layout.user_positions) {
        p.x = side * stream.uniform01();
        p.y = side * stream.uniform01();
    }
    return layout;
}

double hata_cost231_offset_db(const SimConfig& config) {
    const double f_mhz = config.carrier_freq_hz / 1e6;
    const double lf = std::log10(f_mhz);
    return 46.3 + 33.9 * lf - 13.82 * std::log10(config.ap_height_m) -
           (1.1 * lf - 0.7) * config.user_height_m + (1.56 * lf - 0.8);
}

double pathloss_db(double d_m, const SimConfig& config) {
    if (d_m < 0.0) throw ConfigError("pathloss_db: distance must be >= 0");
    const double d = std::max(d_m, kMinDistanceM);
    const double offset = hata_cost231_offset_db(config);
    const double d_km = d / 1000.0;
    const double d0_km = config.d0_m / 1000.0;
    const double d1_km = config.d1_m / 1000.0;
    // Slope 3.5 beyond d1; slope 2 between d0 and d1 anchored by continuity
    // at d1; flat below d0 anchored by continuity at d0.
    if (d > config.d1_m) return offset + 35.0 * std::log10(d_km);
    if (d > config.d0_m) return offset + 15.0 * std::log10(d1_km) + 20.0 * std::log10(d_km);
    return offset + 15.0 * std::log10(d1_km) + 20.0 * std::log10(d0_km);
}

double noise_power_w(const SimConfig& config) {
    const double dbm = config.noise_density_dbm_hz + 10.0 * std::log10(config.bandwidth_hz) +
                       config.noise_figure_db;
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

ChannelRealization assemble_channel(const NetworkLayout& layout, const SimConfig& config,
                                    std::span<const double> z,
                                    std::span<const std::complex<double>> h,
                                    int realization_index) {
    config.validate();
    const int m_aps = config.num_aps;
    const int l_users = config.num_users;
    if (static_cast<int>(layout.ap_positions.size()) != m_aps ||
        static_cast<int>(layout.user_positions.size()) != l_users)
        throw ConfigError("assemble_channel: layout does not match num_aps/num_users");
    const std::size_t n = static_cast<std::size_t>(m_aps) * l_users;
    if (z.size() != n || h.size() != n)
        throw ConfigError("assemble_channel: draw arrays must be M*L");

    ChannelRealization ch;
    ch.num_aps = m_aps;
    ch.num_users = l_users;
    ch.layout = layout;
    ch.realization_index = realization_index;
    ch.snr = config.tx_power_w / noise_power_w(config);
    ch.gains.resize(n);
    for (int m = 0; m < m_aps; ++m) {
        const Point ap = layout.ap_positions[m];
        for (int l = 0; l < l_users; ++l) {
            const Point u = layout.user_positions[l];
            const double d = std::hypot(ap.x - u.x, ap.y - u.y);
            const double pl_lin = std::pow(10.0, -pathloss_db(d, config) / 10.0);
            const std::size_t idx = static_cast<std::size_t>(m) * l_users + l;
            const double shadow_lin = std::pow(10.0, config.shadow_sigma_db * z[idx] / 10.0);
            ch.gains[idx] = std::sqrt(pl_lin * shadow_lin) * h[idx];
        }
    }
    return ch;
}

ChannelRealization sample_channel(const NetworkLayout& layout, const SimConfig& config,
                                  RandomStream& stream, int realization_index) {
    const std::size_t n = static_cast<std::size_t>(config.num_aps) * config.num_users;
    std::vector<double> z(n);
    std::vector<std::complex<double>> h(n);
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = stream.normal();
        h[i] = stream.complex_normal();
    }
    return assemble_channel(layout, config, z, h, realization_index);
}

} // namespace cfsim
