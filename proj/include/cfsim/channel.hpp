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

#include <complex>
#include <span>
#include <vector>

#include "cfsim/config.hpp"
#include "cfsim/rng.hpp"

namespace cfsim {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct NetworkLayout {
    std::vector<Point> ap_positions;   // M entries
    std::vector<Point> user_positions; // L entries
};

// One draw of the M x L channel matrix with its SNR context. Immutable
// after construction; generation of distinct realizations may run
// concurrently, each on its own substream.
struct ChannelRealization {
    int num_aps = 0;
    int num_users = 0;
    std::vector<std::complex<double>> gains; // row-major M x L, entry g_ml
    double snr = 0.0;                        // P / sigma^2
    NetworkLayout layout;
    int realization_index = 0;

    std::complex<double> gain(int m, int l) const {
        return gains[static_cast<std::size_t>(m) * num_users + l];
    }
    std::span<const std::complex<double>> ap_row(int m) const {
        return {gains.data() + static_cast<std::size_t>(m) * num_users,
                static_cast<std::size_t>(num_users)};
    }
    // Channel of user l across all APs.
    std::vector<std::complex<double>> user_column(int l) const;
};

// M AP positions followed by L user positions, coordinates i.i.d. uniform
// on [0, side].
NetworkLayout sample_layout(const SimConfig& config, RandomStream& stream);

// Fixed offset of the propagation model: the Hata-COST231 closed form
// (medium city correction) evaluated at carrier frequency and antenna
// heights, in dB.
double hata_cost231_offset_db(const SimConfig& config);

// Three-slope pathloss in dB (positive loss). Slope exponents 0 / 2 / 3.5
// below d0, between d0 and d1, and above d1; continuous at both
// breakpoints. Distances are clamped below 1 m. Negative distance throws.
double pathloss_db(double d_m, const SimConfig& config);

// Thermal noise power over the configured bandwidth including the noise
// figure, in watts.
double noise_power_w(const SimConfig& config);

// g_ml = sqrt(PL_ml * S_ml) * h_ml with log-normal shadowing
// S_ml = 10^(sigma_sh * z_ml / 10) and Rayleigh fading h_ml ~ CN(0,1).
// Draw order: for each (m, l) in row-major order, one shadowing normal
// then one fading complex normal.
ChannelRealization sample_channel(const NetworkLayout& layout, const SimConfig& config,
                                  RandomStream& stream, int realization_index = 0);

// Deterministic assembly from explicit shadowing/fading draws; the test
// hook behind sample_channel. z and h are row-major M x L.
ChannelRealization assemble_channel(const NetworkLayout& layout, const SimConfig& config,
                                    std::span<const double> z,
                                    std::span<const std::complex<double>> h,
                                    int realization_index = 0);

} // namespace cfsim
