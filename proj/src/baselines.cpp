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

#include "cfsim/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cfsim/errors.hpp"

namespace cfsim {

std::vector<double> mrc_rates(const ChannelRealization& ch) {
    const int m_aps = ch.num_aps;
    const int l_users = ch.num_users;
    if (m_aps < 1) throw ConfigError("mrc_rates: need at least one AP");

    // Pairwise inner products <g_i, g_l> = sum_m g_mi * conj(g_ml) of the
    // per-user channels across APs.
    std::vector<std::complex<double>> cross(static_cast<std::size_t>(l_users) * l_users);
    for (int i = 0; i < l_users; ++i) {
        for (int l = i; l < l_users; ++l) {
            std::complex<double> s{0.0, 0.0};
            for (int m = 0; m < m_aps; ++m) s += ch.gain(m, i) * std::conj(ch.gain(m, l));
            cross[static_cast<std::size_t>(i) * l_users + l] = s;
            cross[static_cast<std::size_t>(l) * l_users + i] = std::conj(s);
        }
    }

    std::vector<double> rates(l_users);
    for (int l = 0; l < l_users; ++l) {
        const double nl = cross[static_cast<std::size_t>(l) * l_users + l].real();
        if (nl == 0.0) {
            rates[l] = 0.0;
            continue;
        }
        double interference = 0.0;
        for (int i = 0; i < l_users; ++i)
            if (i != l) interference += std::norm(cross[static_cast<std::size_t>(i) * l_users + l]);
        rates[l] = std::log2(1.0 + ch.snr * nl * nl / (nl + ch.snr * interference));
    }
    return rates;
}

Assignment smallcell_assign(const ChannelRealization& ch, RandomStream& stream) {
    const int m_aps = ch.num_aps;
    const int l_users = ch.num_users;
    if (m_aps < l_users)
        throw ConfigError("smallcell_assign: num_aps must be >= num_users");

    // Uniformly random user priority order.
    std::vector<int> priority(l_users);
    std::iota(priority.begin(), priority.end(), 0);
    for (int i = l_users - 1; i > 0; --i) {
        const auto j = static_cast<int>(stream.uniform_index(static_cast<std::uint64_t>(i) + 1));
        std::swap(priority[i], priority[j]);
    }

    Assignment asg;
    asg.ap_of_user.assign(l_users, -1);
    std::vector<char> taken(m_aps, 0);
    for (int l : priority) {
        int best = -1;
        double best_mag = -1.0;
        for (int m = 0; m < m_aps; ++m) {
            if (taken[m]) continue;
            const double mag = std::abs(ch.gain(m, l));
            if (mag > best_mag) {
                best_mag = mag;
                best = m;
            }
        }
        taken[best] = 1;
        asg.ap_of_user[l] = best;
    }
    return asg;
}

std::vector<double> smallcell_rates(const ChannelRealization& ch, const Assignment& asg) {
    const int l_users = ch.num_users;
    if (static_cast<int>(asg.ap_of_user.size()) != l_users)
        throw ConfigError("smallcell_rates: assignment length != num_users");
    std::vector<char> seen(ch.num_aps, 0);
    for (int m : asg.ap_of_user) {
        if (m < 0 || m >= ch.num_aps) throw ConfigError("smallcell_rates: AP index out of range");
        if (seen[m]) throw ConfigError("smallcell_rates: AP assigned twice");
        seen[m] = 1;
    }

    std::vector<double> rates(l_users);
    for (int l = 0; l < l_users; ++l) {
        const int m = asg.ap_of_user[l];
        double interference = 0.0;
        for (int i = 0; i < l_users; ++i)
            if (i != l) interference += std::norm(ch.gain(m, i));
        const double num = ch.snr * std::norm(ch.gain(m, l));
        rates[l] = std::log2(1.0 + num / (1.0 + ch.snr * interference));
    }
    return rates;
}

double symmetric_rate(const std::vector<double>& rates) {
    if (rates.empty()) throw ConfigError("symmetric_rate: empty rate list");
    return *std::min_element(rates.begin(), rates.end());
}

} // namespace cfsim
