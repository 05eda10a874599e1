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

#include <vector>

#include "cfsim/channel.hpp"
#include "cfsim/rng.hpp"

namespace cfsim {

// Exclusive user-to-AP allocation for the small-cell baseline.
struct Assignment {
    std::vector<int> ap_of_user; // length L, no AP repeated
};

// Per-user rates under maximum ratio combining of all APs' observations:
// R_l = log2(1 + SNR*||g_l||^4 / (||g_l||^2 + SNR * sum_{i != l} |<g_i, g_l>|^2))
// where g_l is user l's channel across APs.
std::vector<double> mrc_rates(const ChannelRealization& ch);

// Users pick their strongest remaining AP in a uniformly random priority
// order; an AP serves at most one user. Requires M >= L.
Assignment smallcell_assign(const ChannelRealization& ch, RandomStream& stream);

// R_l = log2(1 + SNR*|g_{m_l,l}|^2 / (1 + SNR * sum_{l' != l} |g_{m_l,l'}|^2)).
std::vector<double> smallcell_rates(const ChannelRealization& ch, const Assignment& asg);

// Common per-user rate of the symmetric scenario: the worst entry.
double symmetric_rate(const std::vector<double>& rates);

} // namespace cfsim
