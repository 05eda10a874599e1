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

#include <span>
#include <vector>

#include "cfsim/baselines.hpp"
#include "cfsim/channel.hpp"
#include "cfsim/recovery.hpp"

namespace cfsim {

enum class Scheme { Cnf, Mrc, SmallCell };

// Everything measured on one channel realization. Rate lists are sorted
// ascending and have length exactly L; the C&F list is the selected
// equations' rates padded with zeros when the matrix is rank deficient.
struct RealizationOutcome {
    int realization_index = 0;
    int m_rank = 0;
    std::vector<double> cnf_rates;
    std::vector<double> mrc_rates;
    std::vector<double> sc_rates;
    int n_outage_cnf = 0;
    int n_outage_mrc = 0;
    int n_outage_sc = 0;
    double backhaul_all = 0.0;      // M * R0
    double backhaul_selected = 0.0; // m_rank * R0

    const std::vector<double>& rates(Scheme s) const;
    int n_outage(Scheme s) const;
};

struct CdfPoint {
    double value = 0.0;
    double fraction = 0.0; // P(X <= value)
};
using Cdf = std::vector<CdfPoint>;

// Campaign-level aggregates: empirical CDFs and outage statistics.
struct CampaignStats {
    int num_realizations = 0;
    int num_users = 0;
    Cdf rank_cdf;
    Cdf outage_cdf[3];     // indexed by Scheme
    Cdf throughput_cdf[3]; // per-user throughput at the configured rho
    double outage_probability[3] = {0.0, 0.0, 0.0};
    double mean_backhaul_all = 0.0;
    double mean_backhaul_selected = 0.0;
    int min_m_rank = 0;
    double full_rank_fraction = 0.0;
};

// Number of entries strictly below r0.
int count_outage(std::span<const double> rates, double r0);

// Mean of n_outage / L across realizations.
double outage_probability(std::span<const RealizationOutcome> outcomes, Scheme scheme);

// The (floor(rho*L) + 1)-th smallest rate: the per-user throughput when a
// fraction rho of users (or equations) is descheduled. rates must be
// sorted ascending; floor(rho*L) >= L throws.
double per_realization_outage_rate(std::span<const double> sorted_rates, double rho);

// Sorted (value, fraction <= value) pairs, one per distinct sample.
Cdf empirical_cdf(std::vector<double> samples);

// Runs the C&F pipeline (per-AP search, greedy selection) and both
// baselines on one realization. The stream feeds only the small-cell
// priority order.
RealizationOutcome evaluate_realization(const ChannelRealization& ch, const EvalConfig& eval,
                                        RandomStream& stream, const SearchOptions& opts = {});

// Index-order fold of per-realization outcomes into campaign statistics.
CampaignStats aggregate(std::span<const RealizationOutcome> outcomes, const EvalConfig& eval,
                        int num_users);

} // namespace cfsim
