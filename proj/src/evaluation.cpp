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

#include "cfsim/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "cfsim/errors.hpp"

namespace cfsim {

const std::vector<double>& RealizationOutcome::rates(Scheme s) const {
    switch (s) {
        case Scheme::Mrc: return mrc_rates;
        case Scheme::SmallCell: return sc_rates;
        default: return cnf_rates;
    }
}

int RealizationOutcome::n_outage(Scheme s) const {
    switch (s) {
        case Scheme::Mrc: return n_outage_mrc;
        case Scheme::SmallCell: return n_outage_sc;
        default: return n_outage_cnf;
    }
}

int count_outage(std::span<const double> rates, double r0) {
    int n = 0;
    for (double r : rates)
        if (r < r0) ++n;
    return n;
}

double outage_probability(std::span<const RealizationOutcome> outcomes, Scheme scheme) {
    if (outcomes.empty()) throw ConfigError("outage_probability: no outcomes");
    double sum = 0.0;
    for (const auto& o : outcomes) {
        const auto l = static_cast<double>(o.rates(scheme).size());
        sum += o.n_outage(scheme) / l;
    }
    return sum / static_cast<double>(outcomes.size());
}

double per_realization_outage_rate(std::span<const double> sorted_rates, double rho) {
    if (sorted_rates.empty())
        throw ConfigError("per_realization_outage_rate: empty rate list");
    if (rho < 0.0 || rho >= 1.0)
        throw ConfigError("per_realization_outage_rate: rho must be in [0, 1)");
    // Small nudge so an exactly-integer rho*L is not floored down by the
    // representation error of rho.
    const auto k = static_cast<std::size_t>(std::floor(rho * sorted_rates.size() + 1e-9));
    if (k >= sorted_rates.size())
        throw ConfigError("per_realization_outage_rate: floor(rho*L) must be < L");
    return sorted_rates[k];
}

Cdf empirical_cdf(std::vector<double> samples) {
    if (samples.empty()) throw ConfigError("empirical_cdf: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    Cdf cdf;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i + 1 < samples.size() && samples[i + 1] == samples[i]) continue;
        cdf.push_back({samples[i], static_cast<double>(i + 1) / n});
    }
    return cdf;
}

RealizationOutcome evaluate_realization(const ChannelRealization& ch, const EvalConfig& eval,
                                        RandomStream& stream, const SearchOptions& opts) {
    eval.validate();
    const int m_aps = ch.num_aps;
    const int l_users = ch.num_users;

    EquationSet set;
    set.num_users = l_users;
    set.equations.reserve(m_aps);
    for (int m = 0; m < m_aps; ++m)
        set.equations.push_back(best_coeff_search(ch.ap_row(m), ch.snr, opts, m));

    const SelectionResult sel = greedy_select(set);

    RealizationOutcome out;
    out.realization_index = ch.realization_index;
    out.m_rank = sel.m_rank;

    out.cnf_rates.reserve(l_users);
    for (int i : sel.selected) out.cnf_rates.push_back(set.equations[i].rate);
    out.cnf_rates.resize(l_users, 0.0); // rank deficiency counts as zero-rate equations
    std::sort(out.cnf_rates.begin(), out.cnf_rates.end());

    out.mrc_rates = cfsim::mrc_rates(ch);
    std::sort(out.mrc_rates.begin(), out.mrc_rates.end());

    const Assignment asg = smallcell_assign(ch, stream);
    out.sc_rates = smallcell_rates(ch, asg);
    std::sort(out.sc_rates.begin(), out.sc_rates.end());

    out.n_outage_cnf = count_outage(out.cnf_rates, eval.r0);
    out.n_outage_mrc = count_outage(out.mrc_rates, eval.r0);
    out.n_outage_sc = count_outage(out.sc_rates, eval.r0);

    out.backhaul_all = backhaul_load(sel, m_aps, eval.r0, BackhaulStrategy::ForwardAll);
    out.backhaul_selected = backhaul_load(sel, m_aps, eval.r0, BackhaulStrategy::ForwardSelected);
    return out;
}

CampaignStats aggregate(std::span<const RealizationOutcome> outcomes, const EvalConfig& eval,
                        int num_users) {
    if (outcomes.empty()) throw ConfigError("aggregate: no outcomes");
    CampaignStats st;
    st.num_realizations = static_cast<int>(outcomes.size());
    st.num_users = num_users;

    std::vector<double> ranks;
    std::vector<double> outage[3];
    std::vector<double> throughput[3];
    ranks.reserve(outcomes.size());

    int full_rank = 0;
    st.min_m_rank = outcomes.front().m_rank;
    for (const auto& o : outcomes) {
        ranks.push_back(o.m_rank);
        st.min_m_rank = std::min(st.min_m_rank, o.m_rank);
        if (o.m_rank == num_users) ++full_rank;
        for (int s = 0; s < 3; ++s) {
            const auto scheme = static_cast<Scheme>(s);
            outage[s].push_back(o.n_outage(scheme));
            throughput[s].push_back(per_realization_outage_rate(o.rates(scheme), eval.rho));
        }
        st.mean_backhaul_all += o.backhaul_all;
        st.mean_backhaul_selected += o.backhaul_selected;
    }
    st.mean_backhaul_all /= st.num_realizations;
    st.mean_backhaul_selected /= st.num_realizations;
    st.full_rank_fraction = static_cast<double>(full_rank) / st.num_realizations;

    st.rank_cdf = empirical_cdf(std::move(ranks));
    for (int s = 0; s < 3; ++s) {
        st.outage_cdf[s] = empirical_cdf(std::move(outage[s]));
        st.throughput_cdf[s] = empirical_cdf(std::move(throughput[s]));
        st.outage_probability[s] = outage_probability(outcomes, static_cast<Scheme>(s));
    }
    return st;
}

} // namespace cfsim
