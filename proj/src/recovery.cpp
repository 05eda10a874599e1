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

#include "cfsim/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cfsim/errors.hpp"

namespace cfsim {

namespace {

// Ascending by (rate, AP index): the deterministic processing order of the
// worst-first scan.
std::vector<int> ascending_order(const EquationSet& eqs) {
    std::vector<int> order(eqs.equations.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Equation& ea = eqs.equations[a];
        const Equation& eb = eqs.equations[b];
        if (ea.rate != eb.rate) return ea.rate < eb.rate;
        if (ea.ap_index != eb.ap_index) return ea.ap_index < eb.ap_index;
        return a < b;
    });
    return order;
}

SelectionResult assemble(const EquationSet& eqs, const std::vector<char>& keep) {
    SelectionResult res;
    double min_rate = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (!keep[i]) continue;
        res.selected.push_back(static_cast<int>(i));
        min_rate = std::min(min_rate, eqs.equations[i].rate);
    }
    res.m_rank = static_cast<int>(res.selected.size());
    res.discarded = static_cast<int>(keep.size()) - res.m_rank;
    res.min_rate = res.selected.empty() ? 0.0 : min_rate;
    return res;
}

void check_shape(const EquationSet& eqs) {
    for (const auto& e : eqs.equations)
        if (static_cast<int>(e.coeffs.size()) != eqs.num_users)
            throw ConfigError("EquationSet: coefficient vector length != num_users");
}

} // namespace

GaussIntMatrix EquationSet::matrix() const {
    std::vector<CoeffVector> rows;
    rows.reserve(equations.size());
    for (const auto& e : equations) rows.push_back(e.coeffs);
    GaussIntMatrix m = GaussIntMatrix::from_rows(std::move(rows));
    m.cols = num_users;
    for (const auto& r : m.rows)
        if (static_cast<int>(r.size()) != num_users)
            throw ConfigError("EquationSet: coefficient vector length != num_users");
    return m;
}

SelectionResult greedy_select(const EquationSet& eqs) {
    check_shape(eqs);
    const auto order = ascending_order(eqs);
    const int m = static_cast<int>(order.size());

    // Worst-first discard of rank-preserving rows is equivalent to
    // best-first insertion of independent rows; the latter needs one span
    // query per row. greedy_select_reference keeps the literal scan.
    RowBasis basis(eqs.num_users);
    std::vector<char> keep(m, 0);
    for (int t = m - 1; t >= 0; --t) {
        const int i = order[t];
        if (!is_zero(eqs.equations[i].coeffs) && basis.insert(eqs.equations[i].coeffs))
            keep[i] = 1;
    }
    return assemble(eqs, keep);
}

SelectionResult greedy_select_reference(const EquationSet& eqs) {
    check_shape(eqs);
    const GaussIntMatrix full = eqs.matrix();
    const int m = full.num_rows();
    const int m_rank = rank(full);
    const auto order = ascending_order(eqs);

    std::vector<char> keep(m, 1);
    int discarded = 0;
    for (int t = 0; t < m && discarded < m - m_rank; ++t) {
        const int i = order[t];
        GaussIntMatrix current;
        current.cols = full.cols;
        for (int j = 0; j < m; ++j)
            if (keep[j] && j != i) current.rows.push_back(full.rows[j]);
        if (rank(current) == m_rank) {
            keep[i] = 0;
            ++discarded;
        }
    }
    return assemble(eqs, keep);
}

SelectionResult exhaustive_select(const EquationSet& eqs, std::uint64_t subset_cap) {
    check_shape(eqs);
    const GaussIntMatrix full = eqs.matrix();
    const int m = full.num_rows();
    const int m_rank = rank(full);
    if (m_rank == 0) return SelectionResult{{}, 0, 0.0, m};

    double subsets = 1.0;
    for (int k = 1; k <= m_rank; ++k) subsets *= static_cast<double>(m - m_rank + k) / k;
    if (subsets > static_cast<double>(subset_cap))
        throw InfeasibleError("exhaustive_select: subset count exceeds cap");

    std::vector<int> comb(m_rank);
    std::iota(comb.begin(), comb.end(), 0);

    SelectionResult best;
    best.m_rank = m_rank;
    best.discarded = m - m_rank;
    bool found = false;

    while (true) {
        GaussIntMatrix sub;
        sub.cols = full.cols;
        double min_rate = std::numeric_limits<double>::infinity();
        for (int idx : comb) {
            sub.rows.push_back(full.rows[idx]);
            min_rate = std::min(min_rate, eqs.equations[idx].rate);
        }
        if ((!found || min_rate > best.min_rate) && rank(sub) == m_rank) {
            best.selected = comb;
            best.min_rate = min_rate;
            found = true;
        }
        // next lexicographic combination
        int i = m_rank - 1;
        while (i >= 0 && comb[i] == m - m_rank + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < m_rank; ++j) comb[j] = comb[j - 1] + 1;
    }
    return best;
}

double backhaul_load(const SelectionResult& sel, int m_total, double r0,
                     BackhaulStrategy strategy) {
    if (r0 < 0.0) throw ConfigError("backhaul_load: r0 must be >= 0");
    return strategy == BackhaulStrategy::ForwardAll ? m_total * r0 : sel.m_rank * r0;
}

} // namespace cfsim
