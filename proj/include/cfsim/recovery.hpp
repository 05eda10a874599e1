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
#include <vector>

#include "cfsim/cnf.hpp"
#include "cfsim/exactrank.hpp"

namespace cfsim {

// The equations received by the hub, one per AP.
struct EquationSet {
    std::vector<Equation> equations;
    int num_users = 0;

    GaussIntMatrix matrix() const;
};

// A full-rank row subset and the rate of its worst equation.
struct SelectionResult {
    std::vector<int> selected; // AP indices, ascending
    int m_rank = 0;            // = |selected| = rank of the full matrix
    double min_rate = 0.0;     // min rate over selected rows (0 if empty)
    int discarded = 0;         // = M - m_rank
};

// Greedy AP selection: scan equations from worst rate to best and discard
// a row exactly when its removal keeps the rank; survivors attain the
// max-min optimum over all full-rank subsets. Implemented as the
// equivalent best-first independent-row insertion, which needs one exact
// span query per row instead of one rank recomputation per row. Rate ties
// break by AP index.
SelectionResult greedy_select(const EquationSet& eqs);

// Literal worst-first removal scan over full rank recomputations
// (rank_without_row per candidate). Same result as greedy_select; kept as
// the slow reference for testing.
SelectionResult greedy_select_reference(const EquationSet& eqs);

// Optimality oracle: enumerates every row subset of size m_rank with full
// rank and returns one maximizing the minimum rate. Throws
// InfeasibleError when the subset count exceeds the cap.
SelectionResult exhaustive_select(const EquationSet& eqs, std::uint64_t subset_cap = 5'000'000);

enum class BackhaulStrategy {
    ForwardAll,      // every AP forwards; load M * R0
    ForwardSelected, // only selected APs forward; load m_rank * R0
};

double backhaul_load(const SelectionResult& sel, int m_total, double r0,
                     BackhaulStrategy strategy);

} // namespace cfsim
