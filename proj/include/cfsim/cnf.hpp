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
#include <cstdint>
#include <span>
#include <vector>

#include "cfsim/config.hpp"
#include "cfsim/gaussint.hpp"

namespace cfsim {

using Cvec = std::span<const std::complex<double>>;

// Result of pruning far users before the coefficient search.
struct PruneResult {
    std::vector<int> active; // user indices kept, ascending
    double snr_eff = 0.0;    // SNR with pruned users' received power as noise

    int l_eff() const { return static_cast<int>(active.size()); }
};

// One AP's chosen integer equation with its computation rate.
struct Equation {
    int ap_index = 0;
    CoeffVector coeffs;                 // full length L
    double rate = 0.0;                  // bits per channel use, >= 0
    std::complex<double> alpha{0.0, 0.0};
};

// Effective noise power ||alpha*g - a||^2 * P + |alpha|^2 * sigma^2.
double effective_noise_variance(std::complex<double> alpha, Cvec g, const CoeffVector& a,
                                double p, double sigma2);

// MMSE-optimal scaling SNR * g^H a / (1 + SNR * ||g||^2) for a != 0.
std::complex<double> alpha_opt(Cvec g, const CoeffVector& a, double snr);

// Computation rate max(0, log2(1 / (a^H M a))) with
// M = I - SNR/(1 + SNR*||g||^2) * g g^H, evaluated in O(L) without
// forming M.
double computation_rate(Cvec g, const CoeffVector& a, double snr);

// Users whose integer coefficient is forced to zero for every admissible
// scaling (|alpha| <= sqrt(SNR)) are dropped; their received power is
// added to the noise to form snr_eff. snr must equal p / sigma2.
PruneResult prune_users(Cvec g, double snr, double sigma2, double p,
                        PruneCriterion criterion = PruneCriterion::Magnitude);

// Best integer equation for one AP, found by sweeping the scaling factor
// over magnitudes (0, sqrt(snr_eff)] at phase_samples phase offsets in
// [0, pi/2). Candidates are the rounding patterns round(alpha * g)
// restricted to the pruned coordinate set, plus the active unit vectors;
// each candidate is scored by computation_rate on the full channel.
// Falls back to the strongest single-user equation when nothing survives
// pruning.
Equation best_coeff_search(Cvec g, double snr, const SearchOptions& opts = {},
                           int ap_index = 0);

struct BruteForceOptions {
    std::uint64_t max_candidates = 400'000'000; // enumeration cap
};

// Exhaustive maximizer of the computation rate over all nonzero a with
// ||a||^2 <= 1 + SNR*||g||^2 (rates vanish beyond that bound). Exact up
// to a Gaussian unit. Throws InfeasibleError when the candidate set
// exceeds the cap.
Equation brute_force_best(Cvec g, double snr, const BruteForceOptions& opts = {},
                          int ap_index = 0);

} // namespace cfsim
