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
#include <vector>

#include "cfsim/cnf.hpp"
#include "cfsim/gaussint.hpp"
#include "cfsim/recovery.hpp"
#include "cfsim/rng.hpp"

namespace cfsim::testsupport {

inline std::vector<std::complex<double>> random_channel_vector(RandomStream& rng, int len,
                                                               double scale = 1.0) {
    std::vector<std::complex<double>> g(len);
    for (auto& v : g) v = scale * rng.complex_normal();
    return g;
}

inline CoeffVector random_coeffs(RandomStream& rng, int len, int max_abs, bool ensure_nonzero) {
    CoeffVector a(len);
    const auto draw = [&] {
        return static_cast<std::int64_t>(rng.uniform_index(2 * max_abs + 1)) - max_abs;
    };
    do {
        for (auto& e : a) e = GaussInt{draw(), draw()};
    } while (ensure_nonzero && is_zero(a));
    return a;
}

inline std::vector<CoeffVector> random_matrix_rows(RandomStream& rng, int rows, int cols,
                                                   int max_abs) {
    std::vector<CoeffVector> out;
    out.reserve(rows);
    for (int i = 0; i < rows; ++i) out.push_back(random_coeffs(rng, cols, max_abs, false));
    return out;
}

// Equation sets with a mix of realistic (searched) and synthetic rows.
inline EquationSet random_equation_set(RandomStream& rng, int num_aps, int num_users) {
    EquationSet set;
    set.num_users = num_users;
    const double snr = std::pow(10.0, rng.uniform(0.0, 2.0));
    for (int m = 0; m < num_aps; ++m) {
        if (rng.uniform01() < 0.5) {
            const auto g = random_channel_vector(rng, num_users);
            set.equations.push_back(best_coeff_search(g, snr, {}, m));
        } else {
            Equation e;
            e.ap_index = m;
            e.coeffs = random_coeffs(rng, num_users, 2, rng.uniform01() < 0.9);
            e.rate = rng.uniform(0.0, 4.0);
            set.equations.push_back(std::move(e));
        }
    }
    return set;
}

} // namespace cfsim::testsupport
