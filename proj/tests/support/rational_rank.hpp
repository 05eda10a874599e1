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

// Test-only rank oracle: Gauss-Jordan over exact complex rationals,
// deliberately a different elimination (column-major scan, pivot
// normalization, full column clearing) from the library's fraction-free
// Bareiss path.

#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cfsim/gaussint.hpp"

namespace cfsim::testsupport {

using Rational = boost::multiprecision::cpp_rational;

struct Q {
    Rational re{0}, im{0};
    bool zero() const { return re == 0 && im == 0; }
};

inline Q qmul(const Q& a, const Q& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline Q qsub(const Q& a, const Q& b) { return {a.re - b.re, a.im - b.im}; }

inline Q qinv(const Q& a) {
    const Rational n = a.re * a.re + a.im * a.im;
    return {a.re / n, -a.im / n};
}

inline int rational_rank(const std::vector<CoeffVector>& rows, int cols) {
    std::vector<std::vector<Q>> a;
    for (const auto& r : rows) {
        std::vector<Q> v(cols);
        for (int j = 0; j < cols; ++j) v[j] = {Rational(r[j].re), Rational(r[j].im)};
        a.push_back(std::move(v));
    }
    const int m = static_cast<int>(a.size());
    int rank = 0;
    for (int col = 0; col < cols && rank < m; ++col) {
        int pivot = -1;
        for (int i = rank; i < m; ++i)
            if (!a[i][col].zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        const Q inv = qinv(a[rank][col]);
        for (int j = col; j < cols; ++j) a[rank][j] = qmul(a[rank][j], inv);
        for (int i = 0; i < m; ++i) {
            if (i == rank || a[i][col].zero()) continue;
            const Q f = a[i][col];
            for (int j = col; j < cols; ++j) a[i][j] = qsub(a[i][j], qmul(f, a[rank][j]));
        }
        ++rank;
    }
    return rank;
}

} // namespace cfsim::testsupport
