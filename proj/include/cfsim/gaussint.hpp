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

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace cfsim {

// Complex number with integer real and imaginary parts. Kept as exact
// integers; never routed through floating point once constructed.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr bool operator==(const GaussInt&) const = default;

    constexpr bool is_zero() const { return re == 0 && im == 0; }

    constexpr GaussInt operator+(GaussInt o) const { return {re + o.re, im + o.im}; }
    constexpr GaussInt operator-(GaussInt o) const { return {re - o.re, im - o.im}; }
    constexpr GaussInt operator*(GaussInt o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    constexpr GaussInt conj() const { return {re, -im}; }

    // |a|^2 = re^2 + im^2, exact.
    constexpr std::int64_t norm2() const { return re * re + im * im; }
};

// The four Gaussian units {1, -1, i, -i}.
inline constexpr GaussInt kGaussUnits[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

// Integer coefficient vector a, one entry per user.
using CoeffVector = std::vector<GaussInt>;

inline std::complex<double> to_complex(GaussInt a) {
    return {static_cast<double>(a.re), static_cast<double>(a.im)};
}

// Component-wise nearest Gaussian integer. Halves round away from zero,
// deterministically on every platform (llround semantics).
inline GaussInt nearest_gauss(std::complex<double> z) {
    return {std::llround(z.real()), std::llround(z.imag())};
}

inline bool is_zero(const CoeffVector& a) {
    for (const auto& e : a)
        if (!e.is_zero()) return false;
    return true;
}

inline std::int64_t norm2(const CoeffVector& a) {
    std::int64_t s = 0;
    for (const auto& e : a) s += e.norm2();
    return s;
}

inline CoeffVector scale(const CoeffVector& a, GaussInt unit) {
    CoeffVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * unit;
    return out;
}

} // namespace cfsim
