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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cfsim/gaussint.hpp"
#include "cfsim/rng.hpp"

using namespace cfsim;

TEST_CASE("gaussian integer arithmetic") {
    const GaussInt a{2, -3}, b{-1, 4};
    CHECK(a + b == GaussInt{1, 1});
    CHECK(a - b == GaussInt{3, -7});
    CHECK(a * b == GaussInt{10, 11}); // (2-3i)(-1+4i) = -2+8i+3i+12 = 10+11i
    CHECK(a.conj() == GaussInt{2, 3});
    CHECK(a.norm2() == 13);
    CHECK(GaussInt{0, 0}.is_zero());
    CHECK_FALSE(a.is_zero());
}

TEST_CASE("unit multiplication preserves the norm") {
    const GaussInt a{3, -5};
    for (const auto& u : kGaussUnits) CHECK((a * u).norm2() == a.norm2());
}

TEST_CASE("nearest Gaussian integer rounds halves away from zero") {
    CHECK(nearest_gauss({0.4, -0.4}) == GaussInt{0, 0});
    CHECK(nearest_gauss({0.5, -0.5}) == GaussInt{1, -1});
    CHECK(nearest_gauss({1.5, -2.5}) == GaussInt{2, -3});
    CHECK(nearest_gauss({-0.49999999, 0.50000001}) == GaussInt{0, 1});
    // odd symmetry
    RandomStream rng(11);
    for (int i = 0; i < 1000; ++i) {
        const std::complex<double> z{rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0)};
        const GaussInt p = nearest_gauss(z);
        const GaussInt q = nearest_gauss(-z);
        CHECK(p.re == -q.re);
        CHECK(p.im == -q.im);
    }
}

TEST_CASE("streams with the same seed are bit-identical") {
    RandomStream a(123), b(123);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
    RandomStream c = RandomStream::substream(9, 4, 1);
    RandomStream d = RandomStream::substream(9, 4, 1);
    for (int i = 0; i < 100; ++i) CHECK(c.uniform01() == d.uniform01());
}

TEST_CASE("substreams differ across index and domain") {
    RandomStream a = RandomStream::substream(9, 4, 0);
    RandomStream b = RandomStream::substream(9, 5, 0);
    RandomStream c = RandomStream::substream(9, 4, 1);
    CHECK(a.next_u64() != b.next_u64());
    RandomStream a2 = RandomStream::substream(9, 4, 0);
    CHECK(a2.next_u64() != c.next_u64());
}

TEST_CASE("uniform01 stays in [0, 1)") {
    RandomStream rng(7);
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform01();
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
}

TEST_CASE("uniform_index covers [0, n) evenly") {
    RandomStream rng(5);
    int counts[7] = {0};
    for (int i = 0; i < 70000; ++i) ++counts[rng.uniform_index(7)];
    for (int k = 0; k < 7; ++k) CHECK(std::abs(counts[k] - 10000) < 400);
}

TEST_CASE("normal and complex normal moments") {
    RandomStream rng(42);
    double sum = 0.0, sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sum2 += z * z;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.01));

    double p = 0.0;
    std::complex<double> mean{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const auto z = rng.complex_normal();
        p += std::norm(z);
        mean += z;
    }
    CHECK(p / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(mean) / n < 0.01);
}
