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

#include "cfsim/exactrank.hpp"

#include <algorithm>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cfsim/errors.hpp"

namespace cfsim {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Gaussian integer on arbitrary-precision parts; intermediate Bareiss
// entries are minors of the input and outgrow 64 bits.
struct BigGauss {
    BigInt re, im;

    bool is_zero() const { return re == 0 && im == 0; }
    BigInt norm2() const { return re * re + im * im; }

    BigGauss operator*(const BigGauss& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigGauss operator-(const BigGauss& o) const { return {re - o.re, im - o.im}; }
};

// Exact division in Z[i]; Bareiss guarantees divisibility, so a nonzero
// remainder means the elimination is broken.
BigGauss exact_div(const BigGauss& x, const BigGauss& d) {
    const BigInt n = d.norm2();
    const BigGauss num{x.re * d.re + x.im * d.im, x.im * d.re - x.re * d.im};
    if (num.re % n != 0 || num.im % n != 0)
        throw std::logic_error("exactrank: non-exact division in fraction-free elimination");
    return {num.re / n, num.im / n};
}

int bareiss_rank(std::vector<std::vector<BigGauss>> a) {
    const int m = static_cast<int>(a.size());
    if (m == 0) return 0;
    const int n = static_cast<int>(a[0].size());
    const int steps = std::min(m, n);

    BigGauss prev{1, 0};
    int r = 0;
    while (r < steps) {
        // Full pivoting on the smallest-norm nonzero entry keeps the
        // intermediate minors small.
        int pi = -1, pj = -1;
        BigInt best_norm;
        for (int i = r; i < m; ++i) {
            for (int j = r; j < n; ++j) {
                if (a[i][j].is_zero()) continue;
                const BigInt nn = a[i][j].norm2();
                if (pi < 0 || nn < best_norm) {
                    pi = i;
                    pj = j;
                    best_norm = nn;
                }
            }
        }
        if (pi < 0) break;
        std::swap(a[r], a[pi]);
        if (pj != r)
            for (int i = 0; i < m; ++i) std::swap(a[i][r], a[i][pj]);

        for (int i = r + 1; i < m; ++i) {
            for (int j = r + 1; j < n; ++j)
                a[i][j] = exact_div(a[r][r] * a[i][j] - a[i][r] * a[r][j], prev);
            a[i][r] = BigGauss{};
        }
        prev = a[r][r];
        ++r;
    }
    return r;
}

std::vector<std::vector<BigGauss>> promote(const GaussIntMatrix& a) {
    std::vector<std::vector<BigGauss>> out;
    out.reserve(a.rows.size());
    for (const auto& row : a.rows) {
        if (static_cast<int>(row.size()) != a.cols)
            throw ConfigError("GaussIntMatrix: ragged rows");
        std::vector<BigGauss> r;
        r.reserve(row.size());
        for (const auto& e : row) r.push_back({BigInt(e.re), BigInt(e.im)});
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

GaussIntMatrix GaussIntMatrix::from_rows(std::vector<CoeffVector> r) {
    GaussIntMatrix m;
    m.cols = r.empty() ? 0 : static_cast<int>(r.front().size());
    for (const auto& row : r)
        if (static_cast<int>(row.size()) != m.cols)
            throw ConfigError("GaussIntMatrix: ragged rows");
    m.rows = std::move(r);
    return m;
}

GaussIntMatrix GaussIntMatrix::without_row(int row_index) const {
    if (row_index < 0 || row_index >= num_rows())
        throw ConfigError("GaussIntMatrix: row index out of range");
    GaussIntMatrix out;
    out.cols = cols;
    out.rows.reserve(rows.size() - 1);
    for (int i = 0; i < num_rows(); ++i)
        if (i != row_index) out.rows.push_back(rows[i]);
    return out;
}

int rank(const GaussIntMatrix& a) { return bareiss_rank(promote(a)); }

int rank_without_row(const GaussIntMatrix& a, int row_index) {
    return rank(a.without_row(row_index));
}

// ---------------------------------------------------------------- RowBasis

namespace {

using Rat = boost::multiprecision::cpp_rational;

struct RatC {
    Rat re, im;

    bool is_zero() const { return re == 0 && im == 0; }
};

RatC mul(const RatC& a, const RatC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

RatC reciprocal(const RatC& a) {
    const Rat n = a.re * a.re + a.im * a.im;
    return {a.re / n, -a.im / n};
}

} // namespace

struct RowBasis::Impl {
    int cols = 0;
    std::vector<int> leads;                // ascending
    std::vector<std::vector<RatC>> rows;   // echelon, leading entry == 1

    // Eliminates v against the basis; returns the leading column of the
    // remainder or -1 when v lies in the span.
    int reduce(std::vector<RatC>& v) const {
        for (std::size_t b = 0; b < rows.size(); ++b) {
            const int lc = leads[b];
            if (v[lc].is_zero()) continue;
            const RatC f = v[lc];
            const auto& row = rows[b];
            for (int j = lc; j < cols; ++j) {
                if (row[j].is_zero()) continue;
                const RatC t = mul(f, row[j]);
                v[j].re -= t.re;
                v[j].im -= t.im;
            }
            v[lc] = RatC{}; // exact by construction
        }
        for (int j = 0; j < cols; ++j)
            if (!v[j].is_zero()) return j;
        return -1;
    }

    std::vector<RatC> lift(const CoeffVector& row) const {
        if (static_cast<int>(row.size()) != cols)
            throw ConfigError("RowBasis: row length mismatch");
        std::vector<RatC> v(cols);
        for (int j = 0; j < cols; ++j) v[j] = {Rat(row[j].re), Rat(row[j].im)};
        return v;
    }
};

RowBasis::RowBasis(int cols) : impl_(std::make_unique<Impl>()) { impl_->cols = cols; }
RowBasis::~RowBasis() = default;
RowBasis::RowBasis(RowBasis&&) noexcept = default;
RowBasis& RowBasis::operator=(RowBasis&&) noexcept = default;

bool RowBasis::insert(const CoeffVector& row) {
    auto v = impl_->lift(row);
    const int lead = impl_->reduce(v);
    if (lead < 0) return false;
    const RatC inv = reciprocal(v[lead]);
    for (int j = lead; j < impl_->cols; ++j) v[j] = mul(v[j], inv);
    v[lead] = {Rat(1), Rat(0)};
    const auto pos = std::lower_bound(impl_->leads.begin(), impl_->leads.end(), lead);
    const auto idx = pos - impl_->leads.begin();
    impl_->leads.insert(pos, lead);
    impl_->rows.insert(impl_->rows.begin() + idx, std::move(v));
    return true;
}

bool RowBasis::in_span(const CoeffVector& row) const {
    auto v = impl_->lift(row);
    return impl_->reduce(v) < 0;
}

int RowBasis::rank() const { return static_cast<int>(impl_->rows.size()); }

} // namespace cfsim
