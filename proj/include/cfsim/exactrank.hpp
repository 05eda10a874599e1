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

#include <memory>
#include <vector>

#include "cfsim/gaussint.hpp"

namespace cfsim {

// Rectangular matrix of Gaussian integers (rows are coefficient vectors).
struct GaussIntMatrix {
    std::vector<CoeffVector> rows;
    int cols = 0;

    int num_rows() const { return static_cast<int>(rows.size()); }

    static GaussIntMatrix from_rows(std::vector<CoeffVector> r);
    GaussIntMatrix without_row(int row_index) const;
};

// Exact rank over the fraction field of the Gaussian integers, computed by
// Bareiss fraction-free elimination on arbitrary-precision integers. No
// floating point is involved; no overflow is possible.
int rank(const GaussIntMatrix& a);

// Rank with one row deleted. Throws ConfigError on a bad index.
int rank_without_row(const GaussIntMatrix& a, int row_index);

// Incremental exact span oracle over the complex rationals. insert()
// reports whether the row enlarged the span; rank() is the number of
// independent rows inserted so far. Same decisions as rank(), amortized
// O(cols^2) exact-arithmetic work per insertion.
class RowBasis {
  public:
    explicit RowBasis(int cols);
    ~RowBasis();
    RowBasis(RowBasis&&) noexcept;
    RowBasis& operator=(RowBasis&&) noexcept;

    bool insert(const CoeffVector& row);
    // Membership test without inserting.
    bool in_span(const CoeffVector& row) const;
    int rank() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace cfsim
