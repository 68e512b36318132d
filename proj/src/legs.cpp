// Copyright 2026 The mmd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmd/legs.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmd {

LegTable::LegTable(std::vector<Index> dims, std::vector<int> legs) {
    const int n = static_cast<int>(dims.size());
    std::vector<bool> selected(static_cast<size_t>(n), false);
    for (int l : legs) {
        if (l < 0 || l >= n) throw std::invalid_argument("LegTable: leg index out of range");
        if (selected[static_cast<size_t>(l)]) throw std::invalid_argument("LegTable: duplicate leg");
        selected[static_cast<size_t>(l)] = true;
    }
    std::vector<Index> strides(static_cast<size_t>(n));
    Index s = 1;
    for (int i = n - 1; i >= 0; --i) {
        strides[static_cast<size_t>(i)] = s;
        s *= dims[static_cast<size_t>(i)];
    }
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (!selected[static_cast<size_t>(i)]) rest.push_back(i);

    for (int l : legs) sub_dim_ *= dims[static_cast<size_t>(l)];
    for (int l : rest) rest_dim_ *= dims[static_cast<size_t>(l)];

    sub_offsets_.resize(static_cast<size_t>(sub_dim_));
    for (Index idx = 0; idx < sub_dim_; ++idx) {
        Index rem = idx;
        Index off = 0;
        for (int k = static_cast<int>(legs.size()) - 1; k >= 0; --k) {
            Index d = dims[static_cast<size_t>(legs[static_cast<size_t>(k)])];
            off += (rem % d) * strides[static_cast<size_t>(legs[static_cast<size_t>(k)])];
            rem /= d;
        }
        sub_offsets_[static_cast<size_t>(idx)] = off;
    }
    rest_offsets_.resize(static_cast<size_t>(rest_dim_));
    for (Index idx = 0; idx < rest_dim_; ++idx) {
        Index rem = idx;
        Index off = 0;
        for (int k = static_cast<int>(rest.size()) - 1; k >= 0; --k) {
            Index d = dims[static_cast<size_t>(rest[static_cast<size_t>(k)])];
            off += (rem % d) * strides[static_cast<size_t>(rest[static_cast<size_t>(k)])];
            rem /= d;
        }
        rest_offsets_[static_cast<size_t>(idx)] = off;
    }
}

Mat embed_on_legs(const Mat& x, const std::vector<int>& legs, const std::vector<Index>& dims) {
    LegTable t(dims, legs);
    if (x.rows() != t.sub_dim() || x.cols() != t.sub_dim())
        throw std::invalid_argument("embed_on_legs: operator does not match selected legs");
    Mat out = Mat::Zero(t.total_dim(), t.total_dim());
    for (Index i = 0; i < t.sub_dim(); ++i)
        for (Index j = 0; j < t.sub_dim(); ++j) {
            if (x(i, j) == cplx(0, 0)) continue;
            for (Index r = 0; r < t.rest_dim(); ++r) out(t.flat(i, r), t.flat(j, r)) = x(i, j);
        }
    return out;
}

Vec apply_on_legs(const Mat& x, const Vec& v, const std::vector<int>& legs, const std::vector<Index>& dims) {
    LegTable t(dims, legs);
    if (x.rows() != t.sub_dim() || x.cols() != t.sub_dim())
        throw std::invalid_argument("apply_on_legs: operator does not match selected legs");
    if (v.size() != t.total_dim()) throw std::invalid_argument("apply_on_legs: state dimension mismatch");
    Vec out(v.size());
    Vec slice(t.sub_dim());
    for (Index r = 0; r < t.rest_dim(); ++r) {
        for (Index i = 0; i < t.sub_dim(); ++i) slice(i) = v(t.flat(i, r));
        Vec res = x * slice;
        for (Index i = 0; i < t.sub_dim(); ++i) out(t.flat(i, r)) = res(i);
    }
    return out;
}

Mat partial_trace_keep(const Mat& rho, const std::vector<int>& keep, const std::vector<Index>& dims) {
    LegTable t(dims, keep);
    if (rho.rows() != t.total_dim() || rho.cols() != t.total_dim())
        throw std::invalid_argument("partial_trace_keep: dimension mismatch");
    Mat out = Mat::Zero(t.sub_dim(), t.sub_dim());
    for (Index i = 0; i < t.sub_dim(); ++i)
        for (Index j = 0; j < t.sub_dim(); ++j)
            for (Index r = 0; r < t.rest_dim(); ++r) out(i, j) += rho(t.flat(i, r), t.flat(j, r));
    return out;
}

Mat pure_partial_trace(const Vec& v, const std::vector<int>& keep, const std::vector<Index>& dims) {
    LegTable t(dims, keep);
    if (v.size() != t.total_dim()) throw std::invalid_argument("pure_partial_trace: dimension mismatch");
    Mat out = Mat::Zero(t.sub_dim(), t.sub_dim());
    for (Index r = 0; r < t.rest_dim(); ++r)
        for (Index i = 0; i < t.sub_dim(); ++i) {
            cplx vi = v(t.flat(i, r));
            if (vi == cplx(0, 0)) continue;
            for (Index j = 0; j < t.sub_dim(); ++j) out(i, j) += vi * std::conj(v(t.flat(j, r)));
        }
    return out;
}

}  // namespace mmd
