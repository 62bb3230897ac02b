// Copyright 2026 The dcc Authors.
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

#ifndef DCC_GROUP_MATRIX_H
#define DCC_GROUP_MATRIX_H

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "dcc/perm4.h"
#include "dcc/scalar.h"

namespace dcc {

template <class S>
using GroupVector = std::array<S, 24>;

/// 24x24 matrix indexed by pairs of S4 elements in canonical order.
template <class S>
struct GroupMatrix {
    std::vector<S> a = std::vector<S>(576, scalar_from<S>(0));

    S &operator()(int i, int j) { return a[i * 24 + j]; }
    const S &operator()(int i, int j) const { return a[i * 24 + j]; }

    static GroupMatrix identity() {
        GroupMatrix r;
        for (int i = 0; i < 24; i++) r(i, i) = scalar_from<S>(1);
        return r;
    }
    /// M(p, q) = f(class(p * q)).
    static GroupMatrix class_function(const std::array<S, kNumClasses> &f) {
        GroupMatrix r;
        const auto &t = s4();
        for (int i = 0; i < 24; i++) {
            for (int j = 0; j < 24; j++) {
                r(i, j) = f[t.cls[t.mul[i][j]]];
            }
        }
        return r;
    }

    GroupMatrix operator*(const GroupMatrix &o) const {
        GroupMatrix r;
        for (int i = 0; i < 24; i++) {
            for (int k = 0; k < 24; k++) {
                const S &v = (*this)(i, k);
                if (is_zero(v)) continue;
                for (int j = 0; j < 24; j++) r(i, j) += v * o(k, j);
            }
        }
        return r;
    }
    GroupVector<S> operator*(const GroupVector<S> &v) const {
        GroupVector<S> r;
        r.fill(scalar_from<S>(0));
        for (int i = 0; i < 24; i++) {
            for (int j = 0; j < 24; j++) r[i] += (*this)(i, j) * v[j];
        }
        return r;
    }
    GroupMatrix operator+(const GroupMatrix &o) const {
        GroupMatrix r;
        for (int i = 0; i < 576; i++) r.a[i] = a[i] + o.a[i];
        return r;
    }
    GroupMatrix operator-(const GroupMatrix &o) const {
        GroupMatrix r;
        for (int i = 0; i < 576; i++) r.a[i] = a[i] - o.a[i];
        return r;
    }
    GroupMatrix scaled(const S &s) const {
        GroupMatrix r;
        for (int i = 0; i < 576; i++) r.a[i] = a[i] * s;
        return r;
    }
    GroupMatrix transpose() const {
        GroupMatrix r;
        for (int i = 0; i < 24; i++)
            for (int j = 0; j < 24; j++) r(i, j) = (*this)(j, i);
        return r;
    }
};

template <class S>
GroupVector<S> zero_vector() {
    GroupVector<S> v;
    v.fill(scalar_from<S>(0));
    return v;
}

template <class S>
GroupVector<S> operator+(const GroupVector<S> &x, const GroupVector<S> &y) {
    GroupVector<S> r;
    for (int i = 0; i < 24; i++) r[i] = x[i] + y[i];
    return r;
}

template <class S>
GroupVector<S> operator-(const GroupVector<S> &x, const GroupVector<S> &y) {
    GroupVector<S> r;
    for (int i = 0; i < 24; i++) r[i] = x[i] - y[i];
    return r;
}

namespace detail {
template <class S>
int pivot_rank(const S &v) {
    if constexpr (std::is_same_v<S, Series>) {
        return v.is_zero() ? 1 << 20 : v.lo();
    } else {
        return is_zero(v) ? 1 << 20 : 0;
    }
}
}  // namespace detail

/// Gauss-Jordan inverse. Throws std::domain_error when singular.
template <class S>
GroupMatrix<S> inverse(GroupMatrix<S> m) {
    GroupMatrix<S> r = GroupMatrix<S>::identity();
    for (int col = 0; col < 24; col++) {
        int best = -1;
        if constexpr (std::is_same_v<S, double>) {
            double mag = 0;
            for (int i = col; i < 24; i++) {
                if (std::abs(m(i, col)) > mag) {
                    mag = std::abs(m(i, col));
                    best = i;
                }
            }
            if (mag < 1e-300) best = -1;
        } else {
            int rank = 1 << 20;
            for (int i = col; i < 24; i++) {
                int pr = detail::pivot_rank(m(i, col));
                if (pr < rank) {
                    rank = pr;
                    best = i;
                }
            }
        }
        if (best < 0) throw std::domain_error("GroupMatrix inverse: singular matrix");
        if (best != col) {
            for (int j = 0; j < 24; j++) {
                std::swap(m(best, j), m(col, j));
                std::swap(r(best, j), r(col, j));
            }
        }
        S inv = scalar_from<S>(1) / m(col, col);
        for (int j = 0; j < 24; j++) {
            m(col, j) = m(col, j) * inv;
            r(col, j) = r(col, j) * inv;
        }
        for (int i = 0; i < 24; i++) {
            if (i == col || is_zero(m(i, col))) continue;
            S f = m(i, col);
            for (int j = 0; j < 24; j++) {
                m(i, j) = m(i, j) - f * m(col, j);
                r(i, j) = r(i, j) - f * r(col, j);
            }
        }
    }
    return r;
}

/// Exact rank by fraction-free elimination over the rationals.
int exact_rank(GroupMatrix<mpq_class> m);

template <class S>
Eigen::MatrixXd to_eigen(const GroupMatrix<S> &m) {
    Eigen::MatrixXd r(24, 24);
    for (int i = 0; i < 24; i++)
        for (int j = 0; j < 24; j++) r(i, j) = to_double(m(i, j));
    return r;
}

template <class S>
GroupMatrix<mpq_class> to_rational_matrix(const GroupMatrix<S> &m) {
    GroupMatrix<mpq_class> r;
    for (int i = 0; i < 576; i++) r.a[i] = to_rational(m.a[i]);
    return r;
}

}  // namespace dcc

#endif
