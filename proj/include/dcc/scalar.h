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

#ifndef DCC_SCALAR_H
#define DCC_SCALAR_H

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

namespace dcc {

/// Truncated Laurent series in a formal parameter eps with rational
/// coefficients: eps^lo * (c[0] + c[1] eps + ...), known up to (but not
/// including) order lo + c.size().
///
/// Used to take exact limits d -> d0 of rational functions of d at the
/// dimensions where some Weingarten denominators vanish.
class Series {
   public:
    static constexpr int kTerms = 10;

    Series() : lo_(kTerms) {}
    Series(const mpq_class &v) : lo_(0), c_(kTerms) {
        c_[0] = v;
        normalize();
    }
    Series(long v) : Series(mpq_class(v)) {}
    static Series epsilon() {
        Series s(1);
        s.lo_ = 1;
        return s;
    }

    int lo() const { return lo_; }
    int precision() const { return lo_ + (int)c_.size(); }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of eps^order (zero below lo).
    mpq_class coef(int order) const {
        if (order >= precision()) throw std::domain_error("Series: coefficient beyond precision");
        if (order < lo_) return 0;
        return c_[order - lo_];
    }
    /// Value of the series at eps = 0; throws if a pole survives.
    mpq_class at_zero() const {
        if (precision() <= 0) throw std::domain_error("Series: precision exhausted");
        if (c_.empty() || lo_ > 0) return 0;
        if (lo_ < 0) throw std::domain_error("Series: pole at eps = 0");
        return c_[0];
    }

    friend Series operator+(const Series &a, const Series &b) {
        Series r;
        int p = std::min(a.precision(), b.precision());
        int lo = std::min(a.lo_, b.lo_);
        r.lo_ = lo;
        if (p <= lo) {
            r.lo_ = p;
            return r;
        }
        r.c_.assign(p - lo, 0);
        for (int o = lo; o < p; o++) {
            if (o >= a.lo_ && o - a.lo_ < (int)a.c_.size()) r.c_[o - lo] += a.c_[o - a.lo_];
            if (o >= b.lo_ && o - b.lo_ < (int)b.c_.size()) r.c_[o - lo] += b.c_[o - b.lo_];
        }
        r.normalize();
        return r;
    }
    Series operator-() const {
        Series r = *this;
        for (auto &v : r.c_) v = -v;
        return r;
    }
    friend Series operator-(const Series &a, const Series &b) { return a + (-b); }
    friend Series operator*(const Series &a, const Series &b) {
        Series r;
        if (a.c_.empty() || b.c_.empty()) {
            // For a zero operand lo_ is its precision, so the bound is additive.
            r.lo_ = a.lo_ + b.lo_;
            return r;
        }
        int n = (int)std::min(a.c_.size(), b.c_.size());
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(n, 0);
        for (int i = 0; i < n; i++) {
            if (sgn(a.c_[i]) == 0) continue;
            for (int j = 0; i + j < n; j++) {
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.normalize();
        return r;
    }
    friend Series operator/(const Series &a, const Series &b) {
        if (b.c_.empty()) throw std::domain_error("Series: division by zero");
        Series inv;
        int n = (int)b.c_.size();
        inv.lo_ = -b.lo_;
        inv.c_.assign(n, 0);
        mpq_class lead_inv = 1 / b.c_[0];
        inv.c_[0] = lead_inv;
        for (int i = 1; i < n; i++) {
            mpq_class acc = 0;
            for (int j = 1; j <= i; j++) acc += b.c_[j] * inv.c_[i - j];
            inv.c_[i] = -acc * lead_inv;
        }
        return a * inv;
    }
    Series &operator+=(const Series &o) { return *this = *this + o; }
    Series &operator-=(const Series &o) { return *this = *this - o; }
    Series &operator*=(const Series &o) { return *this = *this * o; }

   private:
    void normalize() {
        size_t k = 0;
        while (k < c_.size() && sgn(c_[k]) == 0) k++;
        if (k) {
            c_.erase(c_.begin(), c_.begin() + k);
            lo_ += (int)k;
        }
    }
    int lo_;
    std::vector<mpq_class> c_;
};

inline bool is_zero(const mpq_class &v) { return sgn(v) == 0; }
inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(const Series &v) { return v.is_zero(); }

inline double to_double(const mpq_class &v) { return v.get_d(); }
inline double to_double(double v) { return v; }
inline double to_double(const Series &v) { return v.at_zero().get_d(); }

inline mpq_class to_rational(const mpq_class &v) { return v; }
inline mpq_class to_rational(const Series &v) { return v.at_zero(); }

template <class S>
S scalar_from(const mpq_class &v) {
    if constexpr (std::is_same_v<S, double>) {
        return v.get_d();
    } else {
        return S(v);
    }
}

/// n / d in lowest terms. GMP leaves two-argument constructions as given,
/// and arithmetic on non-canonical values is undefined.
inline mpq_class rational(const mpz_class &n, const mpz_class &d) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

/// Exact power with a non-negative integer exponent.
inline mpq_class pow_q(const mpq_class &base, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

template <class S>
S pow_s(const S &base, unsigned e) {
    S r = scalar_from<S>(mpq_class(1));
    for (unsigned i = 0; i < e; i++) r = r * base;
    return r;
}

}  // namespace dcc

#endif
