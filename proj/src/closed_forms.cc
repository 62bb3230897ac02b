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

#include "dcc/closed_forms.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dcc/engine.h"
#include "dcc/pauli.h"

namespace dcc {

namespace {

void require_no_otoc_pole(const mpq_class &d) {
    if (d == 1 || d == 2 || d == 3 || d == -1 || d == -2 || d == -3) {
        throw std::domain_error("otoc8: pole at d in {1, 2, 3}");
    }
}

std::pair<mpq_class, mpq_class> t_gate_f(const mpq_class &d) { return f_pm_exact(-1, d); }

int log2_exact(const mpq_class &d) {
    if (d.get_den() != 1 || d < 1) throw std::domain_error("dimension must be a power of two");
    mpz_class n = d.get_num();
    int e = 0;
    while (n > 1) {
        if (n % 2 != 0) throw std::domain_error("dimension must be a power of two");
        n /= 2;
        e++;
    }
    return e;
}

}  // namespace

mpq_class otoc8_haar(const mpq_class &d) {
    require_no_otoc_pole(d);
    mpq_class d2 = d * d;
    return -(d2 + 36) / ((d2 - 1) * (d2 - 4) * (d2 - 9));
}

mpq_class otoc8_doped(const mpq_class &d, long k) {
    if (k < 0) throw std::invalid_argument("otoc8_doped: k must be non-negative");
    require_no_otoc_pole(d);
    auto [fp, fm] = t_gate_f(d);
    mpq_class av = (fp + fm) / 2;
    mpq_class d2 = d * d;
    mpq_class ap = -d2 * (d - 4) / (6 * (d2 - 1) * (d - 2) * (d - 3));
    mpq_class am = d2 * (d + 4) / (6 * (d2 - 1) * (d + 2) * (d + 3));
    mpq_class a0 = -2 * d2 / (3 * (d2 - 1) * (d2 - 4));
    return otoc8_haar(d) + ap * pow_q(fp, k) + am * pow_q(fm, k) + a0 * pow_q(av, k);
}

mpq_class otoc8_clifford(const mpq_class &d) {
    require_no_otoc_pole(d);
    return -1 / (d * d - 1);
}

mpq_class otoc8_haar_printed(const mpq_class &d) {
    require_no_otoc_pole(d);
    mpq_class d2 = d * d;
    return 5 * d2 / ((d2 - 1) * (d2 - 4) * (d2 - 9));
}

mpq_class otoc8_clifford_printed(const mpq_class &d) {
    require_no_otoc_pole(d);
    mpq_class d2 = d * d;
    return d2 / (d2 * d2 - 5 * d2 + 4);
}

mpq_class otoc8_doped_printed(const mpq_class &d, long k) {
    if (k < 0) throw std::invalid_argument("otoc8_doped_printed: k must be non-negative");
    require_no_otoc_pole(d);
    auto [fp, fm] = t_gate_f(d);
    mpq_class d2 = d * d;
    return otoc8_haar_printed(d) - pow_q(fm, k) * d * (d2 + 4 * d + 6) / (6 * (d2 - 1) * (d + 2) * (d + 3)) +
           pow_q(fp, k) * d * (d2 - 4 * d + 6) / (6 * (d2 - 1) * (d - 2) * (d - 3)) +
           pow_q((fp + fm) / 2, k) * 4 * d2 / (3 * (d2 - 1) * (d2 - 4));
}

bool otoc8_is_formal(const mpq_class &d) { return d < 16; }

mpq_class delta_otoc(const mpq_class &d, long k) { return abs(otoc8_doped(d, k) - otoc8_haar(d)); }

mpq_class purity_average(const mpq_class &dA, const mpq_class &dB) {
    if (dA < 1 || dB < 1) throw std::domain_error("purity_average: dimensions must be >= 1");
    return (dA + dB) / (dA * dB + 1);
}

StateClass parse_state_class(const std::string &s) {
    if (s == "stabilizer" || s == "stabilizer-zero" || s == "zero") return StateClass::StabilizerZero;
    if (s == "random-product" || s == "product") return StateClass::RandomProduct;
    if (s == "custom") return StateClass::Custom;
    throw std::invalid_argument("unknown state class: " + s);
}

const char *state_class_name(StateClass s) {
    switch (s) {
        case StateClass::StabilizerZero: return "stabilizer";
        case StateClass::RandomProduct: return "random-product";
        default: return "custom";
    }
}

mpq_class state_trQ(StateClass s, const mpq_class &d, const mpq_class &custom) {
    switch (s) {
        case StateClass::StabilizerZero: return 1 / d;
        case StateClass::RandomProduct: return pow_q(mpq_class(2, 5), log2_exact(d));
        default: return custom;
    }
}

mpq_class exact_sqrt(const mpq_class &v) {
    if (v < 0) throw std::domain_error("exact_sqrt: negative");
    mpz_class n = sqrt(v.get_num()), m = sqrt(v.get_den());
    if (n * n != v.get_num() || m * m != v.get_den()) throw std::domain_error("exact_sqrt: not a perfect square");
    return rational(n, m);
}

mpq_class purity_second_moment_general(const mpq_class &dA, const mpq_class &dB, long k, const mpq_class &cos4,
                                       const mpq_class &trQ) {
    // <Pur^2> = a_k tr(Q Pi_sym T_A) + b_k tr(Pi_sym T_A), with T_A the double
    // swap (12)(34) acting on subsystem A only.
    const auto &t = s4();
    int sw = Perm4::from_cycles("(12)(34)").index();
    mpq_class trQPT = 0, trPT = 0;
    for (int s = 0; s < 24; s++) {
        int a = t.mul[s][sw];
        trQPT += q_poly(t.cls[a], dA) * q_poly(t.cls[s], dB);
        trPT += pow_s(dA, t.cycles[a]) * pow_s(dB, t.cycles[s]);
    }
    trQPT /= 24;
    trPT /= 24;
    auto [a, b] = state_channel(trQ, dA * dB, cos4, k);
    return a * trQPT + b * trPT;
}

mpq_class purity_fluct_general(const mpq_class &dA, const mpq_class &dB, long k, const mpq_class &cos4,
                               const mpq_class &trQ) {
    mpq_class m = purity_average(dA, dB);
    return purity_second_moment_general(dA, dB, k, cos4, trQ) - m * m;
}

mpq_class purity_fluct(const mpq_class &d, long k, const mpq_class &cos4, StateClass state,
                       const mpq_class &custom_trQ) {
    if (k < 0) throw std::invalid_argument("purity_fluct: k must be non-negative");
    mpq_class dA = exact_sqrt(d);
    if (state == StateClass::StabilizerZero) {
        auto [fp, fm] = f_pm_exact(cos4, d);
        return (d - 1) * (d - 1) / ((d + 1) * (d + 1) * (d + 2) * (d + 3)) * (2 + (d + 1) * pow_q(fm, k));
    }
    return purity_fluct_general(dA, dA, k, cos4, state_trQ(state, d, custom_trQ));
}

mpq_class purity_fluct_haar(const mpq_class &d) {
    return 2 * (d - 1) * (d - 1) / ((d + 1) * (d + 1) * (d + 2) * (d + 3));
}

mpq_class purity_fluct_clifford(const mpq_class &d, const mpq_class &trQ) {
    return (d - 1) * (d * (d + 1) * trQ - 2) / ((d + 1) * (d + 1) * (d + 2));
}

mpq_class purity_second_moment(const mpq_class &d, long k, const mpq_class &cos4) {
    exact_sqrt(d);
    auto [fp, fm] = f_pm_exact(cos4, d);
    return (2 * (2 * d * d + 9 * d + 1) + (d - 1) * (d - 1) * pow_q(fm, k)) / ((d + 1) * (d + 2) * (d + 3));
}

mpq_class purity_fluct_asymmetric(const mpq_class &d, const mpq_class &dA, long k, const mpq_class &cos4,
                                  const mpq_class &trQ) {
    if (dA * dA > d) throw std::domain_error("purity_fluct_asymmetric: needs d_A^2 <= d");
    auto [fp, fm] = f_pm_exact(cos4, d);
    mpq_class a2 = dA * dA;
    mpq_class first = 2 * (d * d - a2) * (a2 - 1) / ((d + 1) * (d + 1) * (d + 2) * (d + 3) * a2);
    mpq_class second = (d * d - a2) * (a2 - 1) * pow_q(fm, k) * (d * (d + 3) * trQ - 4) /
                       ((d - 1) * (d + 1) * (d + 2) * (d + 3) * a2);
    return first + second;
}

mpq_class purity_fluct_asymmetric_haar(const mpq_class &d, const mpq_class &dA) {
    if (dA * dA > d) throw std::domain_error("purity_fluct_asymmetric: needs d_A^2 <= d");
    mpq_class a2 = dA * dA;
    return 2 * (d * d - a2) * (a2 - 1) / ((d + 1) * (d + 1) * (d + 2) * (d + 3) * a2);
}

double purity_fluct_short_printed(double d, long k, double cos4) {
    double x = std::pow(d, 2 - std::log2(5.0));
    double den = 8 * (d * d - 1);
    double fm = (7 * d * d - 3 * d + d * (d + 3) * cos4 - 8) / den;
    return 2 * (d - 1) * (d - 1) / ((d + 1) * (d + 1) * (d + 2) * (d + 3)) +
           (d - 1) * (x * (d - 3) - 4) * std::pow(fm, (double)k) / ((d + 1) * (d + 2) * (d + 3));
}

mpq_class delta_purity(const mpq_class &d, long k, const mpq_class &cos4) {
    return abs(purity_fluct(d, k, cos4, StateClass::StabilizerZero) - purity_fluct_haar(d));
}

long threshold_k(const ThresholdQuery &q) {
    if (q.ratio <= 0) throw std::invalid_argument("threshold_k: ratio must be positive");
    if (q.probe == Probe::Otoc8) {
        mpq_class h = abs(otoc8_haar(q.d));
        for (long k = 0; k <= q.k_max; k++) {
            if (delta_otoc(q.d, k) <= q.ratio * h) return k;
        }
        return -1;
    }
    mpq_class h = purity_fluct_haar(q.d);
    for (long k = 0; k <= q.k_max; k++) {
        if (delta_purity(q.d, k, q.cos4) <= q.ratio * h) return k;
    }
    return -1;
}

AffineFit fit_affine(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_affine: need >= 2 points");
    double n = (double)x.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    AffineFit f;
    f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    f.intercept = (sy - f.slope * sx) / n;
    for (size_t i = 0; i < x.size(); i++) {
        f.max_residual = std::max(f.max_residual, std::abs(y[i] - (f.slope * x[i] + f.intercept)));
    }
    return f;
}

}  // namespace dcc
