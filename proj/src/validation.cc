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

#include "dcc/validation.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "dcc/closed_forms.h"
#include "dcc/enumeration.h"
#include "dcc/rational_io.h"
#include "dcc/simulate.h"

namespace dcc {

namespace {

Eigen::MatrixXcd random_operator(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0, 1);
    Eigen::MatrixXcd o(dim, dim);
    for (int i = 0; i < dim; i++)
        for (int j = 0; j < dim; j++) o(i, j) = cd(g(rng), g(rng));
    return o;
}

CheckResult timed(const std::string &name, const std::function<std::pair<bool, std::string>()> &f) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    try {
        auto [ok, detail] = f();
        r.pass = ok;
        r.detail = detail;
    } catch (const std::exception &e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string sci(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

}  // namespace

double enumeration_deviation(int N, const std::vector<int> &ks, const std::vector<Angle> &thetas, int num_ops,
                             uint64_t seed) {
    CliffordEnumerator group(N);
    std::mt19937_64 rng(seed);
    int D = 1 << (4 * N);
    double dev = 0;
    std::vector<Eigen::MatrixXcd> ops;
    for (int i = 0; i < num_ops; i++) ops.push_back(random_operator(D, rng));
    for (const auto &th : thetas) {
        XiSystem sys = build_xi_system(th, N);
        Eigen::Matrix2cd K = phase_gate(th.radians);
        for (const auto &O : ops) {
            auto tv = trace_vector(O, N);
            for (int k : ks) {
                Eigen::MatrixXcd a = reconstruct_dense(fold_channel_doped(sys, tv, k), N);
                Eigen::MatrixXcd b = exact_group_channel(group, k, K, O);
                dev = std::max(dev, (a - b).cwiseAbs().maxCoeff());
            }
        }
    }
    return dev;
}

SpectrumCheck check_xi_spectrum(const Angle &theta, int N) {
    XiSystem sys = build_xi_system(theta, N);
    SpectrumCheck r;
    auto [fp, fm] = f_pm_theta(theta, sys.d.get_d());
    std::vector<double> want(18, 0.0);
    want.push_back(fp);
    want.push_back(fm);
    for (int i = 0; i < 4; i++) want.push_back((fp + fm) / 2);
    std::sort(want.begin(), want.end());
    auto got = xi_spectrum(sys);
    for (size_t i = 0; i < want.size(); i++) r.eigen_dev = std::max(r.eigen_dev, std::abs(got[i] - want[i]));
    r.symmetry_dev = (sys.xi - sys.xi.transpose()).cwiseAbs().maxCoeff();
    r.rank = xi_rank(sys);
    return r;
}

bool kpos_invariant(const Angle &theta, int N) {
    XiSystem ref = build_xi_system(theta, N, XiMode::Continued, 0);
    for (int q = 1; q < N; q++) {
        XiSystem s = build_xi_system(theta, N, XiMode::Continued, q);
        if (ref.exact) {
            if (!(s.xi_q->a == ref.xi_q->a) || !(s.lambda_q->a == ref.lambda_q->a)) return false;
        } else if (s.xi != ref.xi || s.lambda != ref.lambda) {
            return false;
        }
    }
    return true;
}

std::vector<CheckResult> run_validation(const std::string &level, uint64_t seed) {
    if (level != "fast" && level != "full") throw std::invalid_argument("validation level must be fast or full");
    std::vector<CheckResult> out;
    const Angle t4 = Angle::pi_fraction(1, 4), t3 = Angle::pi_fraction(1, 3), t6 = Angle::pi_fraction(1, 6);

    out.push_back(timed("s4.tables", [] {
        check_character_table();
        const auto &t = s4();
        double worst = 0;
        for (int m : {2, 3}) {
            for (int a = 0; a < 24; a++) {
                Eigen::MatrixXcd ta = perm_operator(Perm4::from_index(a), m);
                double tr = std::pow(m, t.cycles[a]);
                worst = std::max(worst, std::abs(ta.trace() - cd(tr)));
                if (m == 3) continue;
                for (int b = 0; b < 24; b++) {
                    Eigen::MatrixXcd prod = ta * perm_operator(Perm4::from_index(b), m);
                    worst = std::max(worst, (prod - perm_operator(Perm4::from_index(t.mul[a][b]), m)).norm());
                }
            }
        }
        return std::pair{worst < 1e-12, "max deviation " + sci(worst)};
    }));

    out.push_back(timed("weingarten.gram", [] {
        bool ok = true;
        for (int d : {4, 5, 8, 16}) {
            mpq_class dq(d);
            auto m = unitary_weingarten(dq) * gram_matrix(dq);
            const auto &t = s4();
            for (int p = 0; p < 24; p++)
                for (int s = 0; s < 24; s++) ok = ok && m(p, s) == (t.mul[p][s] == t.identity ? 1 : 0);
        }
        return std::pair{ok, std::string("W G = delta(pi sigma, e) at d = 4, 5, 8, 16")};
    }));

    out.push_back(timed("oracle.n1", [&] {
        double dev = enumeration_deviation(1, {0, 1, 2, 3}, {t4, t3}, 5, seed);
        return std::pair{dev <= 1e-10, "max deviation " + sci(dev)};
    }));

    out.push_back(timed("engine.spectrum", [&] {
        double worst = 0, sym = 0;
        bool rank_ok = true;
        for (int N : {2, 3, 4})
            for (const auto &th : {t4, t3, t6}) {
                auto r = check_xi_spectrum(th, N);
                worst = std::max(worst, r.eigen_dev);
                sym = std::max(sym, r.symmetry_dev);
                rank_ok = rank_ok && r.rank == 6;
            }
        return std::pair{worst <= 1e-10 && sym <= 1e-12 && rank_ok,
                         "eigen " + sci(worst) + " symmetry " + sci(sym) + (rank_ok ? " rank 6" : " rank mismatch")};
    }));

    out.push_back(timed("engine.convergence", [&] {
        bool ok = true;
        std::string detail;
        for (int N : {2, 3}) {
            auto r = verify_convergence_structure(t4, N);
            ok = ok && r.ok();
            detail += "d=" + std::to_string(1 << N) + (r.ok() ? " ok " : " FAILED ");
        }
        return std::pair{ok, detail};
    }));

    out.push_back(timed("engine.kpos", [&] {
        bool ok = kpos_invariant(t4, 3) && kpos_invariant(t3, 4);
        return std::pair{ok, std::string("Xi, Lambda identical for every K position")};
    }));

    out.push_back(timed("closed_forms.web", [] {
        bool ok = true;
        for (int d : {4, 16, 64}) {
            mpq_class dq(d);
            ok = ok && otoc8_doped(dq, 0) == otoc8_clifford(dq);
            ok = ok && purity_fluct(dq, 0, -1, StateClass::StabilizerZero) ==
                           (dq - 1) * (dq - 1) / ((dq + 1) * (dq + 1) * (dq + 2));
            ok = ok && purity_second_moment(dq, 0, -1) == (5 * dq + 1) / ((dq + 1) * (dq + 2));
            for (int k : {0, 1, 3, 7}) {
                mpq_class m = purity_average(exact_sqrt(dq), exact_sqrt(dq));
                ok = ok && purity_second_moment(dq, k, -1) - m * m == purity_fluct(dq, k, -1, StateClass::StabilizerZero);
                ok = ok && purity_fluct_general(exact_sqrt(dq), exact_sqrt(dq), k, -1, 1 / dq) ==
                               purity_fluct(dq, k, -1, StateClass::StabilizerZero);
            }
        }
        ok = ok && c_q_coefficients(-1, 4) == std::pair<mpq_class, mpq_class>(3, 2);
        ok = ok && state_channel(mpq_class(1, 4), 4, -1, 0) == std::pair<mpq_class, mpq_class>(mpq_class(1, 40), mpq_class(1, 40));
        ok = ok && state_channel(mpq_class(1, 4), 4, -1, 1) == std::pair<mpq_class, mpq_class>(mpq_class(1, 75), mpq_class(2, 75));
        return std::pair{ok, std::string("exact identities at d = 4, 16, 64")};
    }));

    out.push_back(timed("pauli.trQ", [] {
        bool ok = true;
        for (int N = 1; N <= 6; N++) {
            Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(1 << N);
            psi[0] = 1;
            ok = ok && trace_psi4_Q_zero(N) == 1 / dimension_of(N);
            ok = ok && std::abs(trace_psi4_Q_dense(psi) - 1.0 / (1 << N)) < 1e-12;
        }
        return std::pair{ok, std::string("|0...0> gives 1/d for N <= 6")};
    }));

    if (level == "full") {
        out.push_back(timed("oracle.n2", [&] {
            double dev = enumeration_deviation(2, {0, 1, 2}, {t4, t3}, 3, seed);
            return std::pair{dev <= 1e-9, "max deviation " + sci(dev)};
        }));
        out.push_back(timed("mc.otoc8", [&] {
            DopedCircuitSpec spec;
            spec.N = 4;
            spec.seed = seed;
            auto r = mc_otoc8(spec, default_otoc_paulis(4), 20000);
            double z = r.z_against(otoc8_clifford(16).get_d());
            return std::pair{std::abs(z) <= 4, "k=0 z=" + sci(z) + " against -1/(d^2-1)"};
        }));
        out.push_back(timed("mc.purity", [&] {
            DopedCircuitSpec spec;
            spec.N = 4;
            spec.seed = seed;
            auto r = mc_purity_fluct(spec, 2, StateSpec{}, 100000);
            double zv = r.variance.z_against(purity_fluct(16, 0, -1, StateClass::StabilizerZero).get_d());
            double zm = r.mean.z_against(purity_average(4, 4).get_d());
            return std::pair{std::abs(zv) <= 4 && std::abs(zm) <= 4, "k=0 variance z=" + sci(zv) + " mean z=" + sci(zm)};
        }));
    }
    return out;
}

}  // namespace dcc
