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

#include "dcc/simulate.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace dcc {

namespace {

using cd = std::complex<double>;

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

size_t num_batches(size_t n) { return std::min<size_t>(n, 100); }

// Pairwise summation keeps the reduction independent of thread layout.
double pairwise_sum(const double *v, size_t n) {
    if (n <= 16) {
        double s = 0;
        for (size_t i = 0; i < n; i++) s += v[i];
        return s;
    }
    size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

std::pair<size_t, size_t> batch_range(size_t b, size_t nb, size_t n) { return {b * n / nb, (b + 1) * n / nb}; }

void check_disjoint_single(const std::array<PauliString, 4> &p, int N) {
    uint64_t used = 0;
    for (const auto &s : p) {
        if ((int)s.size() != N) throw std::invalid_argument("otoc8: Pauli length must equal N");
        if (!s.is_hermitian()) throw std::invalid_argument("otoc8: Paulis must be Hermitian");
        uint64_t sup = s.support();
        if (sup == 0) throw std::invalid_argument("otoc8: identity Pauli rejected");
        if (sup & (sup - 1)) throw std::invalid_argument("otoc8: Paulis must be single-qubit");
        if (used & sup) throw std::invalid_argument("otoc8: Paulis must act on distinct qubits");
        used |= sup;
    }
}

}  // namespace

double EstimatorResult::z_against(double reference) const {
    if (stderr_ == 0) return mean == reference ? 0 : INFINITY;
    return (mean - reference) / stderr_;
}

uint64_t sample_seed(uint64_t master, uint64_t index) { return splitmix64(splitmix64(master) ^ splitmix64(~index)); }

int default_threads() {
    if (const char *e = std::getenv("DCC_THREADS")) {
        int t = std::atoi(e);
        if (t > 0) return t;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? (int)h : 1;
}

std::vector<double> run_samples(size_t samples, uint64_t seed, const std::function<double(std::mt19937_64 &)> &f,
                                int threads) {
    if (threads <= 0) threads = default_threads();
    threads = (int)std::min<size_t>((size_t)threads, std::max<size_t>(samples, 1));
    std::vector<double> out(samples);
    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; i++) {
            std::mt19937_64 rng(sample_seed(seed, i));
            out[i] = f(rng);
        }
    };
    if (threads == 1) {
        work(0, samples);
        return out;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; t++) {
        auto [lo, hi] = batch_range(t, threads, samples);
        pool.emplace_back(work, lo, hi);
    }
    for (auto &th : pool) th.join();
    return out;
}

EstimatorResult batch_mean(const std::vector<double> &v, uint64_t seed) {
    if (v.empty()) throw std::invalid_argument("estimator: no samples");
    EstimatorResult r;
    r.samples = v.size();
    r.seed = seed;
    r.mean = pairwise_sum(v.data(), v.size()) / (double)v.size();
    size_t nb = num_batches(v.size());
    for (size_t b = 0; b < nb; b++) {
        auto [lo, hi] = batch_range(b, nb, v.size());
        r.batch_means.push_back(pairwise_sum(v.data() + lo, hi - lo) / (double)(hi - lo));
    }
    if (nb > 1) {
        double s = 0;
        for (double m : r.batch_means) s += (m - r.mean) * (m - r.mean);
        r.stderr_ = std::sqrt(s / (double)(nb - 1) / (double)nb);
    }
    return r;
}

EstimatorResult jackknife_variance(const std::vector<double> &v, uint64_t seed) {
    if (v.size() < 2) throw std::invalid_argument("variance estimator: need at least 2 samples");
    EstimatorResult r;
    r.samples = v.size();
    r.seed = seed;
    // Center on the mean first so the sums of squares do not cancel.
    double mu = pairwise_sum(v.data(), v.size()) / (double)v.size();
    std::vector<double> c(v.size()), c2(v.size());
    for (size_t i = 0; i < v.size(); i++) {
        c[i] = v[i] - mu;
        c2[i] = c[i] * c[i];
    }
    double s1 = pairwise_sum(c.data(), c.size()), s2 = pairwise_sum(c2.data(), c2.size());
    auto var = [](double a, double b, double n) { return (b - a * a / n) / (n - 1); };
    double n = (double)v.size();
    r.mean = var(s1, s2, n);
    size_t nb = num_batches(v.size());
    if (nb < 2 || v.size() < nb + 2) return r;
    std::vector<double> loo(nb);
    double avg = 0;
    for (size_t b = 0; b < nb; b++) {
        auto [lo, hi] = batch_range(b, nb, v.size());
        double b1 = pairwise_sum(c.data() + lo, hi - lo), b2 = pairwise_sum(c2.data() + lo, hi - lo);
        loo[b] = var(s1 - b1, s2 - b2, n - (double)(hi - lo));
        r.batch_means.push_back(var(b1, b2, (double)(hi - lo)));
        avg += loo[b];
    }
    avg /= (double)nb;
    double s = 0;
    for (double x : loo) s += (x - avg) * (x - avg);
    r.stderr_ = std::sqrt(s * (double)(nb - 1) / (double)nb);
    return r;
}

EstimatorResult mc_estimate(size_t samples, uint64_t seed, const std::function<double(std::mt19937_64 &)> &f,
                            int threads) {
    return batch_mean(run_samples(samples, seed, f, threads), seed);
}

double otoc4m_value(const Eigen::MatrixXcd &U, const std::vector<PauliString> &A, const std::vector<PauliString> &B) {
    if (A.size() != B.size() || A.size() < 2) throw std::invalid_argument("otoc4m: need m >= 2 pairs");
    Eigen::MatrixXcd X = A[0].dense(), Y;
    for (size_t i = 0; i < A.size(); i++) {
        if (i > 0) {
            X = X * A[i].dense();
            Y = Y * A[i].dense();
        }
        Eigen::MatrixXcd bu = U * B[i].dense() * U.adjoint();
        X = X * bu;
        Y = i == 0 ? bu : Eigen::MatrixXcd(Y * bu);
    }
    Eigen::MatrixXcd a1 = A[0].dense().adjoint();
    cd tr = (X * a1 * Y.adjoint()).trace();
    return tr.real() / (double)U.rows();
}

std::array<PauliString, 4> default_otoc_paulis(int N) {
    if (N < 4) throw std::invalid_argument("default OTOC Paulis need N >= 4");
    std::array<PauliString, 4> p;
    for (int i = 0; i < 4; i++) {
        p[i] = PauliString(N);
        p[i].x[i] = 1;
    }
    return p;
}

EstimatorResult mc_otoc4m(const DopedCircuitSpec &spec, int m, const std::vector<PauliString> &A,
                          const std::vector<PauliString> &B, size_t samples, int threads) {
    if (m < 2) throw std::invalid_argument("otoc4m: m must be >= 2");
    if ((int)A.size() != m || (int)B.size() != m) throw std::invalid_argument("otoc4m: need m operators per list");
    if (spec.N > 6) throw std::length_error("otoc4m: dense evaluation needs N <= 6");
    if (samples == 0) throw std::invalid_argument("otoc4m: samples must be positive");
    for (const auto *list : {&A, &B}) {
        for (const auto &p : *list) {
            if ((int)p.size() != spec.N) throw std::invalid_argument("otoc4m: Pauli length must equal N");
            uint64_t s = p.support();
            if (s & (s - 1)) throw std::invalid_argument("otoc4m: operators must be single-qubit Paulis or identity");
        }
    }
    auto f = [&](std::mt19937_64 &rng) {
        Circuit c = build_doped_circuit(spec, rng);
        return otoc4m_value(dense_unitary(c, spec.N), A, B);
    };
    return mc_estimate(samples, spec.seed, f, threads);
}

EstimatorResult mc_otoc8(const DopedCircuitSpec &spec, const std::array<PauliString, 4> &abcd, size_t samples,
                         int threads) {
    check_disjoint_single(abcd, spec.N);
    return mc_otoc4m(spec, 2, {abcd[0], abcd[2]}, {abcd[1], abcd[3]}, samples, threads);
}

double subsystem_purity(const Eigen::VectorXcd &psi, int n_a) {
    Eigen::Index da = Eigen::Index{1} << n_a;
    if (n_a < 0 || da > psi.size()) throw std::invalid_argument("purity: subsystem larger than system");
    Eigen::Index db = psi.size() / da;
    Eigen::Map<const Eigen::MatrixXcd> M(psi.data(), da, db);
    Eigen::MatrixXcd rho = M * M.adjoint();
    return rho.squaredNorm();
}

PurityEstimate mc_purity_fluct(const DopedCircuitSpec &spec, int n_a, const StateSpec &state, size_t samples,
                               int threads) {
    if (n_a < 0 || n_a > spec.N) throw std::invalid_argument("purity: need 0 <= N_A <= N");
    if (spec.N > 24) throw std::length_error("purity: statevector needs N <= 24");
    if (samples < 2) throw std::invalid_argument("purity: need at least 2 samples");
    Eigen::Index dim = Eigen::Index{1} << spec.N;
    if (state.kind == StateSpec::Dense) {
        if (state.psi.size() != dim) throw std::invalid_argument("purity: state size mismatch");
        if (std::abs(state.psi.norm() - 1) > 1e-10) throw std::invalid_argument("purity: state not normalized");
    }
    auto f = [&](std::mt19937_64 &rng) {
        Eigen::VectorXcd psi;
        if (state.kind == StateSpec::Dense) {
            psi = state.psi;
        } else if (state.kind == StateSpec::RandomProduct) {
            psi = product_state(random_product_bloch(spec.N, rng));
        } else {
            psi = Eigen::VectorXcd::Zero(dim);
            psi[0] = 1;
        }
        apply_to_state(build_doped_circuit(spec, rng), psi);
        return subsystem_purity(psi, n_a);
    };
    auto values = run_samples(samples, spec.seed, f, threads);
    return {jackknife_variance(values, spec.seed), batch_mean(values, spec.seed)};
}

}  // namespace dcc
