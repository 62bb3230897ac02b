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

#ifndef DCC_SIMULATE_H
#define DCC_SIMULATE_H

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dcc/clifford.h"
#include "dcc/pauli.h"

namespace dcc {

struct EstimatorResult {
    double mean = 0;
    double stderr_ = 0;
    size_t samples = 0;
    uint64_t seed = 0;
    std::vector<double> batch_means;

    double z_against(double reference) const;
};

/// Seed of sample `index` under a master seed (splitmix64 finalizer).
uint64_t sample_seed(uint64_t master, uint64_t index);

/// Worker threads: DCC_THREADS if set, otherwise the hardware count.
int default_threads();

/// Evaluates f(sample_rng) for every sample with per-sample generators and
/// returns the per-sample values in index order.
std::vector<double> run_samples(size_t samples, uint64_t seed, const std::function<double(std::mt19937_64 &)> &f,
                                int threads = 0);

/// Mean with a batch-means standard error (min(samples, 100) batches).
EstimatorResult batch_mean(const std::vector<double> &values, uint64_t seed);

/// Unbiased variance with a delete-one-batch jackknife standard error.
EstimatorResult jackknife_variance(const std::vector<double> &values, uint64_t seed);

EstimatorResult mc_estimate(size_t samples, uint64_t seed, const std::function<double(std::mt19937_64 &)> &f,
                            int threads = 0);

/// d^-1 tr(X A_1^dag Y^dag) with X = A_1 B_1^U ... A_m B_m^U and
/// Y = B_1^U A_2 B_2^U ... A_m B_m^U, B^U = U B U^dag.
double otoc4m_value(const Eigen::MatrixXcd &U, const std::vector<PauliString> &A, const std::vector<PauliString> &B);

/// Default Paulis X_0, X_1, X_2, X_3 on N qubits as (A, B, C, D).
std::array<PauliString, 4> default_otoc_paulis(int N);

/// Real part of the per-sample 4m-point OTOC over doped circuits. N <= 6.
EstimatorResult mc_otoc4m(const DopedCircuitSpec &spec, int m, const std::vector<PauliString> &A,
                          const std::vector<PauliString> &B, size_t samples, int threads = 0);

/// The 8-point OTOC d^-1 tr(A B_U C D_U A D_U C B_U); A..D must be
/// non-identity single-qubit Paulis on distinct qubits.
EstimatorResult mc_otoc8(const DopedCircuitSpec &spec, const std::array<PauliString, 4> &abcd, size_t samples,
                         int threads = 0);

struct StateSpec {
    enum Kind { Zero, RandomProduct, Dense };
    Kind kind = Zero;
    Eigen::VectorXcd psi;
};

/// Pur(psi_A) with subsystem A on the n_a lowest qubits.
double subsystem_purity(const Eigen::VectorXcd &psi, int n_a);

struct PurityEstimate {
    EstimatorResult variance;
    EstimatorResult mean;
};

PurityEstimate mc_purity_fluct(const DopedCircuitSpec &spec, int n_a, const StateSpec &state, size_t samples,
                               int threads = 0);

}  // namespace dcc

#endif
