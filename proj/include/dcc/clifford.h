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

#ifndef DCC_CLIFFORD_H
#define DCC_CLIFFORD_H

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dcc/pauli.h"

namespace dcc {

enum class GateType : uint8_t { H, S, Sdg, CX, SWAP, X, Y, Z, Phase };

struct Gate {
    GateType type;
    int q0 = 0;
    int q1 = -1;
    double theta = 0;  // only for Phase
};

using Circuit = std::vector<Gate>;

/// Conjugates a Hermitian Pauli string in place: P -> G P G^dag.
/// Phase gates other than S are rejected.
void conjugate(PauliString &p, const Gate &g);

/// Images of X_q and Z_q under conjugation by a Clifford circuit.
class Tableau {
   public:
    explicit Tableau(int n);
    static Tableau from_circuit(int n, const Circuit &c);

    int num_qubits() const { return n_; }
    void apply(const Gate &g);
    const PauliString &x_image(int q) const { return xs_[q]; }
    const PauliString &z_image(int q) const { return zs_[q]; }
    /// Image of an arbitrary Pauli string.
    PauliString operator()(const PauliString &p) const;
    /// Images satisfy the canonical commutation relations.
    bool is_symplectic() const;
    bool operator==(const Tableau &o) const = default;

   private:
    int n_;
    std::vector<PauliString> xs_, zs_;
};

/// Uniformly random element of the N-qubit Clifford group modulo phase,
/// returned as a gate sequence over {H, S, Sdg, CX, SWAP, X, Z}.
Circuit sample_clifford(int N, std::mt19937_64 &rng);

enum class Placement { UniformRandom, Fixed };

struct DopedCircuitSpec {
    int N = 1;
    int k = 0;
    double theta = 0.7853981633974483;
    uint64_t seed = 0;
    Placement placement = Placement::UniformRandom;
    int fixed_qubit = 0;
};

/// C_k K ... K C_1 K C_0 in time order C_0 first.
Circuit build_doped_circuit(const DopedCircuitSpec &spec, std::mt19937_64 &rng);

/// Dense unitary of a circuit on N <= 6 qubits.
Eigen::MatrixXcd dense_unitary(const Circuit &c, int N);

/// Applies a circuit to a state vector in place (N <= 24).
void apply_to_state(const Circuit &c, Eigen::VectorXcd &psi);
void apply_gate(const Gate &g, std::complex<double> *amp, size_t dim);

/// Haar-random unitary from the QR decomposition of a Ginibre matrix.
Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64 &rng);

}  // namespace dcc

#endif
