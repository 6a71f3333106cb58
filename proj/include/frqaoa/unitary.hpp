#pragma once

#include <Eigen/Dense>

#include "frqaoa/gate.hpp"

namespace frqaoa {

/// 2x2 (or 4x4 for two-qubit kinds) matrix of the gate. For two-qubit gates
/// the local basis index is (bit of qubits[1]) << 1 | (bit of qubits[0]).
/// MEASURE has no matrix and throws.
Eigen::MatrixXcd gate_matrix(const Gate& g);

/// Gate embedded into the full 2^n dimension.
Eigen::MatrixXcd embed_gate(const Gate& g, int n_qubits);

Eigen::MatrixXcd cycle_unitary(const Cycle& c, int n_qubits);

/// Product of gate matrices in cycle order. Verification oracle, practical
/// only for small n. Throws if the circuit contains MEASURE or exceeds
/// max_qubits.
Eigen::MatrixXcd circuit_unitary(const Circuit& c, int max_qubits = 8);

/// 1 - |tr(A^dag B)| / dim : 0 iff equal up to global phase.
double phase_insensitive_deficit(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace frqaoa
