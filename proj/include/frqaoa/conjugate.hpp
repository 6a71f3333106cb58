#pragma once

#include <stdexcept>
#include <vector>

#include "frqaoa/clifford.hpp"
#include "frqaoa/gate.hpp"
#include "frqaoa/pauli.hpp"

namespace frqaoa {

/// Raised when a Clifford frame conjugated through a hard cycle does not
/// factorize into single-qubit corrections; callers fall back to Pauli frames.
class NonLocalCorrection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PauliConjugation {
  PauliString p_out;
  int angle_sign;  // g(theta) p = p_out g(angle_sign * theta)
};

/// Conjugate p (restricted to g's qubits, ops[k] acting on g.qubits[k])
/// through g: g(theta) * p == p_out * g(angle_sign * theta) as operators.
/// Clifford kinds use stabilizer conjugation (angle_sign = +1); rotations use
/// the commute/anticommute rule against their axis. MEASURE/C1 unsupported.
PauliConjugation conjugate_pauli_through_gate(const Gate& g, const PauliString& p);

struct CyclePush {
  PauliString exit;                  // full-width correction frame
  std::vector<int> gate_angle_signs; // aligned with cycle.gates
};

/// Push a full-width entry frame through a hard cycle:
/// cycle(angles) * entry == exit * cycle(signed angles).
CyclePush conjugate_pauli_through_cycle(const Cycle& c, const PauliString& entry);

/// Correction frame (Clifford indices, one per qubit) with
/// cycle * frame == correction * cycle exactly. Precondition: CNOT-only hard
/// cycle. Throws NonLocalCorrection when the conjugation does not factorize.
std::vector<int> conjugate_clifford_through_cycle(const Cycle& c, const std::vector<int>& frame);

}  // namespace frqaoa
