#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frqaoa/pauli.hpp"

namespace frqaoa {

enum class GateKind { H, X, Y, Z, S, Sdg, Rx, Ry, Rz, Rzz, Cnot, Measure, C1 };

enum class Axis { X, Y, Z };

Pauli axis_pauli(Axis a);

std::string kind_name(GateKind k);
GateKind kind_from_name(const std::string& s);

bool is_parametric(GateKind k);   // Rx/Ry/Rz/Rzz
bool is_two_qubit(GateKind k);    // Rzz/Cnot
bool is_single_qubit(GateKind k); // everything else incl. Measure, C1

/// C1 is a composite easy gate produced by frame folding: a single-qubit
/// Clifford (by group index) optionally followed by one axis rotation. It
/// keeps folded cycles at one gate per qubit.
struct Gate {
  GateKind kind;
  std::vector<int> qubits;
  std::optional<double> angle;  // Rx/Ry/Rz/Rzz; for C1 the rotation angle
  int clifford = -1;            // C1 only: index into CliffordGroup
  std::optional<Axis> axis;     // C1 only: rotation axis, present iff angle

  static Gate h(int q) { return {GateKind::H, {q}, {}, -1, {}}; }
  static Gate x(int q) { return {GateKind::X, {q}, {}, -1, {}}; }
  static Gate y(int q) { return {GateKind::Y, {q}, {}, -1, {}}; }
  static Gate z(int q) { return {GateKind::Z, {q}, {}, -1, {}}; }
  static Gate s(int q) { return {GateKind::S, {q}, {}, -1, {}}; }
  static Gate sdg(int q) { return {GateKind::Sdg, {q}, {}, -1, {}}; }
  static Gate rx(int q, double th) { return {GateKind::Rx, {q}, th, -1, {}}; }
  static Gate ry(int q, double th) { return {GateKind::Ry, {q}, th, -1, {}}; }
  static Gate rz(int q, double th) { return {GateKind::Rz, {q}, th, -1, {}}; }
  static Gate rzz(int a, int b, double th) { return {GateKind::Rzz, {a, b}, th, -1, {}}; }
  static Gate cnot(int c, int t) { return {GateKind::Cnot, {c, t}, {}, -1, {}}; }
  static Gate measure(int q) { return {GateKind::Measure, {q}, {}, -1, {}}; }
  static Gate c1(int q, int cliff) { return {GateKind::C1, {q}, {}, cliff, {}}; }
  static Gate c1(int q, int cliff, Axis ax, double th) { return {GateKind::C1, {q}, th, cliff, ax}; }

  bool operator==(const Gate&) const = default;
};

enum class CycleClass { Easy, Hard, Measurement };

std::string cycle_class_name(CycleClass c);
CycleClass cycle_class_from_name(const std::string& s);

struct Cycle {
  CycleClass cls = CycleClass::Easy;
  std::vector<Gate> gates;

  bool operator==(const Cycle&) const = default;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Cycle> cycles;

  bool operator==(const Circuit&) const = default;
};

/// Throw std::invalid_argument naming the offending field on violation.
void validate(const Gate& g, int n_qubits);
void validate(const Cycle& c, int n_qubits);
void validate(const Circuit& c);

int two_qubit_gate_count(const Cycle& c);

/// Gate on `q` within the cycle, or nullptr (at most one by the cycle invariant).
const Gate* gate_on_qubit(const Cycle& c, int q);

}  // namespace frqaoa
