#include "frqaoa/gate.hpp"

#include <sstream>
#include <stdexcept>

#include "frqaoa/clifford.hpp"

namespace frqaoa {

Pauli axis_pauli(Axis a) {
  switch (a) {
    case Axis::X: return Pauli::X;
    case Axis::Y: return Pauli::Y;
    case Axis::Z: return Pauli::Z;
  }
  throw std::logic_error("bad axis");
}

std::string kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::Rx: return "RX";
    case GateKind::Ry: return "RY";
    case GateKind::Rz: return "RZ";
    case GateKind::Rzz: return "RZZ";
    case GateKind::Cnot: return "CNOT";
    case GateKind::Measure: return "MEASURE";
    case GateKind::C1: return "C1";
  }
  return "?";
}

GateKind kind_from_name(const std::string& s) {
  if (s == "H") return GateKind::H;
  if (s == "X") return GateKind::X;
  if (s == "Y") return GateKind::Y;
  if (s == "Z") return GateKind::Z;
  if (s == "S") return GateKind::S;
  if (s == "SDG") return GateKind::Sdg;
  if (s == "RX") return GateKind::Rx;
  if (s == "RY") return GateKind::Ry;
  if (s == "RZ") return GateKind::Rz;
  if (s == "RZZ") return GateKind::Rzz;
  if (s == "CNOT") return GateKind::Cnot;
  if (s == "MEASURE") return GateKind::Measure;
  if (s == "C1") return GateKind::C1;
  throw std::invalid_argument("unknown gate kind: " + s);
}

bool is_parametric(GateKind k) {
  return k == GateKind::Rx || k == GateKind::Ry || k == GateKind::Rz || k == GateKind::Rzz;
}

bool is_two_qubit(GateKind k) { return k == GateKind::Rzz || k == GateKind::Cnot; }

bool is_single_qubit(GateKind k) { return !is_two_qubit(k); }

std::string cycle_class_name(CycleClass c) {
  switch (c) {
    case CycleClass::Easy: return "easy";
    case CycleClass::Hard: return "hard";
    case CycleClass::Measurement: return "measurement";
  }
  return "?";
}

CycleClass cycle_class_from_name(const std::string& s) {
  if (s == "easy") return CycleClass::Easy;
  if (s == "hard") return CycleClass::Hard;
  if (s == "measurement") return CycleClass::Measurement;
  throw std::invalid_argument("unknown cycle class: " + s);
}

void validate(const Gate& g, int n_qubits) {
  const std::size_t arity = is_two_qubit(g.kind) ? 2 : 1;
  if (g.qubits.size() != arity)
    throw std::invalid_argument(kind_name(g.kind) + " gate must act on " + std::to_string(arity) +
                                " qubit(s), got " + std::to_string(g.qubits.size()));
  for (int q : g.qubits)
    if (q < 0 || q >= n_qubits)
      throw std::invalid_argument("gate qubit " + std::to_string(q) + " out of range [0, " +
                                  std::to_string(n_qubits) + ")");
  if (arity == 2 && g.qubits[0] == g.qubits[1])
    throw std::invalid_argument(kind_name(g.kind) + " gate qubits must be distinct");

  if (g.kind == GateKind::C1) {
    if (g.clifford < 0 || g.clifford >= CliffordGroup::size)
      throw std::invalid_argument("C1 clifford index out of range [0, 24)");
    if (g.angle.has_value() != g.axis.has_value())
      throw std::invalid_argument("C1 rotation needs both axis and angle (or neither)");
  } else {
    if (g.clifford != -1) throw std::invalid_argument("clifford index only valid on C1 gates");
    if (g.axis.has_value()) throw std::invalid_argument("axis only valid on C1 gates");
    if (is_parametric(g.kind) != g.angle.has_value())
      throw std::invalid_argument("angle present iff gate kind is parametric, violated by " +
                                  kind_name(g.kind));
  }
}

void validate(const Cycle& c, int n_qubits) {
  std::vector<bool> used(n_qubits, false);
  for (const Gate& g : c.gates) {
    validate(g, n_qubits);
    for (int q : g.qubits) {
      if (used[q])
        throw std::invalid_argument("qubit " + std::to_string(q) +
                                    " appears in more than one gate of a cycle");
      used[q] = true;
    }
    switch (c.cls) {
      case CycleClass::Hard:
        if (!is_two_qubit(g.kind))
          throw std::invalid_argument("hard cycles contain only two-qubit gates, found " +
                                      kind_name(g.kind));
        break;
      case CycleClass::Measurement:
        if (g.kind != GateKind::Measure)
          throw std::invalid_argument("measurement cycles contain only MEASURE, found " +
                                      kind_name(g.kind));
        break;
      case CycleClass::Easy:
        if (is_two_qubit(g.kind) || g.kind == GateKind::Measure)
          throw std::invalid_argument("easy cycles contain only single-qubit unitaries, found " +
                                      kind_name(g.kind));
        break;
    }
  }
}

void validate(const Circuit& c) {
  if (c.n_qubits <= 0) throw std::invalid_argument("circuit n_qubits must be positive");
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    validate(c.cycles[i], c.n_qubits);
    if (c.cycles[i].cls == CycleClass::Measurement && i + 1 != c.cycles.size())
      throw std::invalid_argument("measurement cycle must be last (cycle " + std::to_string(i) +
                                  ")");
  }
}

int two_qubit_gate_count(const Cycle& c) {
  int n = 0;
  for (const Gate& g : c.gates) n += is_two_qubit(g.kind) ? 1 : 0;
  return n;
}

const Gate* gate_on_qubit(const Cycle& c, int q) {
  for (const Gate& g : c.gates)
    for (int gq : g.qubits)
      if (gq == q) return &g;
  return nullptr;
}

}  // namespace frqaoa
