#include "frqaoa/unitary.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "frqaoa/clifford.hpp"

namespace frqaoa {

using std::complex;
using namespace std::complex_literals;

namespace {

Eigen::Matrix2cd rotation_matrix(Axis axis, double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  switch (axis) {
    case Axis::X: m << c, -1i * s, -1i * s, c; break;
    case Axis::Y: m << c, -s, s, c; break;
    case Axis::Z: m << std::exp(-1i * (theta / 2)), 0, 0, std::exp(1i * (theta / 2)); break;
  }
  return m;
}

}  // namespace

Eigen::MatrixXcd gate_matrix(const Gate& g) {
  Eigen::Matrix2cd m2;
  switch (g.kind) {
    case GateKind::H:
      m2 << 1, 1, 1, -1;
      return m2 / std::sqrt(2.0);
    case GateKind::X: return pauli_matrix(Pauli::X);
    case GateKind::Y: return pauli_matrix(Pauli::Y);
    case GateKind::Z: return pauli_matrix(Pauli::Z);
    case GateKind::S:
      m2 << 1, 0, 0, 1i;
      return m2;
    case GateKind::Sdg:
      m2 << 1, 0, 0, -1i;
      return m2;
    case GateKind::Rx: return rotation_matrix(Axis::X, *g.angle);
    case GateKind::Ry: return rotation_matrix(Axis::Y, *g.angle);
    case GateKind::Rz: return rotation_matrix(Axis::Z, *g.angle);
    case GateKind::C1: {
      Eigen::Matrix2cd m = CliffordGroup::instance().matrix(g.clifford);
      if (g.angle) m = rotation_matrix(*g.axis, *g.angle) * m;  // Clifford first in time
      return m;
    }
    case GateKind::Rzz: {
      // exp(-i theta/2 Z (x) Z): diagonal in the parity of the two bits
      const complex<double> even = std::exp(-1i * (*g.angle / 2));
      const complex<double> odd = std::exp(1i * (*g.angle / 2));
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
      m(0, 0) = even;
      m(1, 1) = odd;
      m(2, 2) = odd;
      m(3, 3) = even;
      return m;
    }
    case GateKind::Cnot: {
      // local index = (target bit) << 1 | (control bit)
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
      m(0, 0) = 1;  // |00> -> |00>
      m(3, 1) = 1;  // |01> (control set) -> |11>
      m(2, 2) = 1;  // |10> -> |10>
      m(1, 3) = 1;  // |11> -> |01>
      return m;
    }
    case GateKind::Measure: throw std::invalid_argument("MEASURE has no unitary matrix");
  }
  throw std::logic_error("unhandled gate kind");
}

Eigen::MatrixXcd embed_gate(const Gate& g, int n_qubits) {
  const Eigen::MatrixXcd gm = gate_matrix(g);
  const std::size_t dim = std::size_t{1} << n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);

  std::size_t mask = 0;
  for (int q : g.qubits) mask |= std::size_t{1} << q;

  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t lcol = 0;
    for (std::size_t k = 0; k < g.qubits.size(); ++k) lcol |= ((col >> g.qubits[k]) & 1) << k;
    for (std::size_t lrow = 0; lrow < (std::size_t{1} << g.qubits.size()); ++lrow) {
      if (gm(lrow, lcol) == complex<double>(0)) continue;
      std::size_t row = col & ~mask;
      for (std::size_t k = 0; k < g.qubits.size(); ++k)
        row |= ((lrow >> k) & 1) << g.qubits[k];
      u(row, col) = gm(lrow, lcol);
    }
  }
  return u;
}

Eigen::MatrixXcd cycle_unitary(const Cycle& c, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& g : c.gates) u = embed_gate(g, n_qubits) * u;
  return u;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c, int max_qubits) {
  if (c.n_qubits > max_qubits)
    throw std::invalid_argument("circuit_unitary: " + std::to_string(c.n_qubits) +
                                " qubits exceeds verification limit " + std::to_string(max_qubits));
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Cycle& cy : c.cycles) {
    if (cy.cls == CycleClass::Measurement)
      throw std::invalid_argument("circuit_unitary: circuit contains a measurement cycle");
    u = cycle_unitary(cy, c.n_qubits) * u;
  }
  return u;
}

double phase_insensitive_deficit(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return 1.0 - std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

}  // namespace frqaoa
