#include "frqaoa/pauli.hpp"

#include <sstream>
#include <stdexcept>

namespace frqaoa {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
  }
}

namespace {

// (x, z) bits: I=(0,0) X=(1,0) Y=(1,1) Z=(0,1); P = i^{xz} X^x Z^z
constexpr int kX[4] = {0, 1, 1, 0};
constexpr int kZ[4] = {0, 0, 1, 1};
constexpr Pauli kFromXZ[2][2] = {{Pauli::I, Pauli::Z}, {Pauli::X, Pauli::Y}};

}  // namespace

Pauli pauli_mul(Pauli a, Pauli b, int& phase_quarters) {
  const int xa = kX[static_cast<int>(a)], za = kZ[static_cast<int>(a)];
  const int xb = kX[static_cast<int>(b)], zb = kZ[static_cast<int>(b)];
  // a*b = i^{xa za} X^xa Z^za i^{xb zb} X^xb Z^zb ; commuting Z^za past X^xb
  // costs (-1)^{za xb} = i^{2 za xb}
  const int xr = xa ^ xb, zr = za ^ zb;
  phase_quarters += kX[static_cast<int>(a)] * kZ[static_cast<int>(a)] +
                    kX[static_cast<int>(b)] * kZ[static_cast<int>(b)] + 2 * za * xb -
                    xr * zr;  // pull i^{xr zr} back out of the result letter
  return kFromXZ[xr][zr];
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -1i, 1i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

bool PauliString::is_identity_ops() const {
  for (Pauli p : ops)
    if (p != Pauli::I) return false;
  return true;
}

PauliString compose(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pauli compose: length mismatch");
  PauliString r;
  r.ops.resize(a.size());
  int quarters = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r.ops[i] = pauli_mul(a.ops[i], b.ops[i], quarters);
  quarters = ((quarters % 4) + 4) % 4;
  if (quarters == 1 || quarters == 3) throw std::logic_error("pauli compose: product is anti-Hermitian (+/-i phase)");
  r.sign = a.sign * b.sign * (quarters == 2 ? -1 : +1);
  return r;
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pauli commutes: length mismatch");
  int anti = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int xa = kX[static_cast<int>(a.ops[i])], za = kZ[static_cast<int>(a.ops[i])];
    const int xb = kX[static_cast<int>(b.ops[i])], zb = kZ[static_cast<int>(b.ops[i])];
    anti ^= (xa * zb + za * xb) & 1;
  }
  return anti == 0;
}

Eigen::MatrixXcd pauli_matrix(const PauliString& p) {
  // qubit 0 is the least-significant bit, so it sits innermost in the kron;
  // each later qubit wraps the accumulated matrix as the outer factor
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1) * static_cast<double>(p.sign);
  for (Pauli op : p.ops) {
    const Eigen::Matrix2cd g = pauli_matrix(op);
    const Eigen::Index d = m.rows();
    Eigen::MatrixXcd out(2 * d, 2 * d);
    out.topLeftCorner(d, d) = g(0, 0) * m;
    out.topRightCorner(d, d) = g(0, 1) * m;
    out.bottomLeftCorner(d, d) = g(1, 0) * m;
    out.bottomRightCorner(d, d) = g(1, 1) * m;
    m.swap(out);
  }
  return m;
}

std::string to_string(const PauliString& p) {
  std::ostringstream os;
  os << (p.sign < 0 ? '-' : '+');
  for (Pauli op : p.ops) os << pauli_char(op);
  return os.str();
}

}  // namespace frqaoa
