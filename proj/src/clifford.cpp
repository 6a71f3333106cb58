#include "frqaoa/clifford.hpp"

#include <stdexcept>

namespace frqaoa {

std::pair<Pauli, int> conjugate_axis(const SingleQubitClifford& c, Pauli axis) {
  switch (axis) {
    case Pauli::X: return {c.x_img, c.x_sign};
    case Pauli::Z: return {c.z_img, c.z_sign};
    case Pauli::Y: {
      // Y = i X Z  =>  C Y C^dag = i (C X C^dag)(C Z C^dag)
      int quarters = 1;
      const Pauli prod = pauli_mul(c.x_img, c.z_img, quarters);
      quarters = ((quarters % 4) + 4) % 4;
      if (quarters != 0 && quarters != 2) throw std::logic_error("clifford action lost Hermiticity");
      return {prod, c.x_sign * c.z_sign * (quarters == 2 ? -1 : +1)};
    }
    case Pauli::I: return {Pauli::I, +1};
  }
  throw std::logic_error("bad axis");
}

namespace {

SingleQubitClifford act(const SingleQubitClifford& a, const SingleQubitClifford& b) {
  // (a o b)(P) = a(b(P)); apply b first
  SingleQubitClifford r;
  auto [bx, bxs] = conjugate_axis(b, Pauli::X);
  auto [ax, axs] = conjugate_axis(a, bx);
  r.x_img = ax;
  r.x_sign = bxs * axs;
  auto [bz, bzs] = conjugate_axis(b, Pauli::Z);
  auto [az, azs] = conjugate_axis(a, bz);
  r.z_img = az;
  r.z_sign = bzs * azs;
  return r;
}

}  // namespace

CliffordGroup::CliffordGroup() {
  using namespace std::complex_literals;
  Eigen::Matrix2cd h_mat, s_mat;
  h_mat << 1, 1, 1, -1;
  h_mat /= std::sqrt(2.0);
  s_mat << 1, 0, 0, 1i;

  const SingleQubitClifford id{0, Pauli::X, +1, Pauli::Z, +1};
  const SingleQubitClifford h_act{0, Pauli::Z, +1, Pauli::X, +1};
  const SingleQubitClifford s_act{0, Pauli::Y, +1, Pauli::Z, +1};

  elems_.push_back(id);
  matrices_.push_back(Eigen::Matrix2cd::Identity());

  // breadth-first closure under left-multiplication by H and S; discovery
  // order is deterministic, so indices are stable
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const struct {
      SingleQubitClifford a;
      const Eigen::Matrix2cd* m;
    } gens[2] = {{h_act, &h_mat}, {s_act, &s_mat}};
    for (const auto& g : gens) {
      SingleQubitClifford cand = act(g.a, elems_[i]);
      bool known = false;
      for (const auto& e : elems_)
        if (e.same_action(cand)) {
          known = true;
          break;
        }
      if (!known) {
        cand.index = static_cast<int>(elems_.size());
        elems_.push_back(cand);
        matrices_.push_back(*g.m * matrices_[i]);
      }
    }
  }
  if (elems_.size() != size) throw std::logic_error("single-qubit Clifford closure != 24");

  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      const SingleQubitClifford ab = act(elems_[a], elems_[b]);
      compose_[a][b] = find(ab.x_img, ab.x_sign, ab.z_img, ab.z_sign);
    }
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (compose_[a][b] == 0) inverse_[a] = b;

  h_ = find(Pauli::Z, +1, Pauli::X, +1);
  s_ = find(Pauli::Y, +1, Pauli::Z, +1);
  sdg_ = find(Pauli::Y, -1, Pauli::Z, +1);
  pauli_[0] = 0;
  pauli_[1] = find(Pauli::X, +1, Pauli::Z, -1);  // X
  pauli_[2] = find(Pauli::X, -1, Pauli::Z, -1);  // Y
  pauli_[3] = find(Pauli::X, -1, Pauli::Z, +1);  // Z

  for (int i = 0; i < size; ++i) {
    const auto& e = elems_[i];
    if (e.x_img == Pauli::X) stab_x_.push_back(i);
    if (e.z_img == Pauli::Z) stab_z_.push_back(i);
    if (conjugate_axis(e, Pauli::Y).first == Pauli::Y) stab_y_.push_back(i);
  }
  if (stab_x_.size() != 8 || stab_y_.size() != 8 || stab_z_.size() != 8)
    throw std::logic_error("axis stabilizers must have 8 elements");
}

int CliffordGroup::find(Pauli x_img, int x_sign, Pauli z_img, int z_sign) const {
  for (const auto& e : elems_)
    if (e.x_img == x_img && e.x_sign == x_sign && e.z_img == z_img && e.z_sign == z_sign)
      return e.index;
  throw std::invalid_argument("no single-qubit Clifford with the requested action");
}

const std::vector<int>& CliffordGroup::axis_stabilizer(Pauli axis) const {
  switch (axis) {
    case Pauli::X: return stab_x_;
    case Pauli::Y: return stab_y_;
    case Pauli::Z: return stab_z_;
    default: throw std::invalid_argument("axis stabilizer: axis must be X, Y or Z");
  }
}

const CliffordGroup& CliffordGroup::instance() {
  static const CliffordGroup g;
  return g;
}

}  // namespace frqaoa
