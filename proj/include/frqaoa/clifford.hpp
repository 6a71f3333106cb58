#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "frqaoa/pauli.hpp"

namespace frqaoa {

/// One of the 24 single-qubit Cliffords, identified by its conjugation action
/// C P C^dag on X and Z (the Y image follows from Y = iXZ).
struct SingleQubitClifford {
  int index = 0;
  Pauli x_img = Pauli::X;
  int x_sign = +1;
  Pauli z_img = Pauli::Z;
  int z_sign = +1;

  bool same_action(const SingleQubitClifford& o) const {
    return x_img == o.x_img && x_sign == o.x_sign && z_img == o.z_img && z_sign == o.z_sign;
  }
};

/// C A C^dag = sign * axis for A in {X, Y, Z}.
std::pair<Pauli, int> conjugate_axis(const SingleQubitClifford& c, Pauli axis);

/// The 24-element single-qubit Clifford group, generated from {H, S} words
/// once and cached. Index 0 is the identity; composition/inverse are table
/// lookups; matrices carry the phase of their generating word.
class CliffordGroup {
 public:
  static const CliffordGroup& instance();

  static constexpr int size = 24;

  const SingleQubitClifford& at(int idx) const { return elems_[idx]; }
  const Eigen::Matrix2cd& matrix(int idx) const { return matrices_[idx]; }

  /// index of a*b (apply b first, then a)
  int compose(int a, int b) const { return compose_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }

  int find(Pauli x_img, int x_sign, Pauli z_img, int z_sign) const;

  int id_index() const { return 0; }
  int h_index() const { return h_; }
  int s_index() const { return s_; }
  int sdg_index() const { return sdg_; }
  int pauli_index(Pauli p) const { return pauli_[static_cast<int>(p)]; }

  /// indices whose action maps `axis` to +/- itself (the 8-element stabilizer)
  const std::vector<int>& axis_stabilizer(Pauli axis) const;

 private:
  CliffordGroup();
  std::vector<SingleQubitClifford> elems_;
  std::vector<Eigen::Matrix2cd> matrices_;
  int compose_[24][24];
  int inverse_[24];
  int h_ = -1, s_ = -1, sdg_ = -1;
  int pauli_[4] = {-1, -1, -1, -1};
  std::vector<int> stab_x_, stab_y_, stab_z_;
};

}  // namespace frqaoa
