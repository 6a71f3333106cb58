#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace frqaoa {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Single-qubit product a*b = i^k * result. Returns result, adds k to
/// phase_quarters (mod-4 bookkeeping is the caller's).
Pauli pauli_mul(Pauli a, Pauli b, int& phase_quarters);

Eigen::Matrix2cd pauli_matrix(Pauli p);

/// Signed n-qubit Pauli operator. Conjugation through the supported gate set
/// keeps Hermitian strings Hermitian, so sign is +/-1 only.
struct PauliString {
  std::vector<Pauli> ops;
  int sign = +1;

  static PauliString identity(std::size_t n) { return PauliString{std::vector<Pauli>(n, Pauli::I), +1}; }

  std::size_t size() const { return ops.size(); }
  bool is_identity_ops() const;

  bool operator==(const PauliString&) const = default;
};

/// Operator product a*b. Throws std::logic_error if the product carries a
/// residual factor of +/-i (callers compose commuting/self-inverse strings).
PauliString compose(const PauliString& a, const PauliString& b);

/// True iff a and b commute as operators (sign-insensitive).
bool commutes(const PauliString& a, const PauliString& b);

Eigen::MatrixXcd pauli_matrix(const PauliString& p);

std::string to_string(const PauliString& p);

}  // namespace frqaoa
