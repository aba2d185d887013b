#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qembed/integrals.hpp"
#include "qembed/pauli.hpp"

namespace qembed {

enum class Encoding { jordan_wigner, parity, bravyi_kitaev };

Encoding encoding_from_string(const std::string& name);
std::string to_string(Encoding encoding);

/// Binary linear fermion-to-qubit encoding q = A n (mod 2). Jordan-Wigner
/// is A = identity, parity the prefix-sum matrix, Bravyi-Kitaev the
/// update/parity/flip-set tree matrix truncated to arbitrary mode count.
/// Spin-orbital modes are ordered alpha block (spatial 0..n-1) then beta.
class FermionEncoding {
 public:
  FermionEncoding(Encoding kind, int n_modes);

  Encoding kind() const { return kind_; }
  int n_modes() const { return n_modes_; }

  /// Qubit bits for a fermionic occupation bitstring.
  std::uint64_t encode_occupation(std::uint64_t occupation) const;

  PauliOperator creation(int mode) const;
  PauliOperator annihilation(int mode) const;

  /// Update set: qubits flipped when mode's occupation flips.
  std::uint64_t update_mask(int mode) const { return update_[mode]; }
  /// Flip set: qubits whose joint parity stores the mode occupation.
  std::uint64_t occupation_mask(int mode) const { return occupation_[mode]; }
  /// Parity set: qubits whose joint parity is the prefix parity of modes < mode.
  std::uint64_t prefix_mask(int mode) const { return prefix_[mode]; }

 private:
  Encoding kind_;
  int n_modes_;
  std::vector<std::uint64_t> update_;
  std::vector<std::uint64_t> occupation_;
  std::vector<std::uint64_t> prefix_;
};

/// Maps the active-space Hamiltonian onto 2*n_orb qubits. The result is
/// Hermitian, carries e0 on the identity term, and its dense matrix is
/// unitarily equivalent to the fermionic Hamiltonian.
PauliOperator map_hamiltonian(const OrbitalIntegrals& ints, const ActiveSpace& active,
                              Encoding encoding);

/// Replaces the two particle-number-parity qubits of a parity-encoded
/// operator (alpha parity at n_orb-1, total parity at 2*n_orb-1) by their
/// sector eigenvalues. Parities are +1 for even electron count in the
/// channel, -1 for odd. Throws if the operator does not commute with the
/// tapering Z operators.
PauliOperator taper_parity(const PauliOperator& op, int n_alpha_parity, int n_beta_parity);

/// Like taper_parity but projects out terms that anticommute with the
/// tapering Zs instead of throwing; used for excitation generators whose
/// symmetry-breaking components must act as zero inside a sector.
PauliOperator taper_parity_project(const PauliOperator& op, int n_alpha_parity,
                                   int n_beta_parity);

/// Drops the two tapered bit positions from a parity-encoded qubit string.
std::uint64_t taper_bits(std::uint64_t qubit_bits, int n_qubits);

}  // namespace qembed
