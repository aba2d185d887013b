#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qembed/pauli.hpp"

namespace qembed {

/// Exact amplitude-vector simulator state; qubit 0 is the least
/// significant bit of the basis index.
class Statevector {
 public:
  explicit Statevector(int n_qubits);
  static Statevector basis_state(int n_qubits, std::uint64_t bits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::complex<double>& operator[](std::size_t i) { return amps_[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();
  std::complex<double> inner(const Statevector& other) const;
  /// |<this|other>|^2
  double fidelity(const Statevector& other) const;

  /// In-place exp(i angle P) for a Pauli literal P.
  void apply_pauli_rotation(const PauliString& p, double angle);
  /// In-place single-qubit gate.
  void apply_single_qubit(int qubit, const std::complex<double> gate[2][2]);
  /// In-place exp(theta G) for an anti-Hermitian Pauli sum whose terms
  /// mutually commute (each term rotated exactly in its 2-dimensional
  /// invariant subspaces). Throws if a coefficient has a real part.
  void apply_exponential(const PauliOperator& generator, double theta);

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// <psi|op|psi>.real(); asserts the imaginary part below 1e-10 for
/// Hermitian operators.
double expectation(const Statevector& state, const PauliOperator& op);

struct SampleResult {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t shots = 0;
};

/// Finite-shot estimate of a Hermitian operator: qubit-wise commuting
/// terms are grouped, each group measured in its rotated product basis by
/// sampling the exact outcome distribution with a seeded generator.
/// Deterministic for a fixed seed.
SampleResult sample_expectation(const Statevector& state, const PauliOperator& op,
                                std::uint64_t shots, std::uint64_t seed);

}  // namespace qembed
