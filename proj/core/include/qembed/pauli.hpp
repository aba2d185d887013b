#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <Eigen/Dense>

namespace qembed {

/// A tensor product of Pauli letters in symplectic form: qubit q carries
/// X when bit q of x is set, Z when bit q of z is set, Y when both.
/// Any phase lives in the owning coefficient.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  bool is_identity() const { return x == 0 && z == 0; }
  auto operator<=>(const PauliString&) const = default;

  /// Text label with qubit 0 rightmost, e.g. "IZXI" on 4 qubits.
  std::string label(int n_qubits) const;
  static PauliString from_label(const std::string& label);
};

/// Weighted sum of Pauli strings on a fixed qubit register.
class PauliOperator {
 public:
  using Coeff = std::complex<double>;
  using TermMap = std::map<PauliString, Coeff>;

  explicit PauliOperator(int n_qubits);
  static PauliOperator identity(int n_qubits, Coeff coeff = 1.0);
  /// Single-letter operator, letter in {I, X, Y, Z}.
  static PauliOperator single(int n_qubits, char letter, int qubit, Coeff coeff = 1.0);

  int n_qubits() const { return n_qubits_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add_term(const PauliString& p, Coeff coeff);
  Coeff coefficient(const PauliString& p) const;

  PauliOperator& operator+=(const PauliOperator& other);
  PauliOperator& operator-=(const PauliOperator& other);
  PauliOperator& operator*=(Coeff scale);
  friend PauliOperator operator+(PauliOperator a, const PauliOperator& b) { return a += b; }
  friend PauliOperator operator-(PauliOperator a, const PauliOperator& b) { return a -= b; }
  friend PauliOperator operator*(PauliOperator a, Coeff scale) { return a *= scale; }
  friend PauliOperator operator*(Coeff scale, PauliOperator a) { return a *= scale; }
  /// Symplectic product with exact i-power bookkeeping.
  PauliOperator operator*(const PauliOperator& other) const;

  PauliOperator dagger() const;
  /// Merges duplicates and drops coefficients below tol. Returns *this.
  PauliOperator& simplify(double tol = 1e-12);

  bool is_hermitian(double tol = 1e-12) const;
  double max_imag_coefficient() const;

  /// Dense matrix by Kronecker composition; guarded to n_qubits <= 14.
  Eigen::MatrixXcd to_dense() const;

  /// Line-per-term text "coefficient label"; round-trip safe.
  std::string to_text() const;
  static PauliOperator from_text(const std::string& text);

 private:
  int n_qubits_;
  TermMap terms_;
  void check_compatible(const PauliOperator& other) const;
};

/// Eigenvalues of a Hermitian operator's dense form, ascending.
Eigen::VectorXd dense_spectrum(const PauliOperator& op);

}  // namespace qembed
