#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qembed/integrals.hpp"

namespace qembed {

/// Occupation bitstrings over the spatial orbitals of one determinant
/// space; bit p of alpha/beta is the occupation of spatial orbital p in
/// that spin channel.
struct SlaterDeterminant {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;

  auto operator<=>(const SlaterDeterminant&) const = default;
  /// Spin-orbital occupation with the alpha block in the low bits.
  std::uint64_t combined(int n_orb) const { return alpha | (beta << n_orb); }
  /// e.g. "|110;101>" (alpha;beta, orbital 0 leftmost).
  std::string to_string(int n_orb) const;
};

/// All C(n,n_alpha)*C(n,n_beta) determinants, alpha-major, each spin
/// channel in lexicographic (ascending bitmask) order. Throws if the
/// dimension exceeds 1e7.
std::vector<SlaterDeterminant> enumerate_basis(const ActiveSpace& active);

/// Slater-Condon matrix element <d1|H|d2> with the fermionic sign fixed
/// by ascending spin-orbital creation order (alpha block before beta).
double matrix_element(const SlaterDeterminant& d1, const SlaterDeterminant& d2,
                      const OrbitalIntegrals& ints);

struct CiVector {
  std::vector<SlaterDeterminant> basis;
  Eigen::VectorXd coeffs;
};

/// Expectation of S^2 (units of S(S+1)) via exact application of S+ in
/// determinant space: <S^2> = |S+ psi|^2 + M(M+1).
double s_squared(const CiVector& state, int n_orb);

struct Spectrum {
  std::vector<double> energies;
  std::vector<CiVector> states;
  std::vector<double> s_squared;
  double sz = 0.0;
  /// Energies in Hartree and eV, spin labels, leading determinants with
  /// |amplitude| >= 0.05.
  std::string to_text(int n_orb) const;
};

enum class SolveMethod { dense, davidson };

/// k lowest eigenpairs of the active-space Hamiltonian. Davidson falls
/// back to dense diagonalization below dimension 2000 if it stalls.
Spectrum solve(const OrbitalIntegrals& ints, const ActiveSpace& active, int k,
               SolveMethod method = SolveMethod::dense);

/// Dense Hamiltonian in the enumerate_basis order (test/oracle helper).
Eigen::MatrixXd build_dense_hamiltonian(const OrbitalIntegrals& ints,
                                        const std::vector<SlaterDeterminant>& basis);

/// Sign of applying the normal-ordered excitation (annihilations right to
/// left, then creations right to left) to an occupation bitstring.
/// Returns 0 if the excitation is not applicable.
int excitation_sign(std::uint64_t& occupation, const std::vector<int>& annihilate,
                    const std::vector<int>& create);

}  // namespace qembed
