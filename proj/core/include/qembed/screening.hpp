#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qembed/integrals.hpp"

namespace qembed {

/// Mean-field description of a finite model host: orthonormal orbitals,
/// their energies and aufbau occupations, and the bare interaction in the
/// site basis.
struct ModelHost {
  Eigen::MatrixXd orbitals;     // n_sites x n_orbitals, columns orthonormal
  Eigen::VectorXd energies;     // ascending
  Eigen::VectorXd occupations;  // spin-summed: 0, 1 or 2
  Eigen::MatrixXd v_bare;       // n_sites x n_sites, symmetric PSD

  int n_sites() const { return static_cast<int>(orbitals.rows()); }
  int n_orbitals() const { return static_cast<int>(orbitals.cols()); }
  int n_electrons() const { return static_cast<int>(std::lround(occupations.sum())); }
  /// Throws std::invalid_argument on orthonormality/ordering/symmetry violations.
  void validate() const;

  /// Diagonalizes a one-body site Hamiltonian and fills by aufbau.
  static ModelHost from_one_body(const Eigen::MatrixXd& h0, const Eigen::MatrixXd& v_bare,
                                 int n_electrons);
};

struct Polarizability {
  Eigen::MatrixXd chi;  // symmetric, negative semi-definite
};

struct ScreenedInteraction {
  Eigen::MatrixXd w;  // symmetric
  double condition_number = 1.0;
};

/// Static particle-hole polarizability over occupied -> empty transitions,
///   chi_pq = sum_{i occ, a emp} f_ia phi_i(p)phi_a(p)phi_i(q)phi_a(q) * 2/(e_i - e_a)
/// with f_ia = 1. When exclude is given, transitions with BOTH endpoints
/// in the excluded orbital set are skipped (constrained-RPA rule).
/// Throws on an occupied/empty degeneracy (ill-conditioned host).
Polarizability static_polarizability(const ModelHost& host,
                                     const std::vector<int>* exclude = nullptr);

/// Dyson-resummed static screening W = (1 - v chi)^{-1} v. Throws on a
/// singular (1 - v chi). chi = 0 returns v exactly.
ScreenedInteraction screened_interaction(const Eigen::MatrixXd& v_bare,
                                         const Polarizability& chi);

enum class DcScheme { none, hf };
DcScheme dc_scheme_from_string(const std::string& name);
std::string to_string(DcScheme scheme);

/// Active-space integrals from the screened interaction:
///   (ij|kl)^eff = sum_pq phi_i(p)phi_j(p) w_pq phi_k(q)phi_l(q)
///   t^eff_ij    = h^mf_ij - DC_ij
/// where h^mf is the host mean field projected on the active orbitals and
/// DC is 0 (`none`) or the mean-field interaction of the active density
/// (`hf`).
OrbitalIntegrals effective_integrals(const ModelHost& host, const ActiveSpace& active,
                                     const ScreenedInteraction& w, DcScheme dc_scheme);

/// Reads a host specification from a JSON config (sites, one-body matrix
/// or hoppings, bare interaction matrix or softened-Coulomb parameters,
/// electron count, active orbitals).
struct HostConfig {
  ModelHost host;
  std::vector<int> active_orbitals;
  DcScheme dc_scheme = DcScheme::none;
};
HostConfig load_host_config(const std::string& path);

}  // namespace qembed
