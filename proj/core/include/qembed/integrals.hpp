#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qembed {

/// One- and two-body coefficients of an active-space Hamiltonian,
///
///   H = e0 + sum_ij t(i,j) a+_i a_j + 1/2 sum_ijkl v_phys(i,j,k,l) a+_i a+_j a_k a_l
///
/// over spin-restricted real orbitals. Two-body storage is chemist
/// notation (ij|kl) with the full 8-fold permutation symmetry. The
/// physicist-ordered coefficient used by operator builders is obtained
/// through v_phys(i,j,k,l) = (il|jk).
class OrbitalIntegrals {
 public:
  explicit OrbitalIntegrals(int n_orb);

  int n_orb() const { return n_orb_; }
  double e0() const { return e0_; }
  void set_e0(double e0) { e0_ = e0; }

  double t(int i, int j) const { return t_(i, j); }
  /// Writes t(i,j) and t(j,i).
  void set_t(int i, int j, double value);
  const Eigen::MatrixXd& t_matrix() const { return t_; }

  /// Chemist-notation (ij|kl).
  double v(int i, int j, int k, int l) const { return v_[index(i, j, k, l)]; }
  /// Writes all 8 symmetry-equivalent slots.
  void set_v(int i, int j, int k, int l, double value);

  /// Spin-orbital one-body coefficient; modes 0..n-1 are alpha, n..2n-1 beta.
  double h_so(int p, int q) const;
  /// Physicist <pq|rs> over spin-orbitals: (pr|qs) with spin deltas.
  double v_phys_so(int p, int q, int r, int s) const;

  /// Integrals over a subset of orbitals, reindexed to 0..m-1.
  OrbitalIntegrals restricted(const std::vector<int>& orbitals) const;

  std::size_t index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_orb_ + j) * n_orb_ + k) * n_orb_ + l;
  }

 private:
  int n_orb_;
  double e0_ = 0.0;
  Eigen::MatrixXd t_;
  std::vector<double> v_;
};

/// Orbital window and electron counts defining a determinant space.
struct ActiveSpace {
  std::vector<int> orbitals;
  int n_alpha = 0;
  int n_beta = 0;
  std::vector<int> frozen;

  int n_orb() const { return static_cast<int>(orbitals.size()); }
  int ms2() const { return n_alpha - n_beta; }
  /// Throws std::invalid_argument on duplicate/overlapping indices or
  /// electron counts outside [0, n_orb].
  void validate(int n_orb_total) const;

  /// The trivial window over all orbitals of an integral set.
  static ActiveSpace full(int n_orb, int n_alpha, int n_beta);
};

struct SymmetryReport {
  double max_t_deviation = 0.0;
  double max_v_deviation = 0.0;
  double tolerance = 1e-10;
  bool pass = false;
  std::string summary() const;
};

/// Max deviation of t from symmetry and of v from 8-fold permutation
/// symmetry, checked against 1e-10.
SymmetryReport validate_integrals(const OrbitalIntegrals& ints);

/// Folds the listed orbitals as doubly occupied into e0 and t:
///   e0' = e0 + sum_f 2 t_ff + sum_fg [2 (ff|gg) - (fg|gf)]
///   t'_ij = t_ij + sum_f [2 (ij|ff) - (if|fj)]
/// The two-body block is the restriction to the surviving orbitals.
OrbitalIntegrals freeze_core(const OrbitalIntegrals& ints, const std::vector<int>& frozen);

struct FcidumpData {
  OrbitalIntegrals ints;
  int n_electrons = 0;
  int ms2 = 0;
};

/// Reads an FCIDUMP-convention text file (1-based indices on disk).
/// Throws std::runtime_error with a line number on parse failures,
/// out-of-range indices, or entries conflicting beyond 1e-10.
FcidumpData read_fcidump(const std::string& path);
OrbitalIntegrals load_fcidump(const std::string& path);

void write_fcidump(const OrbitalIntegrals& ints, const std::string& path, int n_electrons,
                   int ms2);

constexpr double kHartreeToEv = 27.211386245988;

}  // namespace qembed
