#include "qembed/screening.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qembed {

void ModelHost::validate() const {
  const int n = n_sites();
  const int m = n_orbitals();
  if (n < 1 || m < 1 || m > n) throw std::invalid_argument("host: bad dimensions");
  if (energies.size() != m || occupations.size() != m)
    throw std::invalid_argument("host: energy/occupation length mismatch");
  if (v_bare.rows() != n || v_bare.cols() != n)
    throw std::invalid_argument("host: v_bare dimension mismatch");

  const Eigen::MatrixXd gram = orbitals.transpose() * orbitals;
  if ((gram - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("host: orbitals not column-orthonormal within 1e-10");
  if ((v_bare - v_bare.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("host: v_bare not symmetric within 1e-12");
  for (int i = 1; i < m; ++i) {
    if (energies[i] < energies[i - 1] - 1e-12)
      throw std::invalid_argument("host: energies not nondecreasing");
    if (occupations[i] > occupations[i - 1] + 1e-12)
      throw std::invalid_argument("host: occupations not aufbau-ordered");
  }
  for (int i = 0; i < m; ++i) {
    const double f = occupations[i];
    if (std::abs(f) > 1e-12 && std::abs(f - 1.0) > 1e-12 && std::abs(f - 2.0) > 1e-12)
      throw std::invalid_argument("host: occupations must be 0, 1 or 2");
  }
}

ModelHost ModelHost::from_one_body(const Eigen::MatrixXd& h0, const Eigen::MatrixXd& v_bare,
                                   int n_electrons) {
  if (h0.rows() != h0.cols()) throw std::invalid_argument("host: one-body matrix not square");
  if ((h0 - h0.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("host: one-body matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h0);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("host: one-body diagonalization failed");

  ModelHost host;
  host.orbitals = solver.eigenvectors();
  host.energies = solver.eigenvalues();
  host.v_bare = 0.5 * (v_bare + v_bare.transpose());
  const int m = host.n_orbitals();
  if (n_electrons < 0 || n_electrons > 2 * m)
    throw std::invalid_argument("host: electron count outside [0, 2*n_orbitals]");
  host.occupations = Eigen::VectorXd::Zero(m);
  int remaining = n_electrons;
  for (int i = 0; i < m && remaining > 0; ++i) {
    const int fill = std::min(2, remaining);
    host.occupations[i] = fill;
    remaining -= fill;
  }
  host.validate();
  return host;
}

Polarizability static_polarizability(const ModelHost& host, const std::vector<int>* exclude) {
  host.validate();
  std::set<int> excluded;
  if (exclude) {
    for (int i : *exclude) {
      if (i < 0 || i >= host.n_orbitals())
        throw std::invalid_argument("static_polarizability: excluded orbital out of range");
      excluded.insert(i);
    }
  }

  const int n = host.n_sites();
  const int m = host.n_orbitals();
  Eigen::MatrixXd chi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    if (host.occupations[i] < 0.5) continue;
    for (int a = 0; a < m; ++a) {
      if (host.occupations[a] >= 0.5) continue;
      if (excluded.count(i) && excluded.count(a)) continue;  // cRPA exclusion
      const double gap = host.energies[i] - host.energies[a];
      if (std::abs(gap) < 1e-10)
        throw std::runtime_error(
            "static_polarizability: degenerate occupied/empty pair, host is ill-conditioned");
      const Eigen::VectorXd overlap =
          host.orbitals.col(i).cwiseProduct(host.orbitals.col(a));
      chi.noalias() += (2.0 / gap) * (overlap * overlap.transpose());
    }
  }
  return {chi};
}

ScreenedInteraction screened_interaction(const Eigen::MatrixXd& v_bare,
                                         const Polarizability& chi) {
  const int n = static_cast<int>(v_bare.rows());
  if (chi.chi.rows() != n || chi.chi.cols() != n)
    throw std::invalid_argument("screened_interaction: dimension mismatch");

  if (chi.chi.cwiseAbs().maxCoeff() == 0.0) return {v_bare, 1.0};

  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - v_bare * chi.chi;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (smin < 1e-12 * std::max(1.0, smax))
    throw std::runtime_error("screened_interaction: (1 - v chi) is singular (screening divergence)");

  ScreenedInteraction out;
  out.condition_number = smax / smin;
  Eigen::MatrixXd w = m.partialPivLu().solve(v_bare);
  const double asym = (w - w.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10)
    throw std::runtime_error("screened_interaction: result asymmetric beyond 1e-10");
  out.w = 0.5 * (w + w.transpose());
  return out;
}

DcScheme dc_scheme_from_string(const std::string& name) {
  if (name == "none") return DcScheme::none;
  if (name == "hf") return DcScheme::hf;
  throw std::invalid_argument("unknown double-counting scheme: " + name);
}

std::string to_string(DcScheme scheme) {
  return scheme == DcScheme::none ? "none" : "hf";
}

OrbitalIntegrals effective_integrals(const ModelHost& host, const ActiveSpace& active,
                                     const ScreenedInteraction& w, DcScheme dc_scheme) {
  host.validate();
  active.validate(host.n_orbitals());
  const int m = active.n_orb();
  if (m < 1) throw std::invalid_argument("effective_integrals: empty active space");

  OrbitalIntegrals ints(m);

  // Orbital-pair densities d_ij(p) = phi_i(p) phi_j(p).
  std::vector<Eigen::VectorXd> pair_density(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      pair_density[i * m + j] = host.orbitals.col(active.orbitals[i])
                                    .cwiseProduct(host.orbitals.col(active.orbitals[j]));

  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * m + j < k * m + l) continue;
          const double value =
              pair_density[i * m + j].dot(w.w * pair_density[k * m + l]);
          ints.set_v(i, j, k, l, value);
        }

  // Host mean field projected on active orbitals is diagonal in its own
  // eigenbasis.
  for (int i = 0; i < m; ++i) ints.set_t(i, i, host.energies[active.orbitals[i]]);

  if (dc_scheme == DcScheme::hf) {
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        double dc = 0.0;
        for (int k = 0; k < m; ++k) {
          const double f = host.occupations[active.orbitals[k]];
          if (f < 0.5) continue;
          dc += f * (ints.v(i, j, k, k) - 0.5 * ints.v(i, k, j, k));
        }
        ints.set_t(i, j, ints.t(i, j) - dc);
      }
  }
  return ints;
}

}  // namespace qembed
