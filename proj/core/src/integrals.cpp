#include "qembed/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qembed {

OrbitalIntegrals::OrbitalIntegrals(int n_orb) : n_orb_(n_orb) {
  if (n_orb < 1) throw std::invalid_argument("OrbitalIntegrals: n_orb must be >= 1");
  t_ = Eigen::MatrixXd::Zero(n_orb, n_orb);
  v_.assign(static_cast<std::size_t>(n_orb) * n_orb * n_orb * n_orb, 0.0);
}

void OrbitalIntegrals::set_t(int i, int j, double value) {
  t_(i, j) = value;
  t_(j, i) = value;
}

void OrbitalIntegrals::set_v(int i, int j, int k, int l, double value) {
  v_[index(i, j, k, l)] = value;
  v_[index(j, i, k, l)] = value;
  v_[index(i, j, l, k)] = value;
  v_[index(j, i, l, k)] = value;
  v_[index(k, l, i, j)] = value;
  v_[index(l, k, i, j)] = value;
  v_[index(k, l, j, i)] = value;
  v_[index(l, k, j, i)] = value;
}

double OrbitalIntegrals::h_so(int p, int q) const {
  const bool p_beta = p >= n_orb_;
  const bool q_beta = q >= n_orb_;
  if (p_beta != q_beta) return 0.0;
  return t_(p % n_orb_, q % n_orb_);
}

double OrbitalIntegrals::v_phys_so(int p, int q, int r, int s) const {
  const int n = n_orb_;
  if ((p >= n) != (r >= n)) return 0.0;
  if ((q >= n) != (s >= n)) return 0.0;
  return v_[index(p % n, r % n, q % n, s % n)];
}

OrbitalIntegrals OrbitalIntegrals::restricted(const std::vector<int>& orbitals) const {
  OrbitalIntegrals out(static_cast<int>(orbitals.size()));
  out.set_e0(e0_);
  const int m = out.n_orb();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.t_(i, j) = t_(orbitals[i], orbitals[j]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          out.v_[out.index(i, j, k, l)] =
              v_[index(orbitals[i], orbitals[j], orbitals[k], orbitals[l])];
  return out;
}

void ActiveSpace::validate(int n_orb_total) const {
  std::set<int> seen;
  for (int i : orbitals) {
    if (i < 0 || i >= n_orb_total)
      throw std::invalid_argument("active orbital index out of range: " + std::to_string(i));
    if (!seen.insert(i).second)
      throw std::invalid_argument("duplicate active orbital index: " + std::to_string(i));
  }
  for (int f : frozen) {
    if (f < 0 || f >= n_orb_total)
      throw std::invalid_argument("frozen orbital index out of range: " + std::to_string(f));
    if (!seen.insert(f).second)
      throw std::invalid_argument("frozen orbital overlaps active space: " + std::to_string(f));
  }
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_orb() || n_beta > n_orb())
    throw std::invalid_argument("electron count outside [0, n_orb]");
}

ActiveSpace ActiveSpace::full(int n_orb, int n_alpha, int n_beta) {
  ActiveSpace space;
  space.orbitals.resize(n_orb);
  for (int i = 0; i < n_orb; ++i) space.orbitals[i] = i;
  space.n_alpha = n_alpha;
  space.n_beta = n_beta;
  space.validate(n_orb);
  return space;
}

std::string SymmetryReport::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << ": max one-body deviation " << max_t_deviation
     << ", max two-body 8-fold deviation " << max_v_deviation << " (tolerance " << tolerance
     << ")";
  return os.str();
}

SymmetryReport validate_integrals(const OrbitalIntegrals& ints) {
  SymmetryReport report;
  const int n = ints.n_orb();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      report.max_t_deviation =
          std::max(report.max_t_deviation, std::abs(ints.t(i, j) - ints.t(j, i)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double ref = ints.v(i, j, k, l);
          const double perms[7] = {ints.v(j, i, k, l), ints.v(i, j, l, k), ints.v(j, i, l, k),
                                   ints.v(k, l, i, j), ints.v(l, k, i, j), ints.v(k, l, j, i),
                                   ints.v(l, k, j, i)};
          for (double p : perms)
            report.max_v_deviation = std::max(report.max_v_deviation, std::abs(ref - p));
        }
  report.pass = report.max_t_deviation <= report.tolerance &&
                report.max_v_deviation <= report.tolerance;
  return report;
}

OrbitalIntegrals freeze_core(const OrbitalIntegrals& ints, const std::vector<int>& frozen) {
  const int n = ints.n_orb();
  std::set<int> frozen_set;
  for (int f : frozen) {
    if (f < 0 || f >= n)
      throw std::invalid_argument("freeze_core: frozen index out of range: " + std::to_string(f));
    if (!frozen_set.insert(f).second)
      throw std::invalid_argument("freeze_core: duplicate frozen index: " + std::to_string(f));
  }

  std::vector<int> survivors;
  for (int i = 0; i < n; ++i)
    if (!frozen_set.count(i)) survivors.push_back(i);

  double e0 = ints.e0();
  for (int f : frozen) {
    e0 += 2.0 * ints.t(f, f);
    for (int g : frozen) e0 += 2.0 * ints.v(f, f, g, g) - ints.v(f, g, g, f);
  }

  OrbitalIntegrals out = ints.restricted(survivors);
  out.set_e0(e0);
  const int m = out.n_orb();
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      double tij = ints.t(survivors[i], survivors[j]);
      for (int f : frozen)
        tij += 2.0 * ints.v(survivors[i], survivors[j], f, f) -
               ints.v(survivors[i], f, f, survivors[j]);
      out.set_t(i, j, tij);
    }
  return out;
}

}  // namespace qembed
