#include "qembed/fci.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <Eigen/SparseCore>

#include "qembed/davidson.hpp"

namespace qembed {

namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

// All n-bit masks with k bits set, ascending (lexicographic on the sorted
// occupied-index lists).
std::vector<std::uint64_t> combinations(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t mask = (std::uint64_t(1) << k) - 1;
  const std::uint64_t limit = std::uint64_t(1) << n;
  while (mask < limit) {
    out.push_back(mask);
    // Gosper's hack.
    const std::uint64_t c = mask & -mask;
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

int parity_below(std::uint64_t occ, int p) {
  const std::uint64_t below = (std::uint64_t(1) << p) - 1;
  return (popcount(occ & below) & 1) ? -1 : 1;
}

}  // namespace

int excitation_sign(std::uint64_t& occupation, const std::vector<int>& annihilate,
                    const std::vector<int>& create) {
  int sign = 1;
  for (auto it = annihilate.rbegin(); it != annihilate.rend(); ++it) {
    const std::uint64_t bit = std::uint64_t(1) << *it;
    if (!(occupation & bit)) return 0;
    sign *= parity_below(occupation, *it);
    occupation ^= bit;
  }
  for (auto it = create.rbegin(); it != create.rend(); ++it) {
    const std::uint64_t bit = std::uint64_t(1) << *it;
    if (occupation & bit) return 0;
    sign *= parity_below(occupation, *it);
    occupation ^= bit;
  }
  return sign;
}

std::string SlaterDeterminant::to_string(int n_orb) const {
  std::string a, b;
  for (int p = 0; p < n_orb; ++p) {
    a += ((alpha >> p) & 1) ? '1' : '0';
    b += ((beta >> p) & 1) ? '1' : '0';
  }
  return "|" + a + ";" + b + ">";
}

std::vector<SlaterDeterminant> enumerate_basis(const ActiveSpace& active) {
  const int n = active.n_orb();
  if (n < 1 || n > 31) throw std::invalid_argument("enumerate_basis: orbital count outside [1, 31]");
  const auto alphas = combinations(n, active.n_alpha);
  const auto betas = combinations(n, active.n_beta);
  const std::size_t dim = alphas.size() * betas.size();
  if (dim > 10'000'000)
    throw std::runtime_error("enumerate_basis: determinant space exceeds 1e7 (" +
                             std::to_string(dim) + ")");
  std::vector<SlaterDeterminant> basis;
  basis.reserve(dim);
  for (std::uint64_t a : alphas)
    for (std::uint64_t b : betas) basis.push_back({a, b});
  return basis;
}

double matrix_element(const SlaterDeterminant& d1, const SlaterDeterminant& d2,
                      const OrbitalIntegrals& ints) {
  const int n = ints.n_orb();
  const std::uint64_t c1 = d1.combined(n);
  const std::uint64_t c2 = d2.combined(n);
  const std::uint64_t diff = c1 ^ c2;
  const int n_diff = popcount(diff);
  if (n_diff > 4) return 0.0;

  auto each_bit = [](std::uint64_t mask, auto&& fn) {
    while (mask) {
      const int p = std::countr_zero(mask);
      fn(p);
      mask &= mask - 1;
    }
  };

  if (n_diff == 0) {
    double value = 0.0;
    each_bit(c1, [&](int p) {
      value += ints.h_so(p, p);
      each_bit(c1, [&](int q) {
        value += 0.5 * (ints.v_phys_so(p, q, p, q) - ints.v_phys_so(p, q, q, p));
      });
    });
    return value;
  }

  if (n_diff == 2) {
    const int i = std::countr_zero(c1 & diff);
    const int a = std::countr_zero(c2 & diff);
    std::uint64_t occ = c2;
    const int sign = excitation_sign(occ, {a}, {i});
    double value = ints.h_so(i, a);
    each_bit(c1 & c2, [&](int k) {
      value += ints.v_phys_so(i, k, a, k) - ints.v_phys_so(i, k, k, a);
    });
    return sign * value;
  }

  // n_diff == 4: i<j leave, a<b enter.
  const std::uint64_t from = c1 & diff;
  const std::uint64_t to = c2 & diff;
  if (popcount(from) != 2) return 0.0;
  const int i = std::countr_zero(from);
  const int j = 63 - std::countl_zero(from);
  const int a = std::countr_zero(to);
  const int b = 63 - std::countl_zero(to);
  std::uint64_t occ = c2;
  const int sign = excitation_sign(occ, {a, b}, {i, j});
  const double value = ints.v_phys_so(i, j, a, b) - ints.v_phys_so(i, j, b, a);
  return sign * value;
}

Eigen::MatrixXd build_dense_hamiltonian(const OrbitalIntegrals& ints,
                                        const std::vector<SlaterDeterminant>& basis) {
  const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd h(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = i; j < dim; ++j) {
      const double value = matrix_element(basis[i], basis[j], ints);
      h(i, j) = value;
      h(j, i) = value;
    }
  h.diagonal().array() += ints.e0();
  return h;
}

double s_squared(const CiVector& state, int n_orb) {
  int n_alpha = -1, n_beta = -1;
  std::map<SlaterDeterminant, double> raised;
  for (Eigen::Index idx = 0; idx < state.coeffs.size(); ++idx) {
    const SlaterDeterminant& det = state.basis[idx];
    const double coeff = state.coeffs[idx];
    if (n_alpha < 0) {
      n_alpha = popcount(det.alpha);
      n_beta = popcount(det.beta);
    }
    if (coeff == 0.0) continue;
    for (int p = 0; p < n_orb; ++p) {
      const bool beta_occ = (det.beta >> p) & 1;
      const bool alpha_occ = (det.alpha >> p) & 1;
      if (!beta_occ || alpha_occ) continue;
      std::uint64_t occ = det.combined(n_orb);
      const int sign = excitation_sign(occ, {n_orb + p}, {p});
      SlaterDeterminant out;
      out.alpha = occ & ((std::uint64_t(1) << n_orb) - 1);
      out.beta = occ >> n_orb;
      raised[out] += sign * coeff;
    }
  }
  double norm_sq = 0.0;
  for (const auto& [det, c] : raised) norm_sq += c * c;
  const double m = 0.5 * (n_alpha - n_beta);
  return norm_sq + m * (m + 1.0);
}

std::string Spectrum::to_text(int n_orb) const {
  std::ostringstream os;
  os.precision(10);
  os << std::fixed;
  os << "# state  energy_hartree      energy_ev           s_squared   sz\n";
  for (std::size_t s = 0; s < energies.size(); ++s) {
    os << s << "  " << energies[s] << "  " << energies[s] * kHartreeToEv << "  "
       << s_squared[s] << "  " << sz << "\n";
    const CiVector& state = states[s];
    for (Eigen::Index i = 0; i < state.coeffs.size(); ++i) {
      if (std::abs(state.coeffs[i]) < 0.05) continue;
      os << "    " << state.basis[i].to_string(n_orb) << "  " << state.coeffs[i] << "\n";
    }
  }
  return os.str();
}

namespace {

// Sparse Hamiltonian over connected determinants (diagonal, singles,
// doubles per spin channel); deterministic row-major assembly.
Eigen::SparseMatrix<double> build_sparse_hamiltonian(
    const OrbitalIntegrals& ints, const std::vector<SlaterDeterminant>& basis) {
  const int n = ints.n_orb();
  const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
  std::unordered_map<std::uint64_t, Eigen::Index> lookup;
  lookup.reserve(2 * basis.size());
  for (Eigen::Index i = 0; i < dim; ++i)
    lookup.emplace(basis[i].alpha | (basis[i].beta << 32), i);

  auto find = [&](std::uint64_t alpha, std::uint64_t beta) -> Eigen::Index {
    auto it = lookup.find(alpha | (beta << 32));
    return it == lookup.end() ? -1 : it->second;
  };

  std::vector<Eigen::Triplet<double>> entries;
  auto add = [&](Eigen::Index row, Eigen::Index col, double value) {
    if (row >= 0 && value != 0.0) entries.emplace_back(row, col, value);
  };

  auto bits_of = [n](std::uint64_t mask, bool occupied, std::uint64_t ref) {
    std::vector<int> out;
    for (int p = 0; p < n; ++p)
      if (((ref >> p) & 1) == static_cast<std::uint64_t>(occupied)) out.push_back(p);
    (void)mask;
    return out;
  };

  for (Eigen::Index col = 0; col < dim; ++col) {
    const SlaterDeterminant& d = basis[col];
    add(col, col, matrix_element(d, d, ints) + ints.e0());

    const auto occ_a = bits_of(0, true, d.alpha), emp_a = bits_of(0, false, d.alpha);
    const auto occ_b = bits_of(0, true, d.beta), emp_b = bits_of(0, false, d.beta);

    auto connect = [&](const SlaterDeterminant& other) {
      const Eigen::Index row = find(other.alpha, other.beta);
      if (row >= 0 && row != col) add(row, col, matrix_element(other, d, ints));
    };

    for (int p : occ_a)
      for (int q : emp_a) {
        SlaterDeterminant s{d.alpha ^ (std::uint64_t(1) << p) ^ (std::uint64_t(1) << q), d.beta};
        connect(s);
        for (int r : occ_b)
          for (int t : emp_b)
            connect({s.alpha, d.beta ^ (std::uint64_t(1) << r) ^ (std::uint64_t(1) << t)});
        for (int p2 : occ_a)
          for (int q2 : emp_a)
            if (p2 > p && q2 > q)
              connect({s.alpha ^ (std::uint64_t(1) << p2) ^ (std::uint64_t(1) << q2), d.beta});
      }
    for (int r : occ_b)
      for (int t : emp_b) {
        SlaterDeterminant s{d.alpha, d.beta ^ (std::uint64_t(1) << r) ^ (std::uint64_t(1) << t)};
        connect(s);
        for (int r2 : occ_b)
          for (int t2 : emp_b)
            if (r2 > r && t2 > t)
              connect({d.alpha, s.beta ^ (std::uint64_t(1) << r2) ^ (std::uint64_t(1) << t2)});
      }
  }

  Eigen::SparseMatrix<double> h(dim, dim);
  h.setFromTriplets(entries.begin(), entries.end());
  return h;
}

}  // namespace

Spectrum solve(const OrbitalIntegrals& ints, const ActiveSpace& active, int k,
               SolveMethod method) {
  active.validate(ints.n_orb());
  const OrbitalIntegrals h =
      active.n_orb() == ints.n_orb() ? ints : ints.restricted(active.orbitals);
  const auto basis = enumerate_basis(active);
  const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
  if (k < 1 || k > dim)
    throw std::invalid_argument("solve: k outside [1, dimension=" + std::to_string(dim) + "]");

  Eigen::MatrixXd evecs;
  Eigen::VectorXd evals;

  const bool want_davidson = method == SolveMethod::davidson && dim > k + 1;
  bool done = false;
  if (want_davidson) {
    const Eigen::SparseMatrix<double> hmat = build_sparse_hamiltonian(h, basis);
    const Eigen::VectorXd diag = hmat.diagonal();
    DavidsonOptions opts;
    const DavidsonResult result = davidson(
        [&](const Eigen::MatrixXd& block) -> Eigen::MatrixXd { return hmat * block; }, diag, k,
        opts);
    if (result.converged) {
      evals = result.eigenvalues;
      evecs = result.eigenvectors;
      done = true;
    } else if (dim > 2000) {
      throw std::runtime_error("solve: Davidson failed to converge and dimension > 2000");
    }
  }
  if (!done) {
    const Eigen::MatrixXd hmat = build_dense_hamiltonian(h, basis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hmat);
    if (solver.info() != Eigen::Success) throw std::runtime_error("solve: eigensolver failed");
    evals = solver.eigenvalues().head(k);
    evecs = solver.eigenvectors().leftCols(k);
  }

  Spectrum spectrum;
  spectrum.sz = 0.5 * (active.n_alpha - active.n_beta);
  for (int s = 0; s < k; ++s) {
    CiVector state{basis, evecs.col(s)};
    state.coeffs.normalize();
    spectrum.energies.push_back(evals[s]);
    spectrum.s_squared.push_back(s_squared(state, h.n_orb()));
    spectrum.states.push_back(std::move(state));
  }
  return spectrum;
}

}  // namespace qembed
