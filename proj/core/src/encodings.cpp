#include "qembed/encodings.hpp"

#include <bit>
#include <stdexcept>

namespace qembed {

namespace {

// Bravyi-Kitaev encoder matrix for dimension 2^k, as row masks
// (row r = set of modes whose occupations are xor-ed into qubit r).
// beta_1 = [1]; beta_{2m} stacks two copies and ors the full lower half
// into the last row.
std::vector<std::uint64_t> bk_matrix(int n) {
  int size = 1;
  std::vector<std::uint64_t> rows{1};
  while (size < n) {
    std::vector<std::uint64_t> next(2 * size, 0);
    for (int r = 0; r < size; ++r) {
      next[r] = rows[r];
      next[size + r] = rows[r] << size;
    }
    std::uint64_t full = 0;
    for (int c = 0; c < 2 * size; ++c) full |= std::uint64_t(1) << c;
    next[2 * size - 1] = full;
    rows = std::move(next);
    size *= 2;
  }
  rows.resize(n);
  // Truncate columns past n (upper-left block of the power-of-two matrix).
  std::uint64_t col_mask = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  for (auto& r : rows) r &= col_mask;
  return rows;
}

// Inverts a binary matrix given as row masks (mod-2 Gaussian elimination).
std::vector<std::uint64_t> invert_gf2(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::uint64_t> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = std::uint64_t(1) << i;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if ((rows[r] >> col) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("encoder matrix not invertible");
    std::swap(rows[col], rows[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int r = 0; r < n; ++r)
      if (r != col && ((rows[r] >> col) & 1)) {
        rows[r] ^= rows[col];
        inv[r] ^= inv[col];
      }
  }
  return inv;
}

PauliOperator z_set(int n_qubits, std::uint64_t mask, std::complex<double> coeff) {
  PauliOperator op(n_qubits);
  op.add_term(PauliString{0, mask}, coeff);
  return op;
}

}  // namespace

Encoding encoding_from_string(const std::string& name) {
  if (name == "jw" || name == "jordan-wigner" || name == "jordan_wigner")
    return Encoding::jordan_wigner;
  if (name == "parity") return Encoding::parity;
  if (name == "bk" || name == "bravyi-kitaev" || name == "bravyi_kitaev")
    return Encoding::bravyi_kitaev;
  throw std::invalid_argument("unsupported encoding name: " + name);
}

std::string to_string(Encoding encoding) {
  switch (encoding) {
    case Encoding::jordan_wigner:
      return "jw";
    case Encoding::parity:
      return "parity";
    case Encoding::bravyi_kitaev:
      return "bk";
  }
  return "?";
}

FermionEncoding::FermionEncoding(Encoding kind, int n_modes)
    : kind_(kind), n_modes_(n_modes) {
  if (n_modes < 1 || n_modes > 62)
    throw std::invalid_argument("FermionEncoding: mode count outside [1, 62]");

  // Row masks of the encoder matrix A (qubit r stores parity of rows[r]).
  std::vector<std::uint64_t> rows(n_modes);
  switch (kind) {
    case Encoding::jordan_wigner:
      for (int r = 0; r < n_modes; ++r) rows[r] = std::uint64_t(1) << r;
      break;
    case Encoding::parity:
      for (int r = 0; r < n_modes; ++r) rows[r] = (std::uint64_t(1) << (r + 1)) - 1;
      break;
    case Encoding::bravyi_kitaev:
      rows = bk_matrix(n_modes);
      break;
  }

  update_.assign(n_modes, 0);
  for (int r = 0; r < n_modes; ++r)
    for (int c = 0; c < n_modes; ++c)
      if ((rows[r] >> c) & 1) update_[c] |= std::uint64_t(1) << r;

  const std::vector<std::uint64_t> inv = invert_gf2(rows);
  occupation_ = inv;
  prefix_.assign(n_modes, 0);
  std::uint64_t acc = 0;
  for (int m = 0; m < n_modes; ++m) {
    prefix_[m] = acc;
    acc ^= inv[m];
  }
}

std::uint64_t FermionEncoding::encode_occupation(std::uint64_t occupation) const {
  std::uint64_t bits = 0;
  for (int m = 0; m < n_modes_; ++m)
    if ((occupation >> m) & 1) bits ^= update_[m];
  return bits;
}

PauliOperator FermionEncoding::creation(int mode) const {
  // a+_m = X[update] * Z[prefix] * (I + Z[occupation]) / 2; the diagonal
  // factors act before the flip.
  PauliOperator flip(n_modes_);
  flip.add_term(PauliString{update_[mode], 0}, 1.0);
  PauliOperator diag =
      z_set(n_modes_, prefix_[mode], 0.5) + z_set(n_modes_, prefix_[mode] ^ occupation_[mode], 0.5);
  return (flip * diag).simplify();
}

PauliOperator FermionEncoding::annihilation(int mode) const {
  PauliOperator flip(n_modes_);
  flip.add_term(PauliString{update_[mode], 0}, 1.0);
  PauliOperator diag =
      z_set(n_modes_, prefix_[mode], 0.5) - z_set(n_modes_, prefix_[mode] ^ occupation_[mode], 0.5);
  return (flip * diag).simplify();
}

PauliOperator map_hamiltonian(const OrbitalIntegrals& ints, const ActiveSpace& active,
                              Encoding encoding) {
  const OrbitalIntegrals h = active.n_orb() == ints.n_orb()
                                 ? ints
                                 : ints.restricted(active.orbitals);
  const int n_orb = h.n_orb();
  const int n_modes = 2 * n_orb;
  const FermionEncoding enc(encoding, n_modes);

  std::vector<PauliOperator> cr, an;
  cr.reserve(n_modes);
  an.reserve(n_modes);
  for (int m = 0; m < n_modes; ++m) {
    cr.push_back(enc.creation(m));
    an.push_back(enc.annihilation(m));
  }

  PauliOperator ham = PauliOperator::identity(n_modes, h.e0());
  for (int p = 0; p < n_modes; ++p)
    for (int q = 0; q < n_modes; ++q) {
      const double hpq = h.h_so(p, q);
      if (hpq == 0.0) continue;
      ham += (cr[p] * an[q]) * std::complex<double>(hpq);
    }

  // 1/2 sum v_phys(p,q,r,s) a+_p a+_q a_r a_s with v_phys(p,q,r,s) = <pq|sr>.
  for (int p = 0; p < n_modes; ++p)
    for (int q = 0; q < n_modes; ++q) {
      if (p == q) continue;
      const PauliOperator cpcq = cr[p] * cr[q];
      for (int r = 0; r < n_modes; ++r)
        for (int s = 0; s < n_modes; ++s) {
          if (r == s) continue;
          const double vpqrs = h.v_phys_so(p, q, s, r);
          if (vpqrs == 0.0) continue;
          ham += (cpcq * an[r] * an[s]) * std::complex<double>(0.5 * vpqrs);
        }
      ham.simplify();
    }
  ham.simplify();
  return ham;
}

namespace {

PauliOperator taper_impl(const PauliOperator& op, int n_alpha_parity, int n_beta_parity,
                         bool project) {
  if (std::abs(n_alpha_parity) != 1 || std::abs(n_beta_parity) != 1)
    throw std::invalid_argument("taper_parity: parities must be +1 or -1");
  const int n = op.n_qubits();
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("taper_parity: expects a 2*n_orb qubit operator, n_orb >= 2");
  const int q_alpha = n / 2 - 1;
  const int q_total = n - 1;
  const double z_alpha = n_alpha_parity;
  const double z_total = n_alpha_parity * n_beta_parity;

  const std::uint64_t bit_alpha = std::uint64_t(1) << q_alpha;
  const std::uint64_t bit_total = std::uint64_t(1) << q_total;
  const std::uint64_t low_mask = bit_alpha - 1;
  const std::uint64_t mid_mask = (bit_total - 1) & ~(bit_alpha | low_mask);

  PauliOperator out(n - 2);
  for (const auto& [p, c] : op.terms()) {
    if (p.x & (bit_alpha | bit_total)) {
      if (project) continue;
      throw std::runtime_error(
          "taper_parity: operator does not commute with a tapering Z (symmetry violation)");
    }
    std::complex<double> coeff = c;
    if (p.z & bit_alpha) coeff *= z_alpha;
    if (p.z & bit_total) coeff *= z_total;
    auto compact = [&](std::uint64_t mask) {
      return (mask & low_mask) | ((mask & mid_mask) >> 1);
    };
    out.add_term(PauliString{compact(p.x), compact(p.z)}, coeff);
  }
  return out.simplify();
}

}  // namespace

PauliOperator taper_parity(const PauliOperator& op, int n_alpha_parity, int n_beta_parity) {
  return taper_impl(op, n_alpha_parity, n_beta_parity, false);
}

PauliOperator taper_parity_project(const PauliOperator& op, int n_alpha_parity,
                                   int n_beta_parity) {
  return taper_impl(op, n_alpha_parity, n_beta_parity, true);
}

std::uint64_t taper_bits(std::uint64_t qubit_bits, int n_qubits) {
  const int q_alpha = n_qubits / 2 - 1;
  const std::uint64_t bit_alpha = std::uint64_t(1) << q_alpha;
  const std::uint64_t low_mask = bit_alpha - 1;
  const std::uint64_t bit_total = std::uint64_t(1) << (n_qubits - 1);
  const std::uint64_t mid_mask = (bit_total - 1) & ~(bit_alpha | low_mask);
  return (qubit_bits & low_mask) | ((qubit_bits & mid_mask) >> 1);
}

}  // namespace qembed
