#include "qembed/pauli.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qembed {

namespace {

constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int popcount(std::uint64_t v) { return std::popcount(v); }

}  // namespace

std::string PauliString::label(int n_qubits) const {
  std::string out(n_qubits, 'I');
  for (int q = 0; q < n_qubits; ++q) {
    const bool bx = (x >> q) & 1, bz = (z >> q) & 1;
    char letter = 'I';
    if (bx && bz)
      letter = 'Y';
    else if (bx)
      letter = 'X';
    else if (bz)
      letter = 'Z';
    out[n_qubits - 1 - q] = letter;
  }
  return out;
}

PauliString PauliString::from_label(const std::string& label) {
  PauliString p;
  const int n = static_cast<int>(label.size());
  for (int pos = 0; pos < n; ++pos) {
    const int q = n - 1 - pos;
    switch (label[pos]) {
      case 'I':
        break;
      case 'X':
        p.x |= std::uint64_t(1) << q;
        break;
      case 'Y':
        p.x |= std::uint64_t(1) << q;
        p.z |= std::uint64_t(1) << q;
        break;
      case 'Z':
        p.z |= std::uint64_t(1) << q;
        break;
      default:
        throw std::runtime_error(std::string("invalid Pauli letter '") + label[pos] + "'");
    }
  }
  return p;
}

PauliOperator::PauliOperator(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 64)
    throw std::invalid_argument("PauliOperator: qubit count outside [0, 64]");
}

PauliOperator PauliOperator::identity(int n_qubits, Coeff coeff) {
  PauliOperator op(n_qubits);
  op.add_term(PauliString{}, coeff);
  return op;
}

PauliOperator PauliOperator::single(int n_qubits, char letter, int qubit, Coeff coeff) {
  if (qubit < 0 || qubit >= n_qubits) throw std::invalid_argument("qubit index out of range");
  PauliString p;
  const std::uint64_t bit = std::uint64_t(1) << qubit;
  switch (letter) {
    case 'I':
      break;
    case 'X':
      p.x = bit;
      break;
    case 'Y':
      p.x = bit;
      p.z = bit;
      break;
    case 'Z':
      p.z = bit;
      break;
    default:
      throw std::invalid_argument("Pauli letter must be one of I, X, Y, Z");
  }
  PauliOperator op(n_qubits);
  op.add_term(p, coeff);
  return op;
}

void PauliOperator::add_term(const PauliString& p, Coeff coeff) {
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) it->second += coeff;
}

PauliOperator::Coeff PauliOperator::coefficient(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Coeff{0.0, 0.0} : it->second;
}

void PauliOperator::check_compatible(const PauliOperator& other) const {
  if (n_qubits_ != other.n_qubits_)
    throw std::invalid_argument("PauliOperator: qubit-count mismatch (" +
                                std::to_string(n_qubits_) + " vs " +
                                std::to_string(other.n_qubits_) + ")");
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& other) {
  check_compatible(other);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& other) {
  check_compatible(other);
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

PauliOperator& PauliOperator::operator*=(Coeff scale) {
  for (auto& [p, c] : terms_) c *= scale;
  return *this;
}

PauliOperator PauliOperator::operator*(const PauliOperator& other) const {
  check_compatible(other);
  PauliOperator out(n_qubits_);
  for (const auto& [a, ca] : terms_) {
    const int eps_a = popcount(a.x & a.z);
    for (const auto& [b, cb] : other.terms_) {
      PauliString p{a.x ^ b.x, a.z ^ b.z};
      // literal(a) * literal(b) = i^phase * literal(p), with
      // phase = eps(a) + eps(b) - eps(p) + 2*|z_a & x_b|  (mod 4).
      const int eps_b = popcount(b.x & b.z);
      const int eps_p = popcount(p.x & p.z);
      const int phase = ((eps_a + eps_b - eps_p + 2 * popcount(a.z & b.x)) % 4 + 4) % 4;
      out.add_term(p, ca * cb * kIPowers[phase]);
    }
  }
  return out;
}

PauliOperator PauliOperator::dagger() const {
  PauliOperator out(n_qubits_);
  for (const auto& [p, c] : terms_) out.add_term(p, std::conj(c));
  return out;
}

PauliOperator& PauliOperator::simplify(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol)
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

bool PauliOperator::is_hermitian(double tol) const {
  return max_imag_coefficient() < tol;
}

double PauliOperator::max_imag_coefficient() const {
  double m = 0.0;
  for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c.imag()));
  return m;
}

Eigen::MatrixXcd PauliOperator::to_dense() const {
  if (n_qubits_ > 14)
    throw std::invalid_argument("to_dense: refusing to materialize > 14 qubits");
  const std::size_t dim = std::size_t(1) << n_qubits_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : terms_) {
    const Coeff front = c * kIPowers[popcount(p.x & p.z) % 4];
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t row = col ^ p.x;
      const double sign = (popcount(col & p.z) & 1) ? -1.0 : 1.0;
      m(row, col) += front * sign;
    }
  }
  return m;
}

std::string PauliOperator::to_text() const {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [p, c] : terms_) {
    os << c.real();
    if (c.imag() != 0.0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    os << " " << p.label(n_qubits_) << "\n";
  }
  return os.str();
}

PauliOperator PauliOperator::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n_qubits = -1;
  PauliOperator op(0);
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string coeff_token, label;
    if (!(ls >> coeff_token >> label))
      throw std::runtime_error("operator text: expected 'coefficient label' per line");
    double re = 0, im = 0;
    const auto ipos = coeff_token.find('i');
    if (ipos != std::string::npos) {
      // forms like "0.5+0.25i" or "-1i"
      std::string body = coeff_token.substr(0, ipos);
      std::size_t split = body.find_last_of("+-");
      if (split == std::string::npos || split == 0)
        throw std::runtime_error("operator text: cannot parse complex coefficient");
      re = std::stod(body.substr(0, split));
      im = std::stod(body.substr(split));
    } else {
      re = std::stod(coeff_token);
    }
    if (first) {
      n_qubits = static_cast<int>(label.size());
      op = PauliOperator(n_qubits);
      first = false;
    } else if (static_cast<int>(label.size()) != n_qubits) {
      throw std::runtime_error("operator text: inconsistent label lengths");
    }
    op.add_term(PauliString::from_label(label), {re, im});
  }
  if (first) throw std::runtime_error("operator text: no terms");
  return op;
}

Eigen::VectorXd dense_spectrum(const PauliOperator& op) {
  Eigen::MatrixXcd m = op.to_dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense_spectrum: eigensolver failed");
  return solver.eigenvalues();
}

}  // namespace qembed
