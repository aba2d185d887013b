#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qembed/integrals.hpp"

namespace qembed {

namespace {

constexpr double kConflictTol = 1e-10;

[[noreturn]] void fail(const std::string& path, int line_no, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
}

// Pulls "KEY=value" out of the header block; commas and whitespace separate.
bool header_value(const std::string& header, const std::string& key, long& out) {
  std::size_t pos = 0;
  while ((pos = header.find(key, pos)) != std::string::npos) {
    const std::size_t after = pos + key.size();
    // Reject partial matches such as "ORBNORB".
    if (pos > 0 && (std::isalnum(static_cast<unsigned char>(header[pos - 1])))) {
      pos = after;
      continue;
    }
    std::size_t eq = after;
    while (eq < header.size() && std::isspace(static_cast<unsigned char>(header[eq]))) ++eq;
    if (eq >= header.size() || header[eq] != '=') {
      pos = after;
      continue;
    }
    ++eq;
    return std::sscanf(header.c_str() + eq, "%ld", &out) == 1;
  }
  return false;
}

}  // namespace

FcidumpData read_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open FCIDUMP file: " + path);

  std::string line;
  std::string header;
  int line_no = 0;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++line_no;
    header += line + "\n";
    if (line.find("&END") != std::string::npos || line.find("/") != std::string::npos) {
      header_done = true;
      break;
    }
    if (line_no > 100) fail(path, line_no, "header not terminated by &END or /");
  }
  if (!header_done) fail(path, line_no, "unexpected end of file inside header");
  if (header.find("&FCI") == std::string::npos)
    fail(path, 1, "missing &FCI header");

  long norb = 0, nelec = 0, ms2 = 0;
  if (!header_value(header, "NORB", norb) || norb < 1)
    fail(path, 1, "missing or invalid NORB in header");
  header_value(header, "NELEC", nelec);
  header_value(header, "MS2", ms2);

  const int n = static_cast<int>(norb);
  FcidumpData data{OrbitalIntegrals(n), static_cast<int>(nelec), static_cast<int>(ms2)};
  OrbitalIntegrals& ints = data.ints;

  std::vector<char> v_set(static_cast<std::size_t>(n) * n * n * n, 0);
  Eigen::Matrix<char, Eigen::Dynamic, Eigen::Dynamic> t_set =
      Eigen::Matrix<char, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  bool e0_set = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    double value;
    long i, j, k, l;
    if (!(ls >> value)) {
      // Skip blank lines.
      std::string rest;
      ls.clear();
      ls >> rest;
      if (rest.empty()) continue;
      fail(path, line_no, "cannot parse integral value");
    }
    if (!(ls >> i >> j >> k >> l)) fail(path, line_no, "expected four indices after value");
    std::string trailing;
    if (ls >> trailing) fail(path, line_no, "trailing content after indices");

    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (e0_set && std::abs(ints.e0() - value) > kConflictTol)
        fail(path, line_no, "conflicting scalar energy entries");
      ints.set_e0(value);
      e0_set = true;
      continue;
    }
    if (i < 0 || j < 0 || k < 0 || l < 0 || i > n || j > n || k > n || l > n)
      fail(path, line_no, "orbital index out of range 1.." + std::to_string(n));

    if (k == 0 && l == 0) {
      if (i == 0 || j == 0) fail(path, line_no, "one-body entry needs two nonzero indices");
      const int a = static_cast<int>(i) - 1, b = static_cast<int>(j) - 1;
      if ((t_set(a, b) && std::abs(ints.t(a, b) - value) > kConflictTol) ||
          (t_set(b, a) && std::abs(ints.t(b, a) - value) > kConflictTol))
        fail(path, line_no, "non-Hermitian one-body input beyond 1e-10");
      ints.set_t(a, b, value);
      t_set(a, b) = t_set(b, a) = 1;
      continue;
    }
    if (i == 0 || j == 0 || k == 0 || l == 0)
      fail(path, line_no, "two-body entry needs four nonzero indices");

    const int a = static_cast<int>(i) - 1, b = static_cast<int>(j) - 1,
              c = static_cast<int>(k) - 1, d = static_cast<int>(l) - 1;
    const std::size_t slots[8] = {
        ints.index(a, b, c, d), ints.index(b, a, c, d), ints.index(a, b, d, c),
        ints.index(b, a, d, c), ints.index(c, d, a, b), ints.index(d, c, a, b),
        ints.index(c, d, b, a), ints.index(d, c, b, a)};
    for (std::size_t s : slots)
      if (v_set[s] && std::abs(ints.v(a, b, c, d) - value) > kConflictTol)
        fail(path, line_no, "two-body entry conflicts with its 8-fold symmetry image");
    ints.set_v(a, b, c, d, value);
    for (std::size_t s : slots) v_set[s] = 1;
  }
  return data;
}

OrbitalIntegrals load_fcidump(const std::string& path) { return read_fcidump(path).ints; }

void write_fcidump(const OrbitalIntegrals& ints, const std::string& path, int n_electrons,
                   int ms2) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  const int n = ints.n_orb();
  out << "&FCI NORB=" << n << ",NELEC=" << n_electrons << ",MS2=" << ms2 << ",\n ORBSYM=";
  for (int i = 0; i < n; ++i) out << "1,";
  out << "\n ISYM=1,\n&END\n";

  char buf[128];
  auto emit = [&](double value, int i, int j, int k, int l) {
    std::snprintf(buf, sizeof(buf), "%25.16E %3d %3d %3d %3d\n", value, i, j, k, l);
    out << buf;
  };

  // Canonical two-body loop: i>=j, k>=l, pair(ij) >= pair(kl).
  auto pair_id = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) {
          if (pair_id(i, j) < pair_id(k, l)) continue;
          const double value = ints.v(i, j, k, l);
          if (value != 0.0) emit(value, i + 1, j + 1, k + 1, l + 1);
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (ints.t(i, j) != 0.0) emit(ints.t(i, j), i + 1, j + 1, 0, 0);
  emit(ints.e0(), 0, 0, 0, 0);
}

}  // namespace qembed
