#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qembed/screening.hpp"

namespace qembed {

namespace {

using nlohmann::json;

Eigen::MatrixXd parse_matrix(const json& rows, const std::string& what) {
  if (!rows.is_array() || rows.empty())
    throw std::runtime_error("host config: " + what + " must be a non-empty array of rows");
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXd m(n, static_cast<int>(rows[0].size()));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw std::runtime_error("host config: ragged " + what + " matrix");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j].get<double>();
  }
  return m;
}

}  // namespace

HostConfig load_host_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open host config: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw std::runtime_error("host config " + path + ": " + err.what());
  }

  const int n_sites = doc.at("sites").get<int>();
  if (n_sites < 1) throw std::runtime_error("host config: sites must be >= 1");

  // One-body matrix, either explicit or assembled from hoppings/onsite.
  Eigen::MatrixXd h0;
  const json& one_body = doc.at("one_body");
  if (one_body.contains("matrix")) {
    h0 = parse_matrix(one_body["matrix"], "one_body");
    if (h0.rows() != n_sites || h0.cols() != n_sites)
      throw std::runtime_error("host config: one_body matrix must be sites x sites");
  } else {
    h0 = Eigen::MatrixXd::Zero(n_sites, n_sites);
    if (one_body.contains("onsite")) {
      const auto& onsite = one_body["onsite"];
      if (static_cast<int>(onsite.size()) != n_sites)
        throw std::runtime_error("host config: onsite length must equal sites");
      for (int i = 0; i < n_sites; ++i) h0(i, i) = onsite[i].get<double>();
    }
    if (one_body.contains("hoppings")) {
      for (const auto& hop : one_body["hoppings"]) {
        if (hop.size() != 3) throw std::runtime_error("host config: hopping needs [i, j, t]");
        const int i = hop[0].get<int>(), j = hop[1].get<int>();
        if (i < 0 || j < 0 || i >= n_sites || j >= n_sites)
          throw std::runtime_error("host config: hopping site out of range");
        const double t = hop[2].get<double>();
        h0(i, j) += t;
        if (i != j) h0(j, i) += t;
      }
    }
  }

  Eigen::MatrixXd v_bare;
  const json& vb = doc.at("v_bare");
  if (vb.contains("matrix")) {
    v_bare = parse_matrix(vb["matrix"], "v_bare");
    if (v_bare.rows() != n_sites || v_bare.cols() != n_sites)
      throw std::runtime_error("host config: v_bare matrix must be sites x sites");
  } else if (vb.contains("softened_coulomb")) {
    // v_pq = u0 / sqrt(1 + (|p - q| / r0)^2) on the site chain.
    const json& sc = vb["softened_coulomb"];
    const double u0 = sc.at("u0").get<double>();
    const double r0 = sc.value("screening_length", 1.0);
    if (r0 <= 0) throw std::runtime_error("host config: screening_length must be positive");
    v_bare.resize(n_sites, n_sites);
    for (int p = 0; p < n_sites; ++p)
      for (int q = 0; q < n_sites; ++q) {
        const double d = std::abs(p - q) / r0;
        v_bare(p, q) = u0 / std::sqrt(1.0 + d * d);
      }
  } else {
    throw std::runtime_error("host config: v_bare needs 'matrix' or 'softened_coulomb'");
  }

  const int n_electrons = doc.at("n_electrons").get<int>();

  HostConfig config;
  config.host = ModelHost::from_one_body(h0, v_bare, n_electrons);
  if (doc.contains("active_orbitals"))
    for (const auto& idx : doc["active_orbitals"]) config.active_orbitals.push_back(idx.get<int>());
  config.dc_scheme = dc_scheme_from_string(doc.value("dc_scheme", "none"));
  return config;
}

}  // namespace qembed
