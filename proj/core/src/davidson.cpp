#include "qembed/davidson.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qembed {

namespace {

// Gram-Schmidt against the columns of basis, twice for stability.
// Returns false when the vector lies in the span.
bool orthonormalize_against(const Eigen::MatrixXd& basis, int n_cols, Eigen::VectorXd& v) {
  for (int pass = 0; pass < 2; ++pass)
    for (int c = 0; c < n_cols; ++c) v -= basis.col(c).dot(v) * basis.col(c);
  const double norm = v.norm();
  if (norm < 1e-10) return false;
  v /= norm;
  return true;
}

}  // namespace

DavidsonResult davidson(const std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>& matvec,
                        const Eigen::VectorXd& diagonal, int k, const DavidsonOptions& options) {
  const Eigen::Index dim = diagonal.size();
  DavidsonResult result;

  // Seed with unit vectors on the k smallest diagonal entries.
  std::vector<Eigen::Index> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index a, Eigen::Index b) { return diagonal[a] < diagonal[b]; });

  const int max_sub = std::max(options.max_subspace, k + 2);
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(dim, max_sub);
  Eigen::MatrixXd images = Eigen::MatrixXd::Zero(dim, max_sub);
  int n_basis = std::min<int>(k, static_cast<int>(dim));
  for (int c = 0; c < n_basis; ++c) basis(order[c], c) = 1.0;
  images.leftCols(n_basis) = matvec(basis.leftCols(n_basis));

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    result.iterations = iter + 1;
    const Eigen::MatrixXd t =
        basis.leftCols(n_basis).transpose() * images.leftCols(n_basis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(0.5 * (t + t.transpose()));
    const Eigen::VectorXd theta = small.eigenvalues().head(k);
    const Eigen::MatrixXd y = small.eigenvectors().leftCols(k);

    const Eigen::MatrixXd ritz = basis.leftCols(n_basis) * y;
    const Eigen::MatrixXd ritz_images = images.leftCols(n_basis) * y;

    bool all_converged = true;
    std::vector<Eigen::VectorXd> corrections;
    for (int s = 0; s < k; ++s) {
      Eigen::VectorXd residual = ritz_images.col(s) - theta[s] * ritz.col(s);
      if (residual.norm() < options.residual_tol) continue;
      all_converged = false;
      for (Eigen::Index i = 0; i < dim; ++i) {
        double denom = theta[s] - diagonal[i];
        if (std::abs(denom) < 1e-8) denom = (denom < 0 ? -1e-8 : 1e-8);
        residual[i] /= denom;
      }
      corrections.push_back(std::move(residual));
    }

    if (all_converged) {
      result.eigenvalues = theta;
      result.eigenvectors = ritz;
      result.converged = true;
      return result;
    }

    if (n_basis + static_cast<int>(corrections.size()) > max_sub ||
        n_basis >= static_cast<int>(dim)) {
      // Restart from the best Ritz vectors.
      const int keep = std::min({options.restart_size + k, n_basis, max_sub});
      const Eigen::MatrixXd kept =
          basis.leftCols(n_basis) * small.eigenvectors().leftCols(keep);
      basis.setZero();
      n_basis = 0;
      for (int c = 0; c < keep; ++c) {
        Eigen::VectorXd v = kept.col(c);
        if (orthonormalize_against(basis, n_basis, v)) basis.col(n_basis++) = v;
      }
      images.leftCols(n_basis) = matvec(basis.leftCols(n_basis));
      continue;
    }

    int added = 0;
    for (auto& correction : corrections) {
      if (n_basis + added >= static_cast<int>(dim)) break;
      if (orthonormalize_against(basis, n_basis + added, correction))
        basis.col(n_basis + added++) = correction;
    }
    if (added == 0) break;  // stalled
    images.middleCols(n_basis, added) = matvec(basis.middleCols(n_basis, added));
    n_basis += added;
  }

  // Not converged: report the current Ritz estimate.
  const Eigen::MatrixXd t = basis.leftCols(n_basis).transpose() * images.leftCols(n_basis);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(0.5 * (t + t.transpose()));
  result.eigenvalues = small.eigenvalues().head(k);
  result.eigenvectors = basis.leftCols(n_basis) * small.eigenvectors().leftCols(k);
  result.converged = false;
  return result;
}

}  // namespace qembed
