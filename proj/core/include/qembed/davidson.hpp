#pragma once

#include <functional>

#include <Eigen/Dense>

namespace qembed {

struct DavidsonOptions {
  int max_subspace = 30;
  int restart_size = 5;
  int max_iterations = 200;
  double residual_tol = 1e-8;
};

struct DavidsonResult {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  bool converged = false;
  int iterations = 0;
};

/// Block Davidson for the k lowest eigenpairs of a symmetric operator,
/// with diagonal preconditioning. The matvec maps a block of column
/// vectors to the operator image.
DavidsonResult davidson(const std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>& matvec,
                        const Eigen::VectorXd& diagonal, int k, const DavidsonOptions& options);

}  // namespace qembed
