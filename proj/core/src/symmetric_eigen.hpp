#pragma once

#include <Eigen/Dense>

namespace cra::detail {

struct EigenPairs {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;  // columns
};

// Dense real symmetric eigensolvers (LAPACK divide-and-conquer / MRRR).
Eigen::VectorXd symmetric_eigenvalues(Eigen::MatrixXd a);
EigenPairs symmetric_eigenpairs(Eigen::MatrixXd a);
// Eigenpairs with eigenvalue in (lo, hi].
EigenPairs symmetric_eigenpairs_in_range(Eigen::MatrixXd a, double lo, double hi);

}  // namespace cra::detail
