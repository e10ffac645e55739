#include "symmetric_eigen.hpp"

#include <lapacke.h>

#include <string>
#include <vector>

#include "cra/errors.hpp"

namespace cra::detail {
namespace {

void check(lapack_int info, const char* routine) {
    if (info != 0) {
        throw SolverError(std::string(routine) + " failed with info=" + std::to_string(info));
    }
}

}  // namespace

Eigen::VectorXd symmetric_eigenvalues(Eigen::MatrixXd a) {
    const auto n = static_cast<lapack_int>(a.rows());
    Eigen::VectorXd w(n);
    check(LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data()), "dsyevd");
    return w;
}

EigenPairs symmetric_eigenpairs(Eigen::MatrixXd a) {
    const auto n = static_cast<lapack_int>(a.rows());
    EigenPairs out{Eigen::VectorXd(n), {}};
    check(LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, out.values.data()), "dsyevd");
    out.vectors = std::move(a);
    return out;
}

EigenPairs symmetric_eigenpairs_in_range(Eigen::MatrixXd a, double lo, double hi) {
    const auto n = static_cast<lapack_int>(a.rows());
    lapack_int found = 0;
    Eigen::VectorXd w(n);
    Eigen::MatrixXd z(n, n);
    std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
    check(LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'V', 'L', n, a.data(), n, lo, hi, 0, 0, 0.0,
                         &found, w.data(), z.data(), n, support.data()),
          "dsyevr");
    return {w.head(found), z.leftCols(found)};
}

}  // namespace cra::detail
