#include "eigensolve.hpp"

#include <stdexcept>

#if defined(TPJC_HAVE_LAPACKE)
#include <lapacke.h>
#endif

namespace tpjc::detail {

namespace {

void eigen_fallback(const Operator& h, Eigen::VectorXd& vals, Operator& vecs) {
    Eigen::SelfAdjointEigenSolver<Operator> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigensolve: eigendecomposition failed");
    }
    vals = solver.eigenvalues();
    vecs = solver.eigenvectors();
}

} // namespace

void hermitian_eigensolve(const Operator& h, Eigen::VectorXd& vals, Operator& vecs) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("hermitian_eigensolve: matrix must be square");
    }
    const int n = static_cast<int>(h.rows());
#if defined(TPJC_HAVE_LAPACKE)
    if (n >= 256) {
        vecs = h;  // zheevd overwrites its input with the eigenvectors
        vals.resize(n);
        const lapack_int info = LAPACKE_zheevd(
            LAPACK_COL_MAJOR, 'V', 'L', n,
            reinterpret_cast<lapack_complex_double*>(vecs.data()), n, vals.data());
        if (info == 0) {
            return;
        }
        // Rare convergence failure: retry with the QR-based fallback.
    }
#endif
    eigen_fallback(h, vals, vecs);
}

} // namespace tpjc::detail
