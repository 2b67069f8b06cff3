#pragma once

#include "tpjc/types.hpp"

namespace tpjc::detail {

// Dense Hermitian eigendecomposition h = vecs * diag(vals) * vecs^H.
// Dispatches to LAPACKE's divide-and-conquer driver for large matrices when
// available (roughly 2x faster than Eigen's tridiagonal QR at dim ~10^3),
// falling back to Eigen otherwise.
void hermitian_eigensolve(const Operator& h, Eigen::VectorXd& vals, Operator& vecs);

} // namespace tpjc::detail
