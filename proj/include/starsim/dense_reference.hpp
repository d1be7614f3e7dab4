#pragma once

#include <Eigen/Dense>

#include "starsim/sparse_hermitian.hpp"

namespace starsim {

using DenseMatrix = Eigen::MatrixXcd;

DenseMatrix to_dense(const SparseHermitian& h);

/// e^{-i H t} from a dense Hermitian eigendecomposition. Throws when the
/// input is visibly non-Hermitian or larger than 4096.
DenseMatrix dense_expm(const DenseMatrix& h, double t);
DenseMatrix dense_expm(const SparseHermitian& h, double t);

StateVector apply_operator(const DenseMatrix& u, const StateVector& v);

/// Largest singular value (via the eigenvalues of M^dag M).
double operator_norm(const DenseMatrix& m);

/// max |(U^dag U - I)_ij|.
double unitarity_defect(const DenseMatrix& u);

struct ErrorMetrics {
  double trace_distance;  // pure states: sqrt(1 - |<a|b>|^2)
  double infidelity;      // 1 - |<a|b>|^2
  double norm_error;      // || a - b ||_2
};

ErrorMetrics compare_states(const StateVector& a, const StateVector& b);

/// Spectral norm of A - B.
double compare_operators(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace starsim
