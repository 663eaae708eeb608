#pragma once

#include <vector>

#include "eigenmix/linalg.hpp"

namespace eigenmix {

/// Full spectral decomposition of a Hermitian matrix.
struct HermitianEigenResult {
    std::vector<double> eigenvalues;  ///< real, sorted descending
    std::vector<Ket> eigenvectors;    ///< orthonormal, same order
    double residual;                  ///< max_k |M v_k - lambda_k v_k|
};

/// Cyclic complex Jacobi eigensolver. Serves as the independent numerical
/// oracle the closed-form paths are checked against, so it deliberately
/// shares no code with them.
///
/// Convergence: off-diagonal Frobenius mass <= 1e-14 relative to the input
/// scale, within a budget of 100 sweeps. Throws ValidationError if the input
/// is not Hermitian within 1e-10, NumericalError if the budget is exhausted.
HermitianEigenResult hermitian_eig(const OperatorMatrix& m);

}  // namespace eigenmix
