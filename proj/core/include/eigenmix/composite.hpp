#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eigenmix/eig.hpp"
#include "eigenmix/linalg.hpp"

namespace eigenmix {

/// Pure state of a bipartite system, stored as the dim_a x dim_b amplitude
/// grid (row-major; composite index i * dim_b + j). Frobenius norm 1.
class BipartiteState {
  public:
    BipartiteState(std::size_t dim_a, std::size_t dim_b,
                   std::vector<Complex> amplitudes);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    const Complex& at(std::size_t i, std::size_t j) const {
        return amplitudes_[i * dim_b_ + j];
    }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

  private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    std::vector<Complex> amplitudes_;
};

/// Validated density operator: Hermitian within 1e-12, trace 1 within 1e-12,
/// smallest eigenvalue >= -1e-10.
class DensityMatrix {
  public:
    explicit DensityMatrix(OperatorMatrix m);

    std::size_t dim() const { return matrix_.dim(); }
    const OperatorMatrix& matrix() const { return matrix_; }

  private:
    OperatorMatrix matrix_;
};

/// Which factor a partial trace keeps.
enum class Side { a, b };

/// Decomposition of a pure bipartite state into a single sum of orthonormal
/// product pairs with nonnegative coefficients (descending; negligible ones
/// below 1e-12 dropped). sum coefficients^2 = 1.
struct SchmidtForm {
    std::vector<double> coefficients;
    std::vector<Ket> left_vectors;
    std::vector<Ket> right_vectors;
};

/// Kronecker product; component (i * dim_b + j) = a_i b_j.
Ket tensor(const Ket& a, const Ket& b);

/// Reduced density matrix of a pure state: keep A gives G G+, keep B gives
/// G^T conj(G) for the amplitude grid G.
DensityMatrix partial_trace(const BipartiteState& state, Side keep);

/// Reduced density matrix of a composite-space density operator whose
/// dimension factors as dim_a * dim_b.
DensityMatrix partial_trace(const OperatorMatrix& dm, Side keep,
                            std::size_t dim_a, std::size_t dim_b);

/// Schmidt form via one-sided Jacobi SVD of the amplitude grid.
SchmidtForm schmidt(const BipartiteState& state);

/// -sum lambda ln lambda (natural log, 0 ln 0 := 0; eigenvalues below 1e-14
/// treated as zero, roundoff negatives in [-1e-10, 0) clamped).
double von_neumann_entropy(const DensityMatrix& dm);

/// |S(rho_A) - S(rho_B)|; vanishes for every pure bipartite state.
double entropy_equality_gap(const BipartiteState& state);

/// trace(rho^2), in (0, 1]; 1 exactly for pure states.
double purity(const DensityMatrix& dm);

}  // namespace eigenmix
