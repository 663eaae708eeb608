#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eigenmix/linalg.hpp"
#include "eigenmix/random.hpp"

namespace eigenmix {

/// Statistical mixture of two weighted rank-1 projectors built from
/// normalized, linearly independent kets. The trace-normalization constraint
/// p_beta = 1 - p_alpha is enforced by construction.
struct ProjectorMixture {
    Ket alpha;
    Ket beta;
    double p_alpha;
    double p_beta;

    /// Validates: equal dims, both kets normalized within 1e-12,
    /// p_alpha in (0, 1), and |<alpha|beta>| <= 1 - 1e-9 (linear independence).
    ProjectorMixture(Ket alpha_in, Ket beta_in, double p_alpha_in);
};

/// beta rotated by a unit-magnitude scalar so that <alpha|beta'> = c >= 0.
struct AlignedOverlap {
    Ket beta_aligned;
    double c;               ///< |<alpha|beta>|, real nonnegative overlap
    Complex applied_phase;  ///< the unit scalar multiplied onto beta
};

/// The unique orthogonal decomposition of a two-projector density operator
/// (unique whenever the overlap c is nonzero; flagged degenerate otherwise
/// when the weights coincide).
struct EigenEnsemble {
    double prat;  ///< weight ratio p_beta / p_alpha
    std::optional<std::pair<double, double>> roots;  ///< (r+, r-), absent when c = 0
    std::pair<double, double> eigenvalues;           ///< descending, each in (0,1)
    std::pair<Ket, Ket> eigenvectors;                ///< normalized, matching order
    bool degenerate;
};

struct DegeneracySample {
    double prat;
    double y;  ///< 2 - prat - 1/prat, the degeneracy radicand
    std::optional<double> c_degenerate;  ///< (1/2) sqrt(y), present only when y >= 0
};

struct DegeneracyCurve {
    std::vector<DegeneracySample> samples;
};

/// Multiplies beta by a unit phase making <alpha|beta'> real nonnegative.
/// Throws ValidationError on zero vectors or mismatched dims.
AlignedOverlap phase_align(const Ket& alpha, const Ket& beta);

/// rho = p_alpha |alpha><alpha| + p_beta |beta><beta|. Hermitian, trace 1.
OperatorMatrix build_density(const ProjectorMixture& m);

/// Roots of c^2 r^2 + (1 - prat) r - prat = 0, returned as (r+, r-) with
/// r+ > 0 > r-. Solved in the cancellation-safe form: the larger-magnitude
/// root from the sign-matched discriminant branch, the other from the
/// product identity r+ r- = -prat / c^2.
std::pair<double, double> solve_roots(double c, double prat);

/// Closed-form eigen-ensemble of the mixture's density operator.
///
/// For c > 0 the eigenvectors are |alpha> + c r |beta'> normalized, with
/// eigenvalues p_alpha (1 + c^2 r); they are sorted descending afterwards
/// rather than trusting a root-to-eigenvalue pairing. For c = 0 the pair
/// {alpha, beta} is returned as-is with eigenvalues {p_alpha, p_beta};
/// that case is flagged degenerate iff the weights are equal (the one
/// situation where the ensemble is not unique).
EigenEnsemble eigen_decompose(const ProjectorMixture& m);

/// Sum of eigenvalue * |eigenvector><eigenvector|; reproduces the density
/// operator of the source mixture.
OperatorMatrix reconstruct(const EigenEnsemble& e);

/// Norm of the component of rho|alpha> orthogonal to |alpha>, i.e. how far
/// |alpha> is from being an eigenvector. Equals c * p_beta * sqrt(1 - c^2);
/// nonzero exactly when the raw weights fail as probabilities.
double naive_interpretation_residual(const ProjectorMixture& m);

/// lambda+ - lambda- = p_alpha sqrt((1 - prat)^2 + 4 c^2 prat); also equal
/// to sqrt(1 - 4 p_alpha p_beta (1 - c^2)).
double eigenvalue_gap(const ProjectorMixture& m);

/// Samples y = 2 - prat - 1/prat on an evenly spaced grid. When the range
/// brackets the ratio 1, the nearest grid point is snapped onto 1 exactly so
/// the curve's unique maximum (y = 0, c_degenerate = 0) is always a sample.
DegeneracyCurve degeneracy_scan(double prat_min, double prat_max, int steps);

/// Maximum principal angle between the two dominant oracle eigenvectors of
/// rho and of rho + dH, where dH is a seeded random Hermitian perturbation
/// of Frobenius norm `perturbation` and the sum is re-trace-normalized.
/// Grows like perturbation / gap; order 1 near degeneracy.
double eigenbasis_sensitivity(const ProjectorMixture& m, double perturbation,
                              std::uint64_t seed);

/// Random mixture in the given ambient dimension: Haar-random alpha, beta
/// with overlap magnitude c ~ U(1e-6, 1-1e-6) at a random phase, and
/// p_alpha ~ U(1e-6, 1-1e-6). Drives the property suites and oracle-check.
ProjectorMixture random_mixture(std::size_t dim, Rng& rng);

}  // namespace eigenmix
