#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "eigenmix/linalg.hpp"

namespace eigenmix {

using Rng = std::mt19937_64;

/// Engine seeded from a key of 64-bit words via std::seed_seq. Distinct keys
/// give independent streams; the layout (seed, step, branch, ...) is how the
/// simulation code derives per-branch, per-kick streams without shared state.
Rng make_rng(std::initializer_list<std::uint64_t> key);

/// Uniform double in (0, 1].
double uniform01(Rng& rng);

/// Uniform double in (lo, hi].
double uniform(double lo, double hi, Rng& rng);

/// Standard normal via Box-Muller (no reliance on the implementation-defined
/// std::normal_distribution algorithm).
double gaussian(Rng& rng);

/// Complex with independent standard-normal parts.
Complex gaussian_complex(Rng& rng);

/// Isotropically random unit vector.
Ket random_ket(std::size_t dim, Rng& rng);

/// Haar-distributed unitary: orthonormalize a complex Gaussian matrix
/// (Gram-Schmidt QR; the R diagonal comes out real positive, which fixes
/// the column phases).
OperatorMatrix random_unitary(std::size_t dim, Rng& rng);

/// Random Hermitian matrix scaled to the requested Frobenius norm
/// (fro_norm = 0 gives the zero matrix).
OperatorMatrix random_hermitian(std::size_t dim, double fro_norm, Rng& rng);

}  // namespace eigenmix
