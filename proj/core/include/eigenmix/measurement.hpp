#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eigenmix/composite.hpp"
#include "eigenmix/linalg.hpp"
#include "eigenmix/random.hpp"

namespace eigenmix {

/// A measured observable: Hermitian matrix, an orthonormal eigenbasis, and
/// one distinct pointer shift per eigenvector.
struct Observable {
    OperatorMatrix matrix;
    std::vector<Ket> eigenbasis;
    std::vector<int> shift_indices;

    /// Validates that the basis is orthonormal and diagonalizes the matrix
    /// within 1e-10 and the shifts are pairwise distinct.
    Observable(OperatorMatrix matrix_in, std::vector<Ket> eigenbasis_in,
               std::vector<int> shift_indices_in);

    /// Diagonalizes with the Jacobi oracle; shifts default to 0..dim-1.
    static Observable from_matrix(const OperatorMatrix& m);
};

/// Finite cyclic pointer lattice. The excursion operator acts as a cyclic
/// index shift; a lattice used in a model must satisfy
/// dim_d >= 2 * max(shift) + 1 so shifted cells cannot wrap onto each other.
struct PointerLattice {
    std::size_t dim_d;
    std::size_t initial_index;
};

enum class EnvironmentMode { random_vector, random_unitary };

struct EnvironmentConfig {
    std::size_t dim_n;
    std::uint64_t seed;
    int events_per_step = 1;
    EnvironmentMode mode = EnvironmentMode::random_vector;
};

struct DecoherenceStep {
    int step;
    double coherence;
    /// |overlap| between the accumulated environment states of each branch
    /// pair; unit diagonal.
    std::vector<std::vector<double>> branch_overlaps;
};

struct DecoherenceTrace {
    std::vector<DecoherenceStep> steps;  ///< step 0 = first-stage value
    std::optional<double> efold_time;    ///< absent when no decay is observable
    double fit_residual;                 ///< standard error of the log-decay slope
};

struct DecoherenceModel {
    Ket system;
    Observable observable;
    PointerLattice pointer;
    EnvironmentConfig environment;
};

/// First measurement stage: expands the system in the observable eigenbasis
/// and shifts the pointer by each branch's index,
/// sum_i c_i |s_i> (x) |p0 + k_i mod d>. Throws ValidationError if two
/// branches land on the same pointer cell.
BipartiteState correlated_state(const Ket& system, const Observable& obs,
                                const PointerLattice& pointer);

/// One environment kick per branch. Streams are derived from
/// (cfg.seed, kick_index, branch), so the function is pure and independent
/// branches never share randomness.
///   random_vector:  each branch state is replaced by a fresh random unit vector
///   random_unitary: each branch state is rotated by an independent Haar unitary
std::vector<Ket> environment_step(std::span<const Ket> branch_envs,
                                  const EnvironmentConfig& cfg,
                                  std::uint64_t kick_index);

/// sum_{i != j} |<b_i| rho |b_j>|: off-diagonal mass of rho in the given
/// orthonormal basis. Zero exactly when rho is diagonal in it.
double coherence_norm(const DensityMatrix& dm, std::span<const Ket> basis);

/// Second measurement stage. Each recorded step kicks every branch's
/// environment (events_per_step kicks compose between records); the
/// environment-traced record density matrix is formed in the branch basis
/// and its coherence_norm recorded. The per-branch environment grows by one
/// factor per kick, so the branch overlap is the running product of
/// per-kick factor overlaps. efold_time is fitted by least squares on
/// ln(coherence) vs step, starting at step 1 and stopping once coherence
/// drops below 1e-13.
DecoherenceTrace run_decoherence(const DecoherenceModel& model, int steps);

/// Frobenius norm of [interaction, observable]; zero iff the interaction is
/// quantum non-demolition for the observable.
double qnd_check(const OperatorMatrix& interaction, const Observable& obs);

/// Projects the correlated state onto the pointer cell of the chosen branch,
/// renormalizes, attaches a fresh pointer and measures again; returns the
/// probability of reproducing the outcome. Equals 1 for collision-free QND
/// models. An optional unitary applied between the rounds models a
/// non-QND disturbance.
double repeat_measurement_certitude(
    const DecoherenceModel& model, std::size_t branch_index,
    const std::optional<OperatorMatrix>& between_rounds = std::nullopt);

}  // namespace eigenmix
