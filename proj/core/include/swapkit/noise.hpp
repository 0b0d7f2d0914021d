#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swapkit/measurement.hpp"
#include "swapkit/states.hpp"

namespace swapkit {

/// Independent bipartite depolarizing weights on the two links: the A–N link
/// is mixed with weight p, the N–B link with weight q.
struct NoiseModel {
    double p = 0.0;
    double q = 0.0;
};

/// Conditional mixed output on AB for one measurement outcome.
struct MixedOutcome {
    int index = 0;  // 1-based
    ComplexMatrix density;          // d²×d², Hermitian, trace 1
    std::vector<double> spectrum;   // eigenvalues, nonincreasing

    MixedOutcome() : density(1) {}
};

/// Conditional outputs of the swap on depolarized links: for outcome i,
///   ρ_i = (1−p)(1−q)|η_i⟩⟨η_i| + (1−p)q·A²⊗(1/d) + p(1−q)·(1/d)⊗B² + pq·(1/d²)
/// with |η_i⟩ = (d·A·E_i·B ⊗ 1)|Φ⟩. Requires an unbiased basis (otherwise the
/// closed-form 1/d² normalization does not hold).
std::vector<MixedOutcome> noisy_swap(const DiagonalSpectrum& a, const DiagonalSpectrum& b,
                                     const MeasurementBasis& basis, const NoiseModel& noise);

struct DiagonalWitnessFailure {
    int outcome_index = 0;           // 1-based
    PCVerdict::Branch branch = PCVerdict::Branch::none;
    double reconstruction_residual = 0.0;  // Frobenius distance of the diagonal attempt
};

struct MixedLuReport {
    bool spectra_equal = false;
    bool diagonal_witnesses_valid = false;
    bool diagonal_orbit_basis = false;
    /// Present when the basis leaves the diagonal orbit and a diagonal
    /// reconstruction demonstrably fails for some outcome.
    std::optional<DiagonalWitnessFailure> witness_failure;
};

/// Checks mutual LU-equivalence evidence for the conditional mixed outputs:
/// spectra_equal compares all eigenvalue lists (1e-8), and for diagonal-orbit
/// bases the explicit witnesses (D_L⊗D_R) extracted via pc_equivalent must
/// reconstruct every outcome from outcome 1 within 1e-9 Frobenius.
MixedLuReport mixed_lu_deterministic(const std::vector<MixedOutcome>& outcomes,
                                     const MeasurementBasis& basis);

/// Seeded search for a spectral violation across outcomes of a
/// conjugation-branch-mixing MEM (the spectral necessary condition). Records
/// the largest spectral deviation seen and the diagonal-witness failure of the
/// first trial; spectral deviations are not expected for real diagonal inputs.
struct ObstructionSearchReport {
    int trials = 0;
    double max_spectral_deviation = 0.0;
    std::optional<DiagonalWitnessFailure> witness_failure;
};

ObstructionSearchReport conjugation_obstruction_search(int dim, int trials, std::uint64_t seed);

}  // namespace swapkit
