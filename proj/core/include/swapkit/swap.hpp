#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swapkit/measurement.hpp"
#include "swapkit/states.hpp"

namespace swapkit {

/// One swap outcome: probability p_i = Tr(B² E_i† A² E_i), unnormalized
/// coefficient matrix A·E_i·B, and the normalized output state. The output is
/// absent for outcomes with probability below the degeneracy threshold
/// (possible only for rank-deficient inputs).
struct SwapOutcome {
    int index = 0;  // 1-based
    double probability = 0.0;
    ComplexMatrix raw_coeff;
    std::optional<BipartiteState> output;
    std::optional<DiagonalSpectrum> schmidt;

    SwapOutcome() : raw_coeff(1) {}
};

struct SwapReport {
    int dim = 0;
    std::vector<SwapOutcome> outcomes;
    bool uniform_probs = false;
    bool lu_deterministic = false;
    std::optional<DiagonalSpectrum> common_schmidt;
    double g_factorization_residual = 0.0;
    bool has_negligible_outcomes = false;
    bool degeneracy_warning = false;  // negligible probability despite full-rank inputs
};

/// Single-node swap with diagonal (canonical Schmidt form) inputs: outcome i
/// has raw coefficient diag(a)·E_i·diag(b) with E_i recovered by conjugating
/// the stored E_i*. uniform_probs means every p_i = 1/d² within 1e-9;
/// lu_deterministic means all outcome Schmidt vectors agree within 1e-8;
/// g_factorization_residual is max_i |C_d(η_i) − C_d(ψ)·C_d(φ)·C_d(Γ_i)|.
SwapReport swap(const DiagonalSpectrum& a, const DiagonalSpectrum& b,
                const MeasurementBasis& basis);

/// Independent route to the same report: builds |ψ⟩⊗|φ⟩ as a dense d⁴
/// amplitude vector, projects the node pair onto each |Γ_i⟩, and reads the
/// Schmidt data off the reduced density matrix. Bounded to d ≤ 6.
SwapReport oracle_swap(const DiagonalSpectrum& a, const DiagonalSpectrum& b,
                       const MeasurementBasis& basis);

struct Theorem1Witness {
    DiagonalSpectrum a;
    DiagonalSpectrum b;
    DiagonalSpectrum schmidt_i;
    DiagonalSpectrum schmidt_j;
};

/// Tests whether two unbiased operators produce LU-equivalent outputs for
/// every input pair, two ways: a randomized sweep comparing output Schmidt
/// vectors over `trials` full-rank diagonal input pairs, and the algebraic
/// PC-equivalence decision. The two must agree (InvariantViolation otherwise);
/// returns the algebraic verdict. On a statistical mismatch the offending
/// input pair is reported through `witness` when provided.
bool check_theorem1_pair(const ComplexMatrix& e_i, const ComplexMatrix& e_j, int trials,
                         std::uint64_t seed, std::optional<Theorem1Witness>* witness = nullptr);

}  // namespace swapkit
