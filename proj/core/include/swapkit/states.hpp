#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swapkit/matrix.hpp"

namespace swapkit {

/// Schmidt data of a bipartite pure state in canonical diagonal form:
/// a nonincreasing vector of nonnegative reals whose squares sum to 1.
class DiagonalSpectrum {
  public:
    /// Values are sorted nonincreasing on construction (diagonal reordering is
    /// a local-unitary freedom); the squared sum must already be 1 within 1e-10.
    static DiagonalSpectrum from_schmidt(std::vector<double> values);
    /// Squared spectrum (probability weights); normalized to sum 1, then
    /// square-rooted and sorted.
    static DiagonalSpectrum from_squared(std::vector<double> squared);
    /// Unnormalized diagonal entries; normalized by their 2-norm and sorted.
    static DiagonalSpectrum from_raw_diagonal(std::vector<double> diagonal);

    static DiagonalSpectrum maximally_entangled(int dim);

    int dim() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& values() const { return values_; }
    double value(int k) const { return values_[static_cast<std::size_t>(k)]; }

    ComplexMatrix to_matrix() const;  // diag(values)
    bool full_rank(double tol = 1e-12) const;
    /// d · (Π values)^{2/d}
    double g_concurrence() const;

    double max_abs_diff(const DiagonalSpectrum& other) const;

  private:
    explicit DiagonalSpectrum(std::vector<double> values) : values_(std::move(values)) {}
    std::vector<double> values_;
};

/// Bipartite pure state |χ⟩ = (X ⊗ 1)|Φ⟩ represented by its coefficient
/// matrix X, with |Φ⟩ = Σ_k |kk⟩ unnormalized. Normalization of the state is
/// exactly the unit Frobenius norm of X.
class BipartiteState {
  public:
    explicit BipartiteState(ComplexMatrix coeff);
    static BipartiteState maximally_entangled(int dim);
    static BipartiteState diagonal(const DiagonalSpectrum& spectrum);

    int dim() const { return coeff_.dim(); }
    const ComplexMatrix& coeff() const { return coeff_; }
    bool full_rank(double tol = 1e-12) const;

  private:
    ComplexMatrix coeff_;
};

DiagonalSpectrum schmidt_vector(const BipartiteState& state);
double g_concurrence(const BipartiteState& state);

struct DiagonalReduction {
    DiagonalSpectrum spectrum;
    ComplexMatrix left_unitary;   // U1
    ComplexMatrix right_unitary;  // V1, so coeff = U1 · diag(spectrum) · V1
};

/// Singular value decomposition of the coefficient matrix with deterministic
/// conventions: values sorted nonincreasing and the first nonzero entry of
/// each left singular vector made real positive. Rank-deficient states are
/// allowed; trailing zeros appear in the spectrum.
DiagonalReduction reduce_to_diagonal(const BipartiteState& state);

enum class StateKind { haar_pure, random_spectrum };

/// Deterministic instance generator. haar_pure draws the coefficient matrix
/// from the unitarily invariant Gaussian ensemble and normalizes;
/// random_spectrum draws a Dirichlet(1,...,1) squared spectrum and returns the
/// corresponding diagonal state.
BipartiteState random_state(int dim, std::uint64_t seed, StateKind kind);

/// Dirichlet-squared spectrum with every squared value ≥ min_squared,
/// enforced by rejection. Used by the randomized protocol checks.
DiagonalSpectrum random_full_rank_spectrum(int dim, Rng& rng, double min_squared = 1e-3);

/// Dense amplitude vector of |ψ⟩ ⊗ |φ⟩ over the basis |a, n_A, n_B, b⟩.
/// Serves as the independent full-tensor oracle representation.
class FullTensorState {
  public:
    FullTensorState(const BipartiteState& psi, const BipartiteState& phi);

    int dim() const { return dim_; }
    const std::vector<Cx>& amplitudes() const { return amp_; }
    Cx amplitude(int a, int na, int nb, int b) const {
        return amp_[static_cast<std::size_t>(((a * dim_ + na) * dim_ + nb) * dim_ + b)];
    }

    /// Reduced density matrix of subsystem A (the first tensor factor).
    ComplexMatrix reduced_density_a() const;

  private:
    int dim_;
    std::vector<Cx> amp_;
};

}  // namespace swapkit
