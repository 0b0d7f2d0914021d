#pragma once

#include <optional>
#include <vector>

#include "swapkit/matrix.hpp"

namespace swapkit {

/// A bijection on {0,...,d-1}.
class PermutationSpec {
  public:
    explicit PermutationSpec(std::vector<int> mapping);
    static PermutationSpec identity(int dim);

    int dim() const { return static_cast<int>(mapping_.size()); }
    int operator()(int k) const { return mapping_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& mapping() const { return mapping_; }

    /// Q_L = Σ_j |j⟩⟨σ(j)|, so that (Q_L · M)(j, k) = M(σ(j), k).
    ComplexMatrix row_selector() const;
    /// Q_R = Σ_k |τ(k)⟩⟨k|, so that (M · Q_R)(j, k) = M(j, τ(k)).
    ComplexMatrix column_selector() const;

  private:
    std::vector<int> mapping_;
};

/// A matrix claimed to be complex Hadamard; validity is decided by
/// is_complex_hadamard.
struct HadamardCandidate {
    ComplexMatrix matrix;
    int claimed_dim;

    explicit HadamardCandidate(ComplexMatrix m) : matrix(std::move(m)), claimed_dim(matrix.dim()) {}
};

/// Fourier matrix as exact exponents: entry (j,k) is jk mod d. The unitary
/// form is (1/√d)·ω^{jk}.
ExponentMatrix fourier(int dim);

struct WeylOps {
    ComplexMatrix shift;     // X|k⟩ = |k+1 mod d⟩
    ComplexMatrix phase;     // Z|k⟩ = ω^k|k⟩
    ComplexMatrix reversal;  // R|k⟩ = |-k mod d⟩
};
WeylOps weyl_ops(int dim);

/// The 4×4 one-parameter complex Hadamard family U(α); all entries have
/// modulus 1/2 and conj(U(α)) = U(π−α) entrywise.
HadamardCandidate family_u4(double alpha);

/// F_k ⊗ U(α): complex Hadamard of dimension 4k.
HadamardCandidate family_4k(int k, double alpha);

/// True iff every entry has modulus 1/√d within tol and h·h† = 1 within tol.
bool is_complex_hadamard(const HadamardCandidate& h, double tol = comparison_tolerance());
bool is_complex_hadamard(const ComplexMatrix& h, double tol = comparison_tolerance());

}  // namespace swapkit
