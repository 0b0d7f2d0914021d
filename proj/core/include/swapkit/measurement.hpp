#pragma once

#include <vector>

#include "swapkit/matrix.hpp"
#include "swapkit/pc_class.hpp"

namespace swapkit {

/// Ordered operator basis {E_i*} of a rank-1 projective swap measurement on a
/// d×d composite space: the i-th projector is onto |Γ_i⟩ = (E_i* ⊗ 1)|Φ⟩.
///
/// The basis stores the starred operators E_i*; formulas needing E_i
/// conjugate on the fly (measured_operator). Construction enforces the
/// orthonormality Tr(E_i^T E_j*) = δ_ij and the resolution of the identity on
/// the composite space (equivalently Σ_i E_i^T E_i* = d·1).
class MeasurementBasis {
  public:
    MeasurementBasis(int dim, std::vector<ComplexMatrix> stored_operators);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(ops_.size()); }
    const std::vector<ComplexMatrix>& operators() const { return ops_; }
    const ComplexMatrix& stored_operator(int i) const {
        return ops_[static_cast<std::size_t>(i)];
    }
    /// E_i = conj(E_i*).
    ComplexMatrix measured_operator(int i) const {
        return ops_[static_cast<std::size_t>(i)].conjugate();
    }

  private:
    int dim_;
    std::vector<ComplexMatrix> ops_;
};

struct MeasurementClassReport {
    bool unbiased = false;            // every |⟨m|E_i*|n⟩| = 1/d
    bool mem = false;                 // every √d·E_i* is complex Hadamard
    bool single_pc_class = false;     // all operators pairwise PC-equivalent
    bool diagonal_orbit_only = false; // all pairs related without conjugation
};

MeasurementClassReport validate(const MeasurementBasis& basis);

/// Maximally entangled measurement generated from a single complex Hadamard
/// seed H: operators E*_{m,m'} = (1/√d)·D_{m'}·H·D'_{m,m'} in lexicographic
/// (m,m') order, with D_{m'} = diag_k e^{2πi m'k/d} and
/// D'_{m,m'} = diag_k e^{2πi(dm+m')k/d²}. Orthonormality of the construction
/// is re-verified and raises InvariantViolation if it fails.
MeasurementBasis gour_basis(const ComplexMatrix& hadamard_seed);

/// d=2 Bell measurement: operators (1/√2)·{1, X, Z, XZ}. Orthonormal and
/// complete but not unbiased (diagonal operators have vanishing entries).
MeasurementBasis bell_basis();

/// MEM for even d whose operators split between the diagonal orbit of F_d and
/// of conj(F_d): F_d·X^a·Z^b for even b and conj(F_d)·X^a·Z^b for odd b,
/// scaled by 1/√d. Exercises the conjugation branch of a single PC-class.
MeasurementBasis conjugate_mixed_basis(int dim);

/// |Γ_i⟩ as dense vectors over |m,n⟩: vector i has component ⟨m|E_i*|n⟩ at
/// index m·d+n. Unit norm, pairwise orthogonal.
std::vector<std::vector<Cx>> projector_vectors(const MeasurementBasis& basis);

}  // namespace swapkit
