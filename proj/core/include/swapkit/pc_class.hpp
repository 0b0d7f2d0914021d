#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "swapkit/hadamard.hpp"
#include "swapkit/matrix.hpp"

namespace swapkit {

/// Outcome of a phase–conjugation equivalence test: H1 ~ D_L H2 D_R (direct)
/// or H1 ~ D_L conj(H2) D_R (conjugate). The witness pair reconstructs the
/// relation when equivalent.
struct PCVerdict {
    enum class Branch { direct, conjugate, none };

    bool equivalent = false;
    Branch branch = Branch::none;
    std::optional<std::pair<DiagonalUnitary, DiagonalUnitary>> witness;
};

/// Decides PC-equivalence by comparing dephased canonical forms. Both inputs
/// must have no vanishing entries and are expected to follow the same
/// normalization convention (diagonal unitaries preserve entry moduli).
PCVerdict pc_equivalent(const ComplexMatrix& h1, const ComplexMatrix& h2,
                        double tol = comparison_tolerance());

/// χ(h) = h01·h12 / (h02·h11): invariant under diagonal multiplication;
/// conjugation maps χ to its conjugate.
Cx cross_ratio(const ComplexMatrix& h);

/// Affine permutation pair σ(j) = αj+β, τ(k) = γk+δ with αγ ≡ ±1 (mod d):
/// exactly the pairs mapping the Fourier matrix to a PC-equivalent of itself,
/// with sign +1 for the direct branch and −1 for the conjugate branch.
struct AffineSymmetry {
    int alpha = 1;
    int beta = 0;
    int gamma = 1;
    int delta = 0;
    int sign = +1;
};

std::optional<AffineSymmetry> affine_symmetry(const PermutationSpec& left,
                                              const PermutationSpec& right, int dim);

/// Euler totient by trial factorization.
long long totient(long long n);

/// ε(d): 1 for d ≤ 2 (the two conjugation branches coincide), 2 for d ≥ 3.
int conjugation_branch_count(int dim);

/// Exponent matrix of Q_L F_d Q_R: entry (j,k) = σ(j)·τ(k) mod d.
ExponentMatrix permuted_fourier(const PermutationSpec& left, const PermutationSpec& right);

/// Integer dephasing followed by folding of the conjugation branch: subtract
/// row-0 exponents from every row, column-0 exponents from every column, and
/// take the lexicographic minimum of the result and its negation mod d.
ExponentMatrix pc_canonical_key(const ExponentMatrix& m);

/// Exact census of PC-classes inside the permutation orbit of F_d.
struct CensusReport {
    int dim = 0;
    long long orbit_size = 0;
    long long class_count = 0;
    long long class_size = 0;
    long long totient = 0;
    int epsilon = 1;
    std::vector<ExponentMatrix> representatives;  // canonical keys, sorted
};

/// Enumerates all (d!)² permutation pairs exactly (integer arithmetic only),
/// groups the orbit by canonical key, and cross-checks every count against the
/// closed forms class_count = (d!)²/(ε(d)·d²·φ(d)) and class_size = ε(d)·d².
/// Bounded to 2 ≤ d ≤ 6; threads ≤ 0 picks a hardware-based default. Results
/// are deterministic regardless of the thread count.
CensusReport census(int dim, int threads = 0);

}  // namespace swapkit
