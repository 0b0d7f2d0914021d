#pragma once

#include <Eigen/Dense>
#include <vector>

#include "swapkit/common.hpp"

namespace swapkit {

/// Dense square complex matrix, the universal value type of the library.
/// Invariants: entries form an exact d×d array and are all finite.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim);
    explicit ComplexMatrix(Eigen::MatrixXcd m);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(const std::vector<Cx>& entries);
    static ComplexMatrix diagonal(const std::vector<double>& entries);

    int dim() const { return static_cast<int>(m_.rows()); }
    Cx operator()(int j, int k) const { return m_(j, k); }
    Cx& operator()(int j, int k) { return m_(j, k); }

    const Eigen::MatrixXcd& mat() const { return m_; }

    ComplexMatrix adjoint() const { return ComplexMatrix(m_.adjoint().eval()); }
    ComplexMatrix conjugate() const { return ComplexMatrix(m_.conjugate().eval()); }
    ComplexMatrix transpose() const { return ComplexMatrix(m_.transpose().eval()); }
    ComplexMatrix scaled(Cx factor) const { return ComplexMatrix((m_ * factor).eval()); }

    double frobenius_norm() const { return m_.norm(); }
    double max_abs() const { return m_.cwiseAbs().maxCoeff(); }
    double min_abs() const { return m_.cwiseAbs().minCoeff(); }

    double max_abs_diff(const ComplexMatrix& other) const;
    bool approx_equal(const ComplexMatrix& other, double tol) const {
        return max_abs_diff(other) <= tol;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    Eigen::MatrixXcd m_;
};

/// Diagonal unitary D = diag(e^{iθ_0}, ..., e^{iθ_{d-1}}) stored by its phases.
class DiagonalUnitary {
  public:
    explicit DiagonalUnitary(std::vector<double> phases);
    static DiagonalUnitary identity(int dim);

    int dim() const { return static_cast<int>(phases_.size()); }
    double phase(int k) const { return phases_[static_cast<std::size_t>(k)]; }
    const std::vector<double>& phases() const { return phases_; }
    Cx entry(int k) const;

    DiagonalUnitary inverse() const;
    ComplexMatrix to_matrix() const;

  private:
    std::vector<double> phases_;
};

/// L · m · R for diagonal unitaries, without materializing the diagonals.
ComplexMatrix dress(const DiagonalUnitary& left, const ComplexMatrix& m,
                    const DiagonalUnitary& right);

/// Exact representation of a matrix whose entries are d-th roots of unity:
/// entry (j,k) stands for ω^{e_jk} with ω = e^{2πi/d}. All exponents live in
/// {0, ..., d-1}. Powers the integer-exact PC-class census.
class ExponentMatrix {
  public:
    ExponentMatrix(int dim, std::vector<int> exponents);

    int dim() const { return dim_; }
    int at(int j, int k) const { return exps_[static_cast<std::size_t>(j * dim_ + k)]; }
    const std::vector<int>& exponents() const { return exps_; }

    /// Entries ω^{e_jk}, all of modulus 1.
    ComplexMatrix to_unimodular() const;
    /// (1/√d) · to_unimodular(): the complex-Hadamard-normalized form.
    ComplexMatrix to_unitary() const;

    /// Inverse of to_unimodular. Every entry must sit within `tol` of a d-th
    /// root of unity.
    static ExponentMatrix from_unimodular(const ComplexMatrix& m, double tol = 1e-6);

    /// Exponent-wise negation mod d (entrywise complex conjugation).
    ExponentMatrix negated() const;

    bool operator==(const ExponentMatrix& other) const = default;
    /// Row-major lexicographic order on exponents; used for canonical keys.
    bool operator<(const ExponentMatrix& other) const;

  private:
    int dim_;
    std::vector<int> exps_;
};

// --- numerical kernel -------------------------------------------------------

/// Nonincreasing singular values, computed from the Hermitian eigendecomposition
/// of m†m. Squared entries sum to the squared Frobenius norm.
std::vector<double> singular_values(const ComplexMatrix& m);

/// |det m|; equals the product of the singular values.
double det_modulus(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, sorted nonincreasing.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

struct DephasedForm {
    ComplexMatrix canonical;  // first row and first column entrywise real positive
    DiagonalUnitary left;     // m = left · canonical · right
    DiagonalUnitary right;
};

/// Canonical form under left/right diagonal-unitary multiplication. Defined
/// only for matrices with no (near-)vanishing entry; pivots on row 0/column 0.
/// Throws DegenerateEntryError when some |entry| ≤ 1e-12.
DephasedForm dephase_canonical(const ComplexMatrix& m);

/// Kronecker product, dimension dim(a)·dim(b).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace swapkit
