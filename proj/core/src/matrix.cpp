#include "swapkit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace swapkit {

namespace {

constexpr double kDegenerateEntry = 1e-12;

void require_finite(const Eigen::MatrixXcd& m) {
    if (!m.allFinite()) throw DomainError("matrix entries must be finite");
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) {
    if (dim < 1) throw DimensionError("matrix dimension must be positive");
    m_ = Eigen::MatrixXcd::Zero(dim, dim);
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1)
        throw DimensionError("matrix must be square and nonempty");
    require_finite(m_);
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    if (dim < 1) throw DimensionError("matrix dimension must be positive");
    return ComplexMatrix(Eigen::MatrixXcd::Identity(dim, dim).eval());
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Cx>& entries) {
    const int d = static_cast<int>(entries.size());
    ComplexMatrix out(d);
    for (int k = 0; k < d; ++k) out(k, k) = entries[static_cast<std::size_t>(k)];
    require_finite(out.m_);
    return out;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& entries) {
    std::vector<Cx> cx(entries.begin(), entries.end());
    return diagonal(cx);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (other.dim() != dim()) throw DimensionError("matrix dimensions differ");
    return (m_ - other.m_).cwiseAbs().maxCoeff();
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("matrix dimensions differ");
    return ComplexMatrix((a.m_ * b.m_).eval());
}

DiagonalUnitary::DiagonalUnitary(std::vector<double> phases) : phases_(std::move(phases)) {
    if (phases_.empty()) throw DimensionError("diagonal unitary dimension must be positive");
    for (double p : phases_)
        if (!std::isfinite(p)) throw DomainError("diagonal unitary phase must be finite");
}

DiagonalUnitary DiagonalUnitary::identity(int dim) {
    if (dim < 1) throw DimensionError("diagonal unitary dimension must be positive");
    return DiagonalUnitary(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
}

Cx DiagonalUnitary::entry(int k) const {
    const double p = phases_[static_cast<std::size_t>(k)];
    return Cx(std::cos(p), std::sin(p));
}

DiagonalUnitary DiagonalUnitary::inverse() const {
    std::vector<double> neg(phases_.size());
    for (std::size_t k = 0; k < phases_.size(); ++k) neg[k] = -phases_[k];
    return DiagonalUnitary(std::move(neg));
}

ComplexMatrix DiagonalUnitary::to_matrix() const {
    ComplexMatrix out(dim());
    for (int k = 0; k < dim(); ++k) out(k, k) = entry(k);
    return out;
}

ComplexMatrix dress(const DiagonalUnitary& left, const ComplexMatrix& m,
                    const DiagonalUnitary& right) {
    const int d = m.dim();
    if (left.dim() != d || right.dim() != d)
        throw DimensionError("diagonal dressing dimensions differ");
    Eigen::MatrixXcd out(d, d);
    for (int j = 0; j < d; ++j) {
        const Cx lj = left.entry(j);
        for (int k = 0; k < d; ++k) out(j, k) = lj * m(j, k) * right.entry(k);
    }
    return ComplexMatrix(std::move(out));
}

ExponentMatrix::ExponentMatrix(int dim, std::vector<int> exponents)
    : dim_(dim), exps_(std::move(exponents)) {
    if (dim_ < 1) throw DimensionError("exponent matrix dimension must be positive");
    if (exps_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_))
        throw DimensionError("exponent matrix needs exactly d*d entries");
    for (int e : exps_)
        if (e < 0 || e >= dim_) throw DomainError("exponents must lie in {0,...,d-1}");
}

ComplexMatrix ExponentMatrix::to_unimodular() const {
    ComplexMatrix out(dim_);
    const double step = 2.0 * M_PI / dim_;
    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) {
            const double a = step * at(j, k);
            out(j, k) = Cx(std::cos(a), std::sin(a));
        }
    return out;
}

ComplexMatrix ExponentMatrix::to_unitary() const {
    return to_unimodular().scaled(1.0 / std::sqrt(static_cast<double>(dim_)));
}

ExponentMatrix ExponentMatrix::from_unimodular(const ComplexMatrix& m, double tol) {
    const int d = m.dim();
    const double step = 2.0 * M_PI / d;
    std::vector<int> exps(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const Cx v = m(j, k);
            if (std::abs(std::abs(v) - 1.0) > tol)
                throw DomainError("entry is not unimodular");
            double a = std::arg(v);
            if (a < 0) a += 2.0 * M_PI;
            int e = static_cast<int>(std::lround(a / step)) % d;
            const double back = step * e;
            if (std::abs(v - Cx(std::cos(back), std::sin(back))) > tol)
                throw DomainError("entry is not a d-th root of unity");
            exps[static_cast<std::size_t>(j * d + k)] = e;
        }
    return ExponentMatrix(d, std::move(exps));
}

ExponentMatrix ExponentMatrix::negated() const {
    std::vector<int> neg(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) neg[i] = (dim_ - exps_[i]) % dim_;
    return ExponentMatrix(dim_, std::move(neg));
}

bool ExponentMatrix::operator<(const ExponentMatrix& other) const {
    if (dim_ != other.dim_) return dim_ < other.dim_;
    return exps_ < other.exps_;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    const Eigen::MatrixXcd gram = m.mat().adjoint() * m.mat();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw InvariantViolation("Hermitian eigensolver failed on m†m");
    std::vector<double> sv(static_cast<std::size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i)
        sv[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, es.eigenvalues()(i)));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double det_modulus(const ComplexMatrix& m) { return std::abs(m.mat().determinant()); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.mat(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw InvariantViolation("Hermitian eigensolver failed");
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + m.dim());
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

DephasedForm dephase_canonical(const ComplexMatrix& m) {
    const int d = m.dim();
    if (m.min_abs() <= kDegenerateEntry)
        throw DegenerateEntryError("dephasing is undefined for matrices with vanishing entries");

    std::vector<double> left(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) left[static_cast<std::size_t>(j)] = std::arg(m(j, 0));
    std::vector<double> right(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        right[static_cast<std::size_t>(k)] = std::arg(m(0, k)) - left[0];

    DiagonalUnitary dl{std::move(left)}, dr{std::move(right)};
    ComplexMatrix canonical = dress(dl.inverse(), m, dr.inverse());
    // Scrub the pivot row/column: their entries are real positive by
    // construction, up to rounding in arg/exp.
    for (int j = 0; j < d; ++j) canonical(j, 0) = std::abs(canonical(j, 0));
    for (int k = 0; k < d; ++k) canonical(0, k) = std::abs(canonical(0, k));
    return DephasedForm{std::move(canonical), std::move(dl), std::move(dr)};
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    Eigen::MatrixXcd out(da * db, da * db);
    for (int j = 0; j < da; ++j)
        for (int k = 0; k < da; ++k)
            out.block(j * db, k * db, db, db) = a(j, k) * b.mat();
    return ComplexMatrix(std::move(out));
}

}  // namespace swapkit
