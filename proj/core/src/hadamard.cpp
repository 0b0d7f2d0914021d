#include "swapkit/hadamard.hpp"

#include <cmath>

namespace swapkit {

PermutationSpec::PermutationSpec(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    const int d = static_cast<int>(mapping_.size());
    if (d < 1) throw DimensionError("permutation dimension must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int v : mapping_) {
        if (v < 0 || v >= d || seen[static_cast<std::size_t>(v)])
            throw DomainError("mapping is not a bijection on {0,...,d-1}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

PermutationSpec PermutationSpec::identity(int dim) {
    std::vector<int> m(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) m[static_cast<std::size_t>(k)] = k;
    return PermutationSpec(std::move(m));
}

ComplexMatrix PermutationSpec::row_selector() const {
    ComplexMatrix q(dim());
    for (int j = 0; j < dim(); ++j) q(j, (*this)(j)) = 1.0;
    return q;
}

ComplexMatrix PermutationSpec::column_selector() const {
    ComplexMatrix q(dim());
    for (int k = 0; k < dim(); ++k) q((*this)(k), k) = 1.0;
    return q;
}

ExponentMatrix fourier(int dim) {
    if (dim < 1) throw DimensionError("fourier dimension must be positive");
    std::vector<int> exps(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
            exps[static_cast<std::size_t>(j * dim + k)] = (j * k) % dim;
    return ExponentMatrix(dim, std::move(exps));
}

WeylOps weyl_ops(int dim) {
    if (dim < 2) throw DimensionError("weyl_ops requires dim >= 2");
    ComplexMatrix x(dim), z(dim), r(dim);
    const double step = 2.0 * M_PI / dim;
    for (int k = 0; k < dim; ++k) {
        x((k + 1) % dim, k) = 1.0;
        z(k, k) = Cx(std::cos(step * k), std::sin(step * k));
        r((dim - k) % dim, k) = 1.0;
    }
    return WeylOps{std::move(x), std::move(z), std::move(r)};
}

HadamardCandidate family_u4(double alpha) {
    const Cx ie(-std::sin(alpha), std::cos(alpha));  // i e^{iα}
    ComplexMatrix u(4);
    const Cx one(1.0, 0.0);
    const Cx entries[4][4] = {
        {one, one, one, one},
        {one, ie, -one, -ie},
        {one, -one, one, -one},
        {one, -ie, -one, ie},
    };
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) u(j, k) = 0.5 * entries[j][k];
    return HadamardCandidate(std::move(u));
}

HadamardCandidate family_4k(int k, double alpha) {
    if (k < 1) throw DomainError("family_4k requires k >= 1");
    return HadamardCandidate(tensor(fourier(k).to_unitary(), family_u4(alpha).matrix));
}

bool is_complex_hadamard(const ComplexMatrix& h, double tol) {
    const int d = h.dim();
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            if (std::abs(std::abs(h(j, k)) - target) > tol) return false;
    const Eigen::MatrixXcd residual =
        h.mat() * h.mat().adjoint() - Eigen::MatrixXcd::Identity(d, d);
    return residual.cwiseAbs().maxCoeff() <= tol;
}

bool is_complex_hadamard(const HadamardCandidate& h, double tol) {
    return is_complex_hadamard(h.matrix, tol);
}

}  // namespace swapkit
