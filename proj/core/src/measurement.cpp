#include "swapkit/measurement.hpp"

#include <cmath>

#include "swapkit/hadamard.hpp"

namespace swapkit {

namespace {

void check_orthonormal_complete(int dim, const std::vector<ComplexMatrix>& ops) {
    const double tol = comparison_tolerance();
    const std::size_t n = ops.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Cx g = (ops[i].mat().adjoint() * ops[j].mat()).trace();
            const Cx expect = (i == j) ? Cx(1.0, 0.0) : Cx(0.0, 0.0);
            if (std::abs(g - expect) > tol)
                throw InvalidBasisError("measurement operators are not orthonormal");
        }
    }
    // d² orthonormal vectors |Γ_i⟩ resolve the identity on the composite
    // space; on the operator side this reads Σ E_i^T E_i* = d·1.
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& op : ops) sum += op.mat().adjoint() * op.mat();
    sum -= static_cast<double>(dim) * Eigen::MatrixXcd::Identity(dim, dim);
    if (sum.cwiseAbs().maxCoeff() > tol * dim)
        throw InvalidBasisError("measurement operators do not resolve the identity");
}

}  // namespace

MeasurementBasis::MeasurementBasis(int dim, std::vector<ComplexMatrix> stored_operators)
    : dim_(dim), ops_(std::move(stored_operators)) {
    if (dim_ < 2) throw DimensionError("measurement dimension must be at least 2");
    if (ops_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_))
        throw StructureError("measurement basis needs exactly d² operators");
    for (const auto& op : ops_)
        if (op.dim() != dim_) throw DimensionError("operator dimension mismatch");
    check_orthonormal_complete(dim_, ops_);
}

MeasurementClassReport validate(const MeasurementBasis& basis) {
    const int d = basis.dim();
    const double tol = comparison_tolerance();

    MeasurementClassReport report;

    report.unbiased = true;
    const double target = 1.0 / d;
    for (const auto& op : basis.operators()) {
        for (int m = 0; m < d && report.unbiased; ++m)
            for (int n = 0; n < d; ++n)
                if (std::abs(std::abs(op(m, n)) - target) > tol) {
                    report.unbiased = false;
                    break;
                }
        if (!report.unbiased) break;
    }

    report.mem = true;
    const double root_d = std::sqrt(static_cast<double>(d));
    for (const auto& op : basis.operators())
        if (!is_complex_hadamard(op.scaled(root_d))) {
            report.mem = false;
            break;
        }
    if (report.mem && !report.unbiased)
        throw InvariantViolation("MEM basis must be unbiased");

    // PC-equivalence is transitive, so all-against-first decides all pairs.
    report.single_pc_class = true;
    report.diagonal_orbit_only = true;
    if (basis.stored_operator(0).min_abs() <= 1e-12) {
        report.single_pc_class = false;
        report.diagonal_orbit_only = false;
    } else {
        for (int i = 1; i < basis.size(); ++i) {
            if (basis.stored_operator(i).min_abs() <= 1e-12) {
                report.single_pc_class = false;
                report.diagonal_orbit_only = false;
                break;
            }
            const PCVerdict v = pc_equivalent(basis.stored_operator(i), basis.stored_operator(0));
            if (!v.equivalent) {
                report.single_pc_class = false;
                report.diagonal_orbit_only = false;
                break;
            }
            if (v.branch != PCVerdict::Branch::direct) report.diagonal_orbit_only = false;
        }
    }
    return report;
}

MeasurementBasis gour_basis(const ComplexMatrix& hadamard_seed) {
    const int d = hadamard_seed.dim();
    if (!is_complex_hadamard(hadamard_seed))
        throw DomainError("gour_basis seed must be a complex Hadamard unitary");

    const double inv_root_d = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int m = 0; m < d; ++m) {
        for (int mp = 0; mp < d; ++mp) {
            std::vector<double> left(static_cast<std::size_t>(d));
            std::vector<double> right(static_cast<std::size_t>(d));
            for (int k = 0; k < d; ++k) {
                left[static_cast<std::size_t>(k)] = 2.0 * M_PI * mp * k / d;
                right[static_cast<std::size_t>(k)] =
                    2.0 * M_PI * (static_cast<double>(d) * m + mp) * k / (double(d) * d);
            }
            ops.push_back(dress(DiagonalUnitary(std::move(left)), hadamard_seed,
                                DiagonalUnitary(std::move(right)))
                              .scaled(inv_root_d));
        }
    }
    try {
        return MeasurementBasis(d, std::move(ops));
    } catch (const InvalidBasisError& e) {
        throw InvariantViolation(std::string("gour_basis construction failure: ") + e.what());
    }
}

MeasurementBasis bell_basis() {
    const WeylOps w = weyl_ops(2);
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> ops;
    ops.push_back(ComplexMatrix::identity(2).scaled(s));
    ops.push_back(w.shift.scaled(s));
    ops.push_back(w.phase.scaled(s));
    ops.push_back((w.shift * w.phase).scaled(s));
    return MeasurementBasis(2, std::move(ops));
}

MeasurementBasis conjugate_mixed_basis(int dim) {
    if (dim < 2 || dim % 2 != 0)
        throw DomainError("conjugate_mixed_basis requires even dim >= 2");
    const WeylOps w = weyl_ops(dim);
    const ComplexMatrix f = fourier(dim).to_unitary();
    const ComplexMatrix fc = f.conjugate();
    const double s = 1.0 / std::sqrt(static_cast<double>(dim));

    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
    ComplexMatrix xa = ComplexMatrix::identity(dim);
    for (int a = 0; a < dim; ++a) {
        ComplexMatrix xazb = xa;
        for (int b = 0; b < dim; ++b) {
            ops.push_back(((b % 2 == 0 ? f : fc) * xazb).scaled(s));
            xazb = xazb * w.phase;
        }
        xa = xa * w.shift;
    }
    return MeasurementBasis(dim, std::move(ops));
}

std::vector<std::vector<Cx>> projector_vectors(const MeasurementBasis& basis) {
    const int d = basis.dim();
    std::vector<std::vector<Cx>> vectors;
    vectors.reserve(static_cast<std::size_t>(basis.size()));
    for (const auto& op : basis.operators()) {
        std::vector<Cx> v(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n) v[static_cast<std::size_t>(m * d + n)] = op(m, n);
        vectors.push_back(std::move(v));
    }
    return vectors;
}

}  // namespace swapkit
