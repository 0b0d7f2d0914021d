#include <doctest.h>

#include <cmath>

#include "swapkit/hadamard.hpp"
#include "swapkit/measurement.hpp"
#include "swapkit/states.hpp"

using namespace swapkit;

TEST_CASE("basis construction enforces orthonormality and completeness") {
    SUBCASE("wrong operator count") {
        std::vector<ComplexMatrix> three(3, ComplexMatrix::identity(2));
        CHECK_THROWS_AS(MeasurementBasis(2, std::move(three)), StructureError);
    }

    SUBCASE("non-orthonormal set") {
        std::vector<ComplexMatrix> ops(4, ComplexMatrix::identity(2)
                                              .scaled(1.0 / std::sqrt(2.0)));
        CHECK_THROWS_AS(MeasurementBasis(2, std::move(ops)), InvalidBasisError);
    }

    SUBCASE("the operator-side completeness sum is d times the identity") {
        const MeasurementBasis basis = gour_basis(fourier(3).to_unitary());
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(3, 3);
        for (const auto& op : basis.operators()) sum += op.mat().adjoint() * op.mat();
        CHECK((sum - 3.0 * Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("bell basis classification") {
    const MeasurementBasis bell = bell_basis();
    const MeasurementClassReport report = validate(bell);
    CHECK(!report.unbiased);  // the diagonal operators have vanishing entries
    CHECK(!report.mem);
    CHECK(!report.single_pc_class);

    SUBCASE("projector vectors are the Bell states") {
        const auto vecs = projector_vectors(bell);
        REQUIRE(vecs.size() == 4);
        const double s = 1.0 / std::sqrt(2.0);
        // (1/sqrt2)·1 -> (|00> + |11>)/sqrt2
        CHECK(std::abs(vecs[0][0] - Cx(s, 0)) <= 1e-12);
        CHECK(std::abs(vecs[0][3] - Cx(s, 0)) <= 1e-12);
        CHECK(std::abs(vecs[0][1]) <= 1e-12);
        // (1/sqrt2)·X -> (|01> + |10>)/sqrt2 up to index convention
        CHECK(std::abs(std::abs(vecs[1][1]) - s) <= 1e-12);
        CHECK(std::abs(std::abs(vecs[1][2]) - s) <= 1e-12);
    }
}

TEST_CASE("gour construction") {
    SUBCASE("d=2: four operators with entry modulus 1/2") {
        const MeasurementBasis basis = gour_basis(fourier(2).to_unitary());
        REQUIRE(basis.size() == 4);
        for (const auto& op : basis.operators())
            for (int m = 0; m < 2; ++m)
                for (int n = 0; n < 2; ++n)
                    CHECK(std::abs(std::abs(op(m, n)) - 0.5) <= 1e-12);
        const MeasurementClassReport report = validate(basis);
        CHECK(report.unbiased);
        CHECK(report.mem);
        CHECK(report.single_pc_class);
    }

    SUBCASE("d=3: mem with diagonal-orbit-only relations") {
        const MeasurementClassReport report = validate(gour_basis(fourier(3).to_unitary()));
        CHECK(report.mem);
        CHECK(report.diagonal_orbit_only);
    }

    SUBCASE("single PC class for Fourier seeds across dimensions") {
        for (int d : {2, 3, 4, 5})
            CHECK(validate(gour_basis(fourier(d).to_unitary())).single_pc_class);
    }

    SUBCASE("u4 seed gives a MEM in a different PC class than the Fourier one") {
        const MeasurementBasis from_u4 = gour_basis(family_u4(0.3).matrix);
        const MeasurementBasis from_f4 = gour_basis(fourier(4).to_unitary());
        CHECK(validate(from_u4).mem);
        CHECK(validate(from_u4).single_pc_class);
        CHECK(!pc_equivalent(from_u4.stored_operator(0), from_f4.stored_operator(0)).equivalent);
    }

    SUBCASE("construction is deterministic") {
        const MeasurementBasis a = gour_basis(fourier(3).to_unitary());
        const MeasurementBasis b = gour_basis(fourier(3).to_unitary());
        for (int i = 0; i < a.size(); ++i)
            CHECK(a.stored_operator(i).max_abs_diff(b.stored_operator(i)) == 0.0);
    }

    SUBCASE("rejects a non-hadamard seed") {
        CHECK_THROWS_AS(gour_basis(ComplexMatrix::identity(3)), DomainError);
    }
}

TEST_CASE("projector vectors of a MEM are orthonormal and maximally entangled") {
    const MeasurementBasis basis = gour_basis(fourier(2).to_unitary());
    const auto vecs = projector_vectors(basis);
    REQUIRE(vecs.size() == 4);
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < vecs.size(); ++j) {
            Cx inner = 0.0;
            for (std::size_t k = 0; k < vecs[i].size(); ++k)
                inner += std::conj(vecs[i][k]) * vecs[j][k];
            CHECK(std::abs(inner - (i == j ? Cx(1, 0) : Cx(0, 0))) <= 1e-10);
        }

    // every |Γ_i⟩ of a MEM is maximally entangled: flat Schmidt vector and
    // unit G-concurrence
    for (int i = 0; i < basis.size(); ++i) {
        const BipartiteState gamma(basis.stored_operator(i));
        CHECK(g_concurrence(gamma) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(schmidt_vector(gamma).max_abs_diff(DiagonalSpectrum::maximally_entangled(2)) <=
              1e-9);
    }
}

TEST_CASE("conjugate-branch-mixing MEM") {
    const MeasurementBasis basis = conjugate_mixed_basis(4);
    const MeasurementClassReport report = validate(basis);
    CHECK(report.unbiased);
    CHECK(report.mem);
    CHECK(report.single_pc_class);
    CHECK(!report.diagonal_orbit_only);

    CHECK_THROWS_AS(conjugate_mixed_basis(3), DomainError);
}
