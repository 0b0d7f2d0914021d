#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "swapkit/hadamard.hpp"
#include "swapkit/matrix.hpp"
#include "swapkit/pc_class.hpp"

using namespace swapkit;

namespace {

ComplexMatrix random_gaussian(int d, Rng& rng) {
    ComplexMatrix m(d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) m(j, k) = Cx(rng.normal(), rng.normal());
    return m;
}

DiagonalUnitary random_diagonal(int d, Rng& rng) {
    std::vector<double> phases(static_cast<std::size_t>(d));
    for (double& p : phases) p = 2.0 * M_PI * rng.uniform();
    return DiagonalUnitary(std::move(phases));
}

}  // namespace

TEST_CASE("singular values of simple matrices") {
    const auto sv_id = singular_values(ComplexMatrix::identity(2));
    CHECK(sv_id[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sv_id[1] == doctest::Approx(1.0).epsilon(1e-12));

    const auto sv_diag = singular_values(ComplexMatrix::diagonal(std::vector<double>{3.0, 4.0}));
    CHECK(sv_diag[0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sv_diag[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("singular values match the characteristic-polynomial oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix m = random_gaussian(3, rng);
        const auto sv = singular_values(m);

        const ComplexMatrix gram(Eigen::MatrixXcd(m.mat().adjoint() * m.mat()));
        const auto eig = testing::charpoly_eigenvalues(gram);
        REQUIRE(eig.size() == 3);
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(std::abs(sv[k] - std::sqrt(std::max(0.0, eig[k]))) <= 1e-8);
    }
}

TEST_CASE("squared singular values sum to the squared Frobenius norm") {
    Rng rng(12);
    for (int d : {2, 4, 6}) {
        const ComplexMatrix m = random_gaussian(d, rng);
        const auto sv = singular_values(m);
        double ss = 0.0;
        for (double s : sv) ss += s * s;
        const double f2 = m.frobenius_norm() * m.frobenius_norm();
        CHECK(std::abs(ss - f2) <= 1e-10 * f2);
    }
}

TEST_CASE("singular values are unitarily invariant") {
    Rng rng(13);
    for (int d : {2, 3, 5}) {
        const ComplexMatrix m = random_gaussian(d, rng);
        // random permutation
        std::vector<int> perm(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = d - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(rng.next_u64() % (i + 1))]);
        const ComplexMatrix p = PermutationSpec(perm).row_selector();
        const ComplexMatrix q = random_diagonal(d, rng).to_matrix();

        const auto sv1 = singular_values(m);
        const auto sv2 = singular_values(p * m * q);
        for (int k = 0; k < d; ++k)
            CHECK(std::abs(sv1[static_cast<std::size_t>(k)] - sv2[static_cast<std::size_t>(k)]) <=
                  1e-9);
    }
}

TEST_CASE("determinant modulus") {
    CHECK(det_modulus(ComplexMatrix::identity(3)) == doctest::Approx(1.0));
    CHECK(det_modulus(fourier(2).to_unitary()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(det_modulus(ComplexMatrix::diagonal(std::vector<double>{0.9, 0.1})) ==
          doctest::Approx(0.09).epsilon(1e-12));

    SUBCASE("equals the product of singular values") {
        Rng rng(14);
        const ComplexMatrix m = random_gaussian(4, rng);
        double prod = 1.0;
        for (double s : singular_values(m)) prod *= s;
        CHECK(std::abs(det_modulus(m) - prod) <= 1e-9 * prod);
    }
}

TEST_CASE("dephasing canonical form") {
    SUBCASE("Fourier matrices are already canonical") {
        for (int d : {2, 3, 5}) {
            const ComplexMatrix f = fourier(d).to_unitary();
            const DephasedForm form = dephase_canonical(f);
            CHECK(form.canonical.max_abs_diff(f) <= 1e-12);
        }
    }

    SUBCASE("strips random diagonal dressings") {
        Rng rng(15);
        const ComplexMatrix f = fourier(3).to_unitary();
        for (int t = 0; t < 10; ++t) {
            const ComplexMatrix dressed =
                dress(random_diagonal(3, rng), f, random_diagonal(3, rng));
            CHECK(dephase_canonical(dressed).canonical.max_abs_diff(f) <= 1e-12);
        }
    }

    SUBCASE("recovers the d=4 family member up to extracted phases") {
        const ComplexMatrix u = family_u4(0.3).matrix;
        const DephasedForm form = dephase_canonical(u);
        // U(alpha) has real positive first row and column, so it is canonical;
        // entry (1,1) keeps the i·e^{iα} phase.
        CHECK(std::abs(form.canonical(1, 1) - Cx(-std::sin(0.3), std::cos(0.3)) * 0.5) <= 1e-12);
        const ComplexMatrix rebuilt = dress(form.left, form.canonical, form.right);
        CHECK(rebuilt.max_abs_diff(u) <= 1e-12);
    }

    SUBCASE("idempotent") {
        Rng rng(16);
        const ComplexMatrix dressed =
            dress(random_diagonal(4, rng), fourier(4).to_unitary(), random_diagonal(4, rng));
        const ComplexMatrix once = dephase_canonical(dressed).canonical;
        const ComplexMatrix twice = dephase_canonical(once).canonical;
        CHECK(twice.max_abs_diff(once) <= 1e-12);
    }

    SUBCASE("rejects vanishing entries") {
        CHECK_THROWS_AS(dephase_canonical(ComplexMatrix::identity(2)), DegenerateEntryError);
    }
}

TEST_CASE("tensor product") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(tensor(i2, i2).max_abs_diff(ComplexMatrix::identity(4)) == 0.0);

    SUBCASE("entry moduli multiply") {
        const ComplexMatrix f2 = fourier(2).to_unitary();
        const ComplexMatrix t = tensor(f2, f2);
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) CHECK(std::abs(std::abs(t(j, k)) - 0.5) <= 1e-12);
    }

    SUBCASE("cross-ratio of F2 x U(alpha) survives the tensor factor") {
        const ComplexMatrix t = tensor(fourier(2).to_unitary(), family_u4(0.7).matrix);
        const Cx expected(std::sin(0.7), std::cos(0.7));  // i e^{-i 0.7}
        CHECK(std::abs(cross_ratio(t) - expected) <= 1e-12);
    }

    SUBCASE("determinant modulus under tensoring") {
        Rng rng(17);
        const ComplexMatrix a = random_gaussian(2, rng);
        const ComplexMatrix b = random_gaussian(3, rng);
        const double lhs = det_modulus(tensor(a, b));
        const double rhs = std::pow(det_modulus(a), 3) * std::pow(det_modulus(b), 2);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, rhs));
    }
}

TEST_CASE("exponent matrices") {
    SUBCASE("conversion is exactly unimodular") {
        const ComplexMatrix u = fourier(5).to_unimodular();
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) CHECK(std::abs(std::abs(u(j, k)) - 1.0) <= 1e-14);
    }

    SUBCASE("round trip is the identity on exponents") {
        const ExponentMatrix e = fourier(6);
        CHECK(ExponentMatrix::from_unimodular(e.to_unimodular()) == e);
    }

    SUBCASE("negation is entrywise conjugation") {
        const ExponentMatrix e = fourier(5);
        CHECK(e.negated().to_unimodular().max_abs_diff(e.to_unimodular().conjugate()) <= 1e-12);
    }

    SUBCASE("rejects out-of-range exponents") {
        CHECK_THROWS_AS(ExponentMatrix(2, {0, 1, 2, 0}), DomainError);
    }
}

TEST_CASE("matrix construction errors") {
    CHECK_THROWS_AS(ComplexMatrix(Eigen::MatrixXcd::Zero(2, 3)), DimensionError);
    CHECK_THROWS_AS(ComplexMatrix(0), DimensionError);
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ComplexMatrix(std::move(bad)), DomainError);
}

TEST_CASE("diagonal unitary dressing matches explicit multiplication") {
    Rng rng(18);
    const ComplexMatrix m = random_gaussian(3, rng);
    const DiagonalUnitary l = random_diagonal(3, rng), r = random_diagonal(3, rng);
    CHECK(dress(l, m, r).max_abs_diff(l.to_matrix() * m * r.to_matrix()) <= 1e-12);
    CHECK(dress(l.inverse(), dress(l, m, r), r.inverse()).max_abs_diff(m) <= 1e-12);
}
