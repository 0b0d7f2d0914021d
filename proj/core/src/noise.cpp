#include "swapkit/noise.hpp"

#include <algorithm>
#include <cmath>

namespace swapkit {

namespace {

constexpr double kSpectraTol = 1e-8;
constexpr double kWitnessTol = 1e-9;

Eigen::MatrixXcd diagonal_kron(const DiagonalUnitary& l, const DiagonalUnitary& r) {
    const int d = l.dim();
    Eigen::VectorXcd diag(d * d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) diag(j * d + k) = l.entry(j) * r.entry(k);
    return diag.asDiagonal();
}

}  // namespace

std::vector<MixedOutcome> noisy_swap(const DiagonalSpectrum& a, const DiagonalSpectrum& b,
                                     const MeasurementBasis& basis, const NoiseModel& noise) {
    const int d = basis.dim();
    if (a.dim() != d || b.dim() != d)
        throw DimensionError("noisy_swap: spectra and basis must share dimension");
    if (noise.p < 0.0 || noise.p > 1.0 || noise.q < 0.0 || noise.q > 1.0)
        throw DomainError("depolarizing weights must lie in [0,1]");
    if (!validate(basis).unbiased)
        throw InvalidBasisError(
            "noisy_swap requires an unbiased basis (uniform outcome probabilities)");

    const double p = noise.p, q = noise.q;
    const int dd = d * d;

    // The three noise terms are shared by all outcomes.
    Eigen::MatrixXcd noise_terms = Eigen::MatrixXcd::Zero(dd, dd);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const int x = j * d + k;
            noise_terms(x, x) = (1.0 - p) * q * a.value(j) * a.value(j) / d +
                                p * (1.0 - q) * b.value(k) * b.value(k) / d +
                                p * q / static_cast<double>(dd);
        }

    std::vector<MixedOutcome> outcomes(static_cast<std::size_t>(basis.size()));
    for (int i = 0; i < basis.size(); ++i) {
        MixedOutcome& out = outcomes[static_cast<std::size_t>(i)];
        out.index = i + 1;

        // |η_i⟩ = (d·A·E_i·B ⊗ 1)|Φ⟩, vectorized over |j,k⟩.
        const ComplexMatrix& stored = basis.stored_operator(i);
        Eigen::VectorXcd eta(dd);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                eta(j * d + k) = static_cast<double>(d) * a.value(j) *
                                 std::conj(stored(j, k)) * b.value(k);

        Eigen::MatrixXcd rho =
            (1.0 - p) * (1.0 - q) * (eta * eta.adjoint()) + noise_terms;
        const double trace = rho.trace().real();
        if (std::abs(trace - 1.0) > 1e-9)
            throw InvariantViolation("noisy_swap: conditional density trace differs from 1");

        out.density = ComplexMatrix(std::move(rho));
        out.spectrum = hermitian_eigenvalues(out.density);
        if (out.spectrum.back() < -1e-10)
            throw InvariantViolation("noisy_swap: conditional density not positive");
    }
    return outcomes;
}

MixedLuReport mixed_lu_deterministic(const std::vector<MixedOutcome>& outcomes,
                                     const MeasurementBasis& basis) {
    if (outcomes.size() != static_cast<std::size_t>(basis.size()))
        throw StructureError("outcome count must match the basis");

    MixedLuReport report;

    report.spectra_equal = true;
    for (std::size_t i = 1; i < outcomes.size(); ++i) {
        double dev = 0.0;
        for (std::size_t k = 0; k < outcomes[i].spectrum.size(); ++k)
            dev = std::max(dev, std::abs(outcomes[i].spectrum[k] - outcomes[0].spectrum[k]));
        if (dev > kSpectraTol) {
            report.spectra_equal = false;
            break;
        }
    }

    const MeasurementClassReport cls = validate(basis);
    report.diagonal_orbit_basis = cls.diagonal_orbit_only;

    report.diagonal_witnesses_valid = cls.diagonal_orbit_only;
    for (int i = 1; i < basis.size(); ++i) {
        // Relation on the measured operators E_i = conj(stored).
        const PCVerdict v =
            pc_equivalent(basis.measured_operator(i), basis.measured_operator(0));
        if (!v.equivalent || !v.witness) {
            report.diagonal_witnesses_valid = false;
            continue;
        }
        const Eigen::MatrixXcd w = diagonal_kron(v.witness->first, v.witness->second);
        const double residual =
            (outcomes[static_cast<std::size_t>(i)].density.mat() -
             w * outcomes[0].density.mat() * w.adjoint())
                .norm();
        const bool direct = v.branch == PCVerdict::Branch::direct;
        if (!direct || residual > kWitnessTol) {
            report.diagonal_witnesses_valid = false;
            if (!report.witness_failure)
                report.witness_failure = DiagonalWitnessFailure{i + 1, v.branch, residual};
        }
    }
    return report;
}

ObstructionSearchReport conjugation_obstruction_search(int dim, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be positive");
    const MeasurementBasis basis = conjugate_mixed_basis(dim);

    Rng rng(seed);
    ObstructionSearchReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const DiagonalSpectrum a = random_full_rank_spectrum(dim, rng);
        const DiagonalSpectrum b = random_full_rank_spectrum(dim, rng);
        const NoiseModel noise{0.05 + 0.9 * rng.uniform(), 0.05 + 0.9 * rng.uniform()};
        const auto outcomes = noisy_swap(a, b, basis, noise);

        for (std::size_t i = 1; i < outcomes.size(); ++i)
            for (std::size_t k = 0; k < outcomes[i].spectrum.size(); ++k)
                report.max_spectral_deviation =
                    std::max(report.max_spectral_deviation,
                             std::abs(outcomes[i].spectrum[k] - outcomes[0].spectrum[k]));

        if (!report.witness_failure) {
            const MixedLuReport lu = mixed_lu_deterministic(outcomes, basis);
            report.witness_failure = lu.witness_failure;
        }
    }
    return report;
}

}  // namespace swapkit
