#include "swapkit/swap.hpp"

#include <algorithm>
#include <cmath>

namespace swapkit {

namespace {

constexpr double kUniformTol = 1e-9;
constexpr double kSchmidtTol = 1e-8;
constexpr double kNegligibleProb = 1e-14;

// Shared finishing pass: probability/Schmidt flags and the G-concurrence
// factorization residual.
void finalize_report(SwapReport& report, const DiagonalSpectrum& a, const DiagonalSpectrum& b,
                     const MeasurementBasis& basis) {
    const int d = report.dim;
    const double uniform = 1.0 / (static_cast<double>(d) * d);

    report.uniform_probs = true;
    double prob_sum = 0.0;
    for (const auto& outcome : report.outcomes) {
        prob_sum += outcome.probability;
        if (std::abs(outcome.probability - uniform) > kUniformTol) report.uniform_probs = false;
        if (!outcome.output.has_value()) report.has_negligible_outcomes = true;
    }
    if (std::abs(prob_sum - 1.0) > kUniformTol)
        throw InvariantViolation("swap outcome probabilities do not sum to 1");

    const DiagonalSpectrum* first = nullptr;
    report.lu_deterministic = true;
    for (const auto& outcome : report.outcomes) {
        if (!outcome.schmidt.has_value()) continue;
        if (!first) {
            first = &*outcome.schmidt;
            continue;
        }
        if (first->max_abs_diff(*outcome.schmidt) > kSchmidtTol) {
            report.lu_deterministic = false;
            break;
        }
    }
    if (report.lu_deterministic && first) report.common_schmidt = *first;

    const double c_inputs = a.g_concurrence() * b.g_concurrence();
    double residual = 0.0;
    for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
        const auto& outcome = report.outcomes[i];
        if (!outcome.output.has_value()) continue;
        const double c_out = g_concurrence(*outcome.output);
        const double c_gamma =
            d * std::pow(det_modulus(basis.stored_operator(static_cast<int>(i))), 2.0 / d);
        residual = std::max(residual, std::abs(c_out - c_inputs * c_gamma));
    }
    report.g_factorization_residual = residual;
}

}  // namespace

SwapReport swap(const DiagonalSpectrum& a, const DiagonalSpectrum& b,
                const MeasurementBasis& basis) {
    const int d = basis.dim();
    if (a.dim() != d || b.dim() != d)
        throw DimensionError("swap: spectra and basis must share dimension");

    SwapReport report;
    report.dim = d;
    report.outcomes.resize(static_cast<std::size_t>(basis.size()));

    const bool inputs_full_rank = a.full_rank() && b.full_rank();

    for (int i = 0; i < basis.size(); ++i) {
        SwapOutcome& outcome = report.outcomes[static_cast<std::size_t>(i)];
        outcome.index = i + 1;

        const ComplexMatrix& stored = basis.stored_operator(i);
        Eigen::MatrixXcd raw(d, d);
        double p = 0.0;
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n) {
                const Cx e_mn = std::conj(stored(m, n));  // E_i = conj(E_i*)
                raw(m, n) = a.value(m) * e_mn * b.value(n);
                // Trace formula p = Tr(B² E† A² E) expanded entrywise.
                p += a.value(m) * a.value(m) * b.value(n) * b.value(n) * std::norm(e_mn);
            }
        outcome.probability = p;
        outcome.raw_coeff = ComplexMatrix(std::move(raw));

        if (p < kNegligibleProb) {
            if (inputs_full_rank) report.degeneracy_warning = true;
            continue;
        }
        outcome.output =
            BipartiteState(outcome.raw_coeff.scaled(1.0 / std::sqrt(p)));
        outcome.schmidt = schmidt_vector(*outcome.output);
    }

    finalize_report(report, a, b, basis);
    return report;
}

SwapReport oracle_swap(const DiagonalSpectrum& a, const DiagonalSpectrum& b,
                       const MeasurementBasis& basis) {
    const int d = basis.dim();
    if (a.dim() != d || b.dim() != d)
        throw DimensionError("oracle_swap: spectra and basis must share dimension");
    if (d > 6) throw SizeError("oracle_swap keeps d⁴ amplitudes dense; d must be <= 6");

    const FullTensorState full(BipartiteState::diagonal(a), BipartiteState::diagonal(b));
    const auto gammas = projector_vectors(basis);

    SwapReport report;
    report.dim = d;
    report.outcomes.resize(static_cast<std::size_t>(basis.size()));

    const bool inputs_full_rank = a.full_rank() && b.full_rank();

    for (int i = 0; i < basis.size(); ++i) {
        SwapOutcome& outcome = report.outcomes[static_cast<std::size_t>(i)];
        outcome.index = i + 1;
        const auto& g = gammas[static_cast<std::size_t>(i)];

        // ⟨Γ_i| applied to the node subsystems of |ψ⟩⊗|φ⟩.
        Eigen::MatrixXcd projected = Eigen::MatrixXcd::Zero(d, d);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                Cx sum = 0.0;
                for (int na = 0; na < d; ++na)
                    for (int nb = 0; nb < d; ++nb)
                        sum += std::conj(g[static_cast<std::size_t>(na * d + nb)]) *
                               full.amplitude(x, na, nb, y);
                projected(x, y) = sum;
            }

        const double p = projected.squaredNorm();
        outcome.probability = p;
        outcome.raw_coeff = ComplexMatrix(projected);

        if (p < kNegligibleProb) {
            if (inputs_full_rank) report.degeneracy_warning = true;
            continue;
        }

        projected /= std::sqrt(p);
        outcome.output = BipartiteState(ComplexMatrix(projected));

        // Schmidt data from the reduced density matrix of the A side.
        const Eigen::MatrixXcd rho_a = projected * projected.adjoint();
        std::vector<double> evals = hermitian_eigenvalues(ComplexMatrix(rho_a.eval()));
        std::vector<double> schmidt(evals.size());
        double ss = 0.0;
        for (std::size_t k = 0; k < evals.size(); ++k) {
            schmidt[k] = std::sqrt(std::max(0.0, evals[k]));
            ss += schmidt[k] * schmidt[k];
        }
        for (double& s : schmidt) s /= std::sqrt(ss);
        outcome.schmidt = DiagonalSpectrum::from_schmidt(std::move(schmidt));
    }

    finalize_report(report, a, b, basis);
    return report;
}

bool check_theorem1_pair(const ComplexMatrix& e_i, const ComplexMatrix& e_j, int trials,
                         std::uint64_t seed, std::optional<Theorem1Witness>* witness) {
    const int d = e_i.dim();
    if (e_j.dim() != d) throw DimensionError("operator dimensions differ");
    if (trials < 1) throw DomainError("trials must be positive");
    // Unbiasedness here is equal entry moduli; the common scale is irrelevant
    // because the comparison normalizes outputs.
    for (const ComplexMatrix* m : {&e_i, &e_j})
        if (m->max_abs() - m->min_abs() > 1e-9 * m->max_abs())
            throw DomainError("check_theorem1_pair requires unbiased operators");

    Rng rng(seed);
    bool statistically_equivalent = true;
    for (int t = 0; t < trials; ++t) {
        const DiagonalSpectrum a = random_full_rank_spectrum(d, rng);
        const DiagonalSpectrum b = random_full_rank_spectrum(d, rng);
        const ComplexMatrix am = a.to_matrix(), bm = b.to_matrix();

        auto normalized_schmidt = [](const ComplexMatrix& m) {
            std::vector<double> sv = singular_values(m);
            double ss = 0.0;
            for (double s : sv) ss += s * s;
            for (double& s : sv) s /= std::sqrt(ss);
            return DiagonalSpectrum::from_schmidt(std::move(sv));
        };
        const DiagonalSpectrum sv_i = normalized_schmidt(am * e_i * bm);
        const DiagonalSpectrum sv_j = normalized_schmidt(am * e_j * bm);
        if (sv_i.max_abs_diff(sv_j) > 1e-8) {
            statistically_equivalent = false;
            if (witness && !witness->has_value())
                *witness = Theorem1Witness{a, b, sv_i, sv_j};
            break;
        }
    }

    const bool algebraic = pc_equivalent(e_i, e_j).equivalent;
    if (algebraic != statistically_equivalent)
        throw InvariantViolation(
            "universal LU-determinism test disagrees with the PC-equivalence decision");
    return algebraic;
}

}  // namespace swapkit
