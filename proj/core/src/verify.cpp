#include "swapkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "swapkit/chain.hpp"
#include "swapkit/hadamard.hpp"
#include "swapkit/measurement.hpp"
#include "swapkit/noise.hpp"
#include "swapkit/pc_class.hpp"
#include "swapkit/swap.hpp"

namespace swapkit::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
    std::ostringstream msg;
    bool failed = false;

    template <typename T>
    Failure& operator<<(const T& v) {
        msg << v;
        failed = true;
        return *this;
    }
};

CheckResult finish(const std::string& name, Failure& f, Clock::time_point start,
                   const std::string& pass_detail) {
    CheckResult r;
    r.name = name;
    r.passed = !f.failed;
    r.detail = f.failed ? f.msg.str() : pass_detail;
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Criterion 1: exact PC-class counts inside the Fourier permutation orbit.
CheckResult check_census_table(const Options& opt) {
    const auto start = Clock::now();
    Failure f;
    const long long expected_classes[] = {1, 1, 9, 72, 3600};
    const long long expected_class_size[] = {4, 18, 32, 50, 72};
    for (int d = 2; d <= 6; ++d) {
        const CensusReport r = census(d, opt.threads);
        const long long orbit = factorial(d) * factorial(d) / totient(d);
        if (r.class_count != expected_classes[d - 2])
            f << "d=" << d << ": class_count " << r.class_count << " != "
              << expected_classes[d - 2] << "; ";
        if (r.class_size != expected_class_size[d - 2])
            f << "d=" << d << ": class_size " << r.class_size << " != "
              << expected_class_size[d - 2] << "; ";
        if (r.orbit_size != orbit)
            f << "d=" << d << ": orbit_size " << r.orbit_size << " != " << orbit << "; ";
    }
    return finish("pc-census-table", f, start,
                  "class counts 1,1,9,72,3600 with sizes 4,18,32,50,72 for d=2..6");
}

struct SweepData {
    double max_prob_dev = 0.0;       // |p_i - 1/d²|
    bool all_lu_deterministic = true;
    double max_g_residual = 0.0;
    int instances = 0;
};

SweepData run_swap_sweep(std::uint64_t seed) {
    SweepData data;
    for (int d = 2; d <= 5; ++d) {
        const MeasurementBasis basis = gour_basis(fourier(d).to_unitary());
        Rng rng(seed + static_cast<std::uint64_t>(d));
        const double uniform = 1.0 / (static_cast<double>(d) * d);
        for (int t = 0; t < 100; ++t) {
            const DiagonalSpectrum a = random_full_rank_spectrum(d, rng);
            const DiagonalSpectrum b = random_full_rank_spectrum(d, rng);
            const SwapReport r = swap(a, b, basis);
            for (const auto& o : r.outcomes)
                data.max_prob_dev = std::max(data.max_prob_dev,
                                             std::abs(o.probability - uniform));
            if (!r.lu_deterministic) data.all_lu_deterministic = false;
            data.max_g_residual = std::max(data.max_g_residual, r.g_factorization_residual);
            ++data.instances;
        }
    }
    return data;
}

// Criterion 2: uniform outcome probabilities.
CheckResult check_uniform_probabilities(const SweepData& sweep) {
    const auto start = Clock::now();
    Failure f;
    if (sweep.max_prob_dev > 1e-9)
        f << "max |p_i - 1/d^2| = " << sweep.max_prob_dev << " > 1e-9";
    std::ostringstream ok;
    ok << sweep.instances << " instances, max |p_i - 1/d^2| = " << sweep.max_prob_dev;
    return finish("uniform-probabilities", f, start, ok.str());
}

// Criterion 3: universal LU-determinism.
CheckResult check_lu_determinism(const SweepData& sweep) {
    const auto start = Clock::now();
    Failure f;
    if (!sweep.all_lu_deterministic)
        f << "some instance produced outcome Schmidt vectors differing by > 1e-8";
    std::ostringstream ok;
    ok << sweep.instances << " instances, all d^2 Schmidt vectors agree within 1e-8";
    return finish("lu-determinism", f, start, ok.str());
}

// Criterion 4: G-concurrence factorization.
CheckResult check_g_factorization(const SweepData& sweep) {
    const auto start = Clock::now();
    Failure f;
    if (sweep.max_g_residual >= 1e-9)
        f << "max factorization residual = " << sweep.max_g_residual << " >= 1e-9";
    std::ostringstream ok;
    ok << "max |C(eta_i) - C(psi)C(phi)C(Gamma_i)| = " << sweep.max_g_residual;
    return finish("g-concurrence-factorization", f, start, ok.str());
}

// Criterion 5: the full-tensor oracle agrees with the coefficient-matrix engine.
CheckResult check_oracle_equivalence(const Options& opt) {
    const auto start = Clock::now();
    Failure f;
    double max_prob = 0.0, max_schmidt = 0.0;
    for (int d = 2; d <= 3; ++d) {
        const MeasurementBasis basis = gour_basis(fourier(d).to_unitary());
        Rng rng(opt.seed + 100 + static_cast<std::uint64_t>(d));
        for (int t = 0; t < 100; ++t) {
            const DiagonalSpectrum a = random_full_rank_spectrum(d, rng);
            const DiagonalSpectrum b = random_full_rank_spectrum(d, rng);
            const SwapReport fast = swap(a, b, basis);
            const SwapReport slow = oracle_swap(a, b, basis);
            for (std::size_t i = 0; i < fast.outcomes.size(); ++i) {
                max_prob = std::max(max_prob, std::abs(fast.outcomes[i].probability -
                                                       slow.outcomes[i].probability));
                if (fast.outcomes[i].schmidt && slow.outcomes[i].schmidt)
                    max_schmidt = std::max(
                        max_schmidt,
                        fast.outcomes[i].schmidt->max_abs_diff(*slow.outcomes[i].schmidt));
            }
        }
    }
    if (max_prob > 1e-9) f << "probability deviation " << max_prob << " > 1e-9; ";
    if (max_schmidt > 1e-8) f << "Schmidt deviation " << max_schmidt << " > 1e-8";
    std::ostringstream ok;
    ok << "200 instances; max prob dev " << max_prob << ", max Schmidt dev " << max_schmidt;
    return finish("oracle-equivalence", f, start, ok.str());
}

std::vector<DiagonalSpectrum> counterexample_links() {
    return {DiagonalSpectrum::from_raw_diagonal({9, 9, 1, 1}),
            DiagonalSpectrum::from_raw_diagonal({9, 9, 9, 3}),
            DiagonalSpectrum::from_raw_diagonal({8, 5, 5, 1})};
}

// Criterion 6: the d=4 two-node counterexample. The 3-decimal reference values
// mix truncation and rounding in their third decimals (0.5117... appears as
// 0.511 while 0.4707... appears as 0.471), so the check pins the full-precision
// spectra, frozen from an independent 60-digit computation, at ±5e-4 and
// additionally requires every 3-decimal reference triple to be the truncation
// or rounding of the computed component.
CheckResult check_chain_counterexample() {
    const auto start = Clock::now();
    Failure f;
    const auto links = counterexample_links();
    const double exact_left[] = {0.856147054626, 0.511754068666, 0.070358595191,
                                 0.013025442134};
    const double exact_right[] = {0.878990174517, 0.470783718456, 0.074631950010,
                                  0.013001368269};
    const double shown_left[] = {0.856, 0.511, 0.070, 0.013};
    const double shown_right[] = {0.879, 0.471, 0.075, 0.013};

    auto display_consistent = [](double computed, double shown) {
        const double truncated = std::floor(computed * 1000.0) / 1000.0;
        const double rounded = std::round(computed * 1000.0) / 1000.0;
        return std::abs(shown - truncated) < 1e-9 || std::abs(shown - rounded) < 1e-9;
    };

    const ChainResult left = evaluate_chain(links, FusionTree::parse("((0.1).2)"));
    const ChainResult right = evaluate_chain(links, FusionTree::parse("(0.(1.2))"));
    for (int k = 0; k < 4; ++k) {
        if (std::abs(left.final.value(k) - exact_left[k]) > 5e-4)
            f << "((0.1).2) component " << k << " = " << left.final.value(k) << "; ";
        if (std::abs(right.final.value(k) - exact_right[k]) > 5e-4)
            f << "(0.(1.2)) component " << k << " = " << right.final.value(k) << "; ";
        if (!display_consistent(left.final.value(k), shown_left[k]))
            f << "((0.1).2) component " << k << " does not display as " << shown_left[k]
              << "; ";
        if (!display_consistent(right.final.value(k), shown_right[k]))
            f << "(0.(1.2)) component " << k << " does not display as " << shown_right[k]
              << "; ";
    }
    return finish("chain-counterexample", f, start,
                  "fused spectra (0.8561,0.5118,0.0704,0.0130) vs (0.8790,0.4708,0.0746,0.0130), "
                  "matching the 3-decimal reference values");
}

// Criterion 7: order independence at d=2,3; violation witness at d=4.
CheckResult check_order_independence(const Options& opt) {
    const auto start = Clock::now();
    Failure f;
    double worst_low_d = 0.0;
    for (int d = 2; d <= 3; ++d) {
        const OrderIndependenceReport r =
            order_independence_check(d, 3, 500, opt.seed + 200 + static_cast<std::uint64_t>(d));
        worst_low_d = std::max(worst_low_d, r.max_discrepancy);
        if (!r.holds)
            f << "d=" << d << ": associativity discrepancy " << r.max_discrepancy
              << " >= 1e-7; ";
    }
    const auto links = counterexample_links();
    const double disc =
        evaluate_chain(links, FusionTree::parse("((0.1).2)"))
            .final.max_abs_diff(evaluate_chain(links, FusionTree::parse("(0.(1.2))")).final);
    if (disc <= 0.02) f << "d=4 witness discrepancy " << disc << " <= 0.02";
    std::ostringstream ok;
    ok << "d=2,3 max discrepancy " << worst_low_d << " over 500 triples each; d=4 witness "
       << disc;
    return finish("order-independence", f, start, ok.str());
}

// Criterion 8: the cross-ratio law on the d=4 family.
CheckResult check_cross_ratio(const Options& opt) {
    const auto start = Clock::now();
    Failure f;
    double max_law = 0.0;
    for (int g = 0; g < 20; ++g) {
        const double alpha = M_PI * g / 20.0;
        const Cx chi = cross_ratio(family_u4(alpha).matrix);
        const Cx expected(std::sin(alpha), std::cos(alpha));  // i e^{-iα}
        max_law = std::max(max_law, std::abs(chi - expected));
    }
    if (max_law > 1e-10) f << "max |chi(U(alpha)) - i e^{-i alpha}| = " << max_law << "; ";

    Rng rng(opt.seed + 300);
    double max_inv = 0.0;
    for (int t = 0; t < 50; ++t) {
        const double alpha = M_PI * rng.uniform();
        const ComplexMatrix u = family_u4(alpha).matrix;
        std::vector<double> lp(4), rp(4);
        for (int k = 0; k < 4; ++k) {
            lp[static_cast<std::size_t>(k)] = 2.0 * M_PI * rng.uniform();
            rp[static_cast<std::size_t>(k)] = 2.0 * M_PI * rng.uniform();
        }
        const ComplexMatrix dressed = dress(DiagonalUnitary(lp), u, DiagonalUnitary(rp));
        max_inv = std::max(max_inv, std::abs(cross_ratio(dressed) - cross_ratio(u)));
    }
    if (max_inv > 1e-12) f << "diagonal dressing moved chi by " << max_inv << " > 1e-12";
    std::ostringstream ok;
    ok << "law residual " << max_law << " on 20 grid points; dressing invariance residual "
       << max_inv;
    return finish("cross-ratio-law", f, start, ok.str());
}

// Criterion 9: |G_d| = ε(d)·d²·φ(d) and |stabilizer| = φ(d) by exhaustion.
CheckResult check_group_counts() {
    const auto start = Clock::now();
    Failure f;
    for (int d = 2; d <= 5; ++d) {
        std::vector<int> idx(static_cast<std::size_t>(d));
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<std::vector<int>> perms;
        {
            std::vector<int> p = idx;
            do {
                perms.push_back(p);
            } while (std::next_permutation(p.begin(), p.end()));
        }
        const ExponentMatrix f_exp = fourier(d);
        long long affine_pairs = 0, stabilizer_pairs = 0;
        for (const auto& s : perms)
            for (const auto& t : perms) {
                const PermutationSpec left{s}, right{t};
                if (affine_symmetry(left, right, d)) ++affine_pairs;
                if (permuted_fourier(left, right) == f_exp) ++stabilizer_pairs;
            }
        const long long expected_g =
            static_cast<long long>(conjugation_branch_count(d)) * d * d * totient(d);
        if (affine_pairs != expected_g)
            f << "d=" << d << ": |G_d| = " << affine_pairs << " != " << expected_g << "; ";
        if (stabilizer_pairs != totient(d))
            f << "d=" << d << ": |S| = " << stabilizer_pairs << " != " << totient(d) << "; ";
    }
    return finish("symmetry-group-counts", f, start,
                  "exhaustive |G_d| = eps(d) d^2 phi(d) and |S| = phi(d) for d=2..5");
}

// Criterion 10: depolarizing-noise robustness for diagonal-orbit MEMs.
CheckResult check_noise_robustness(const Options& opt) {
    const auto start = Clock::now();
    Failure f;
    double max_spec_dev = 0.0, max_residual = 0.0;
    for (int d = 2; d <= 3; ++d) {
        const MeasurementBasis basis = gour_basis(fourier(d).to_unitary());
        Rng rng(opt.seed + 400 + static_cast<std::uint64_t>(d));
        for (int t = 0; t < 50; ++t) {
            const DiagonalSpectrum a = random_full_rank_spectrum(d, rng);
            const DiagonalSpectrum b = random_full_rank_spectrum(d, rng);
            const NoiseModel noise{rng.uniform(), rng.uniform()};
            const auto outcomes = noisy_swap(a, b, basis, noise);
            for (std::size_t i = 1; i < outcomes.size(); ++i)
                for (std::size_t k = 0; k < outcomes[i].spectrum.size(); ++k)
                    max_spec_dev = std::max(max_spec_dev,
                                            std::abs(outcomes[i].spectrum[k] -
                                                     outcomes[0].spectrum[k]));
            const MixedLuReport lu = mixed_lu_deterministic(outcomes, basis);
            if (!lu.spectra_equal || !lu.diagonal_witnesses_valid) {
                f << "d=" << d << " trial " << t << ": spectra_equal=" << lu.spectra_equal
                  << " witnesses=" << lu.diagonal_witnesses_valid;
                if (lu.witness_failure)
                    max_residual =
                        std::max(max_residual, lu.witness_failure->reconstruction_residual);
                return finish("noise-robustness", f, start, "");
            }
        }
    }
    std::ostringstream ok;
    ok << "100 noisy instances; max spectral deviation " << max_spec_dev
       << ", all diagonal witnesses reconstruct within 1e-9";
    return finish("noise-robustness", f, start, ok.str());
}

}  // namespace

std::vector<CheckResult> run_all_checks(const Options& options) {
    std::vector<CheckResult> results;
    results.push_back(check_census_table(options));

    const auto sweep_start = Clock::now();
    const SweepData sweep = run_swap_sweep(options.seed);
    const double sweep_seconds =
        std::chrono::duration<double>(Clock::now() - sweep_start).count();
    results.push_back(check_uniform_probabilities(sweep));
    results.back().seconds += sweep_seconds;  // the sweep is shared by 2-4
    results.push_back(check_lu_determinism(sweep));
    results.push_back(check_g_factorization(sweep));

    results.push_back(check_oracle_equivalence(options));
    results.push_back(check_chain_counterexample());
    results.push_back(check_order_independence(options));
    results.push_back(check_cross_ratio(options));
    results.push_back(check_group_counts());
    results.push_back(check_noise_robustness(options));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace swapkit::verify
