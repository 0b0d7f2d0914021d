#include "swapkit/pc_class.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <thread>

namespace swapkit {

namespace {

// Wrap a phase difference into (-π, π].
double principal(double angle) {
    while (angle <= -M_PI) angle += 2.0 * M_PI;
    while (angle > M_PI) angle -= 2.0 * M_PI;
    return angle;
}

std::optional<std::pair<int, int>> affine_parameters(const PermutationSpec& p, int d) {
    if (d == 1) return std::make_pair(1, 0);
    // σ(j) = αj + β requires constant unit increments.
    const int beta = p(0);
    const int alpha = ((p(1) - p(0)) % d + d) % d;
    if (std::gcd(alpha, d) != 1) return std::nullopt;
    for (int j = 0; j < d; ++j)
        if (p(j) != (alpha * j + beta) % d) return std::nullopt;
    return std::make_pair(alpha, beta);
}

}  // namespace

PCVerdict pc_equivalent(const ComplexMatrix& h1, const ComplexMatrix& h2, double tol) {
    if (h1.dim() != h2.dim()) throw DimensionError("matrix dimensions differ");

    const DephasedForm f1 = dephase_canonical(h1);
    const DephasedForm f2 = dephase_canonical(h2);

    PCVerdict verdict;
    if (f1.canonical.approx_equal(f2.canonical, tol)) {
        // h1 = L1 C R1, h2 = L2 C R2  =>  h1 = (L1 L2†) h2 (R2† R1)
        std::vector<double> dl(static_cast<std::size_t>(h1.dim()));
        std::vector<double> dr(static_cast<std::size_t>(h1.dim()));
        for (int k = 0; k < h1.dim(); ++k) {
            dl[static_cast<std::size_t>(k)] = principal(f1.left.phase(k) - f2.left.phase(k));
            dr[static_cast<std::size_t>(k)] = principal(f1.right.phase(k) - f2.right.phase(k));
        }
        verdict.equivalent = true;
        verdict.branch = PCVerdict::Branch::direct;
        verdict.witness = std::make_pair(DiagonalUnitary(std::move(dl)),
                                         DiagonalUnitary(std::move(dr)));
        return verdict;
    }

    const DephasedForm f2c = dephase_canonical(h2.conjugate());
    if (f1.canonical.approx_equal(f2c.canonical, tol)) {
        std::vector<double> dl(static_cast<std::size_t>(h1.dim()));
        std::vector<double> dr(static_cast<std::size_t>(h1.dim()));
        for (int k = 0; k < h1.dim(); ++k) {
            dl[static_cast<std::size_t>(k)] = principal(f1.left.phase(k) - f2c.left.phase(k));
            dr[static_cast<std::size_t>(k)] = principal(f1.right.phase(k) - f2c.right.phase(k));
        }
        verdict.equivalent = true;
        verdict.branch = PCVerdict::Branch::conjugate;
        verdict.witness = std::make_pair(DiagonalUnitary(std::move(dl)),
                                         DiagonalUnitary(std::move(dr)));
        return verdict;
    }

    return verdict;
}

Cx cross_ratio(const ComplexMatrix& h) {
    if (h.dim() < 3) throw DimensionError("cross_ratio needs dim >= 3");
    const Cx n1 = h(0, 1), n2 = h(1, 2), d1 = h(0, 2), d2 = h(1, 1);
    constexpr double kZero = 1e-300;
    if (std::abs(n1) <= kZero || std::abs(n2) <= kZero || std::abs(d1) <= kZero ||
        std::abs(d2) <= kZero)
        throw DomainError("cross_ratio entries (0,1),(1,2),(0,2),(1,1) must be nonzero");
    return (n1 * n2) / (d1 * d2);
}

std::optional<AffineSymmetry> affine_symmetry(const PermutationSpec& left,
                                              const PermutationSpec& right, int dim) {
    if (left.dim() != dim || right.dim() != dim)
        throw DimensionError("permutation dimensions differ");
    const auto sig = affine_parameters(left, dim);
    if (!sig) return std::nullopt;
    const auto tau = affine_parameters(right, dim);
    if (!tau) return std::nullopt;

    const int prod = (sig->first * tau->first) % dim;
    AffineSymmetry out;
    out.alpha = sig->first;
    out.beta = sig->second;
    out.gamma = tau->first;
    out.delta = tau->second;
    if (prod == 1 % dim) {
        out.sign = +1;
    } else if (prod == (dim - 1) % dim) {
        out.sign = -1;
    } else {
        return std::nullopt;
    }
    return out;
}

long long totient(long long n) {
    if (n < 1) throw DomainError("totient requires n >= 1");
    long long result = n;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

int conjugation_branch_count(int dim) { return dim <= 2 ? 1 : 2; }

ExponentMatrix permuted_fourier(const PermutationSpec& left, const PermutationSpec& right) {
    const int d = left.dim();
    if (right.dim() != d) throw DimensionError("permutation dimensions differ");
    std::vector<int> exps(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            exps[static_cast<std::size_t>(j * d + k)] = (left(j) * right(k)) % d;
    return ExponentMatrix(d, std::move(exps));
}

ExponentMatrix pc_canonical_key(const ExponentMatrix& m) {
    const int d = m.dim();
    std::vector<int> e(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            e[static_cast<std::size_t>(j * d + k)] =
                ((m.at(j, k) - m.at(0, k) - m.at(j, 0) + m.at(0, 0)) % d + 2 * d) % d;
    std::vector<int> neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = (d - e[i]) % d;
    return ExponentMatrix(d, std::min(e, neg));
}

namespace {

// Canonical key of the permuted Fourier exponent matrix, written into `key`
// as raw bytes. Buffers are caller-owned so the census hot loop is
// allocation-free.
void canonical_key_bytes(const std::vector<int>& sigma, const std::vector<int>& tau, int d,
                         std::string& key, std::vector<int>& scratch) {
    scratch.resize(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            scratch[static_cast<std::size_t>(j * d + k)] =
                (sigma[static_cast<std::size_t>(j)] * tau[static_cast<std::size_t>(k)]) % d;
    // Integer dephasing: row 0 and column 0 of (σ(j)τ(k)) become σ(0)τ(k) and
    // σ(j)τ(0); the dephased entry is (σ(j)-σ(0))(τ(k)-τ(0)) mod d.
    key.resize(scratch.size());
    std::string neg(scratch.size(), '\0');
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const std::size_t i = static_cast<std::size_t>(j * d + k);
            const int v = ((scratch[i] - scratch[static_cast<std::size_t>(k)] -
                            scratch[static_cast<std::size_t>(j * d)] + scratch[0]) %
                               d +
                           2 * d) %
                          d;
            key[i] = static_cast<char>(v);
            neg[i] = static_cast<char>((d - v) % d);
        }
    if (neg < key) key.swap(neg);
}

std::vector<std::vector<int>> all_permutations(int d) {
    std::vector<int> p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

CensusReport census(int dim, int threads) {
    if (dim < 2 || dim > 6) throw SizeError("census is bounded to 2 <= dim <= 6");

    const std::vector<std::vector<int>> perms = all_permutations(dim);
    const std::size_t n = perms.size();

    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = static_cast<int>(hw == 0 ? 1 : std::min(hw, 8u));
    }
    threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), n));

    // Workers count permutation pairs per canonical key over disjoint ranges
    // of the left permutation; the merge is associative, so the result does
    // not depend on the partition.
    std::vector<std::map<std::string, long long>> partial(static_cast<std::size_t>(threads));
    {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + static_cast<std::size_t>(threads) - 1) /
                                  static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            const std::size_t lo = static_cast<std::size_t>(t) * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            pool.emplace_back([&, lo, hi, t] {
                std::string key;
                std::vector<int> scratch;
                auto& local = partial[static_cast<std::size_t>(t)];
                for (std::size_t si = lo; si < hi; ++si)
                    for (std::size_t ti = 0; ti < n; ++ti) {
                        canonical_key_bytes(perms[si], perms[ti], dim, key, scratch);
                        ++local[key];
                    }
            });
        }
        for (auto& th : pool) th.join();
    }

    std::map<std::string, long long> pair_counts;
    for (auto& local : partial)
        for (auto& [key, count] : local) pair_counts[key] += count;

    const long long phi = totient(dim);
    const int eps = conjugation_branch_count(dim);
    const long long total_pairs = static_cast<long long>(n) * static_cast<long long>(n);
    const long long expected_class_size = static_cast<long long>(eps) * dim * dim;
    const long long expected_classes = total_pairs / (expected_class_size * phi);

    CensusReport report;
    report.dim = dim;
    report.totient = phi;
    report.epsilon = eps;
    report.class_count = static_cast<long long>(pair_counts.size());

    long long pair_sum = 0;
    for (const auto& [key, count] : pair_counts) {
        pair_sum += count;
        // Every distinct orbit element arises from exactly |stabilizer| = φ(d)
        // permutation pairs.
        if (count % phi != 0 || count / phi != expected_class_size)
            throw InvariantViolation("census: class size disagrees with ε(d)·d²");
        std::vector<int> exps(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) exps[i] = static_cast<int>(key[i]);
        report.representatives.emplace_back(dim, std::move(exps));
    }
    report.class_size = expected_class_size;
    report.orbit_size = pair_sum / phi;

    if (pair_sum != total_pairs)
        throw InvariantViolation("census: pair count mismatch");
    if (report.class_count != expected_classes)
        throw InvariantViolation("census: class count disagrees with (d!)²/(ε(d)·d²·φ(d))");
    if (report.class_count * report.class_size != report.orbit_size)
        throw InvariantViolation("census: class_count · class_size != orbit_size");

    return report;
}

}  // namespace swapkit
