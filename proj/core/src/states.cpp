#include "swapkit/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace swapkit {

namespace {

constexpr double kNormTol = 1e-10;

double squared_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

}  // namespace

DiagonalSpectrum DiagonalSpectrum::from_schmidt(std::vector<double> values) {
    if (values.empty()) throw DimensionError("spectrum dimension must be positive");
    for (double v : values) {
        if (!std::isfinite(v)) throw DomainError("spectrum entries must be finite");
        if (v < -1e-12) throw DomainError("spectrum entries must be nonnegative");
    }
    for (double& v : values) v = std::max(v, 0.0);
    if (std::abs(squared_sum(values) - 1.0) > kNormTol)
        throw DomainError("squared spectrum must sum to 1 within 1e-10");
    std::sort(values.begin(), values.end(), std::greater<>());
    return DiagonalSpectrum(std::move(values));
}

DiagonalSpectrum DiagonalSpectrum::from_squared(std::vector<double> squared) {
    if (squared.empty()) throw DimensionError("spectrum dimension must be positive");
    double sum = 0.0;
    for (double v : squared) {
        if (!std::isfinite(v) || v < 0.0)
            throw DomainError("squared spectrum entries must be nonnegative");
        sum += v;
    }
    if (sum <= 0.0) throw DomainError("squared spectrum must have positive mass");
    std::vector<double> values(squared.size());
    for (std::size_t i = 0; i < squared.size(); ++i) values[i] = std::sqrt(squared[i] / sum);
    std::sort(values.begin(), values.end(), std::greater<>());
    return DiagonalSpectrum(std::move(values));
}

DiagonalSpectrum DiagonalSpectrum::from_raw_diagonal(std::vector<double> diagonal) {
    if (diagonal.empty()) throw DimensionError("spectrum dimension must be positive");
    double norm2 = 0.0;
    for (double v : diagonal) {
        if (!std::isfinite(v)) throw DomainError("diagonal entries must be finite");
        norm2 += v * v;
    }
    if (norm2 <= 0.0) throw DomainError("diagonal must be nonzero");
    const double norm = std::sqrt(norm2);
    for (double& v : diagonal) v = std::abs(v) / norm;
    std::sort(diagonal.begin(), diagonal.end(), std::greater<>());
    return DiagonalSpectrum(std::move(diagonal));
}

DiagonalSpectrum DiagonalSpectrum::maximally_entangled(int dim) {
    if (dim < 1) throw DimensionError("spectrum dimension must be positive");
    return DiagonalSpectrum(
        std::vector<double>(static_cast<std::size_t>(dim), 1.0 / std::sqrt(double(dim))));
}

ComplexMatrix DiagonalSpectrum::to_matrix() const { return ComplexMatrix::diagonal(values_); }

bool DiagonalSpectrum::full_rank(double tol) const { return values_.back() > tol; }

double DiagonalSpectrum::g_concurrence() const {
    const int d = dim();
    double log_prod = 0.0;
    for (double v : values_) {
        if (v <= 0.0) return 0.0;
        log_prod += std::log(v);
    }
    return d * std::exp(2.0 * log_prod / d);
}

double DiagonalSpectrum::max_abs_diff(const DiagonalSpectrum& other) const {
    if (other.dim() != dim()) throw DimensionError("spectrum dimensions differ");
    double m = 0.0;
    for (int k = 0; k < dim(); ++k)
        m = std::max(m, std::abs(value(k) - other.value(k)));
    return m;
}

BipartiteState::BipartiteState(ComplexMatrix coeff) : coeff_(std::move(coeff)) {
    if (std::abs(coeff_.frobenius_norm() - 1.0) > kNormTol)
        throw DomainError("coefficient matrix must have unit Frobenius norm");
}

BipartiteState BipartiteState::maximally_entangled(int dim) {
    return BipartiteState(
        ComplexMatrix::identity(dim).scaled(1.0 / std::sqrt(double(dim))));
}

BipartiteState BipartiteState::diagonal(const DiagonalSpectrum& spectrum) {
    return BipartiteState(spectrum.to_matrix());
}

bool BipartiteState::full_rank(double tol) const {
    return singular_values(coeff_).back() > tol;
}

DiagonalSpectrum schmidt_vector(const BipartiteState& state) {
    return DiagonalSpectrum::from_schmidt(singular_values(state.coeff()));
}

double g_concurrence(const BipartiteState& state) {
    return state.dim() * std::pow(det_modulus(state.coeff()), 2.0 / state.dim());
}

DiagonalReduction reduce_to_diagonal(const BipartiteState& state) {
    const int d = state.dim();
    const Eigen::MatrixXcd& m = state.coeff().mat();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.adjoint() * m);
    if (es.info() != Eigen::Success)
        throw InvariantViolation("Hermitian eigensolver failed on coeff†coeff");

    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return es.eigenvalues()(a) > es.eigenvalues()(b);
    });

    std::vector<double> sigma(static_cast<std::size_t>(d));
    Eigen::MatrixXcd v(d, d), u(d, d);
    for (int i = 0; i < d; ++i) {
        sigma[static_cast<std::size_t>(i)] =
            std::sqrt(std::max(0.0, es.eigenvalues()(order[static_cast<std::size_t>(i)])));
        v.col(i) = es.eigenvectors().col(order[static_cast<std::size_t>(i)]);
    }

    const double rank_tol = 1e-12;
    int rank = 0;
    for (int i = 0; i < d; ++i) {
        if (sigma[static_cast<std::size_t>(i)] > rank_tol) {
            u.col(i) = m * v.col(i) / sigma[static_cast<std::size_t>(i)];
            ++rank;
        }
    }
    // Complete the left factor on the kernel by Gram-Schmidt over the
    // canonical basis.
    for (int i = rank; i < d; ++i) {
        Eigen::VectorXcd cand;
        for (int e = 0; e < d; ++e) {
            cand = Eigen::VectorXcd::Zero(d);
            cand(e) = 1.0;
            for (int j = 0; j < i; ++j) cand -= u.col(j).dot(cand) * u.col(j);
            if (cand.norm() > 0.5) break;
        }
        u.col(i) = cand / cand.norm();
    }

    // Deterministic phases: make the first entry of each left singular vector
    // with magnitude above threshold real positive, compensating on v.
    for (int i = 0; i < d; ++i) {
        int first = 0;
        while (first < d - 1 && std::abs(u(first, i)) <= 1e-9) ++first;
        const Cx ph = u(first, i) / std::abs(u(first, i));
        u.col(i) /= ph;
        v.col(i) /= ph;
    }

    std::vector<double> spectrum = sigma;
    // Guard against rounding pushing the squared sum outside the state
    // invariant window.
    double ss = 0.0;
    for (double s : spectrum) ss += s * s;
    const double scale = 1.0 / std::sqrt(ss);
    for (double& s : spectrum) s *= scale;

    return DiagonalReduction{DiagonalSpectrum::from_schmidt(std::move(spectrum)),
                             ComplexMatrix(u), ComplexMatrix(v.adjoint().eval())};
}

BipartiteState random_state(int dim, std::uint64_t seed, StateKind kind) {
    if (dim < 2) throw DomainError("random_state requires dim >= 2");
    Rng rng(seed);
    switch (kind) {
        case StateKind::haar_pure: {
            Eigen::MatrixXcd g(dim, dim);
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k) g(j, k) = Cx(rng.normal(), rng.normal());
            g /= g.norm();
            return BipartiteState(ComplexMatrix(std::move(g)));
        }
        case StateKind::random_spectrum: {
            const std::vector<double> p = rng.dirichlet(dim);
            std::vector<double> diag(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) diag[i] = std::sqrt(p[i]);
            return BipartiteState(ComplexMatrix::diagonal(diag));
        }
    }
    throw DomainError("unknown state kind");
}

DiagonalSpectrum random_full_rank_spectrum(int dim, Rng& rng, double min_squared) {
    if (dim < 2) throw DomainError("spectrum dimension must be at least 2");
    for (;;) {
        std::vector<double> p = rng.dirichlet(dim);
        if (*std::min_element(p.begin(), p.end()) >= min_squared)
            return DiagonalSpectrum::from_squared(std::move(p));
    }
}

FullTensorState::FullTensorState(const BipartiteState& psi, const BipartiteState& phi)
    : dim_(psi.dim()) {
    if (phi.dim() != dim_) throw DimensionError("input states must share dimension");
    const auto& a = psi.coeff();
    const auto& b = phi.coeff();
    amp_.resize(static_cast<std::size_t>(dim_) * dim_ * dim_ * dim_);
    std::size_t idx = 0;
    for (int x = 0; x < dim_; ++x)
        for (int na = 0; na < dim_; ++na)
            for (int nb = 0; nb < dim_; ++nb)
                for (int y = 0; y < dim_; ++y) amp_[idx++] = a(x, na) * b(nb, y);
}

ComplexMatrix FullTensorState::reduced_density_a() const {
    const int d = dim_;
    ComplexMatrix rho(d);
    for (int x = 0; x < d; ++x)
        for (int xp = 0; xp < d; ++xp) {
            Cx sum = 0.0;
            for (int na = 0; na < d; ++na)
                for (int nb = 0; nb < d; ++nb)
                    for (int y = 0; y < d; ++y)
                        sum += amplitude(x, na, nb, y) * std::conj(amplitude(xp, na, nb, y));
            rho(x, xp) = sum;
        }
    return rho;
}

}  // namespace swapkit
