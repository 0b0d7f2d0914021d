#include "swapkit/common.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

namespace swapkit {

namespace {

double initial_tolerance() {
    if (const char* env = std::getenv("SWAPKIT_TOLERANCE")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
    }
    return 1e-9;
}

std::atomic<double>& tolerance_slot() {
    static std::atomic<double> tol{initial_tolerance()};
    return tol;
}

}  // namespace

double comparison_tolerance() { return tolerance_slot().load(); }

void set_comparison_tolerance(double tol) {
    if (!(tol > 0.0)) throw DomainError("comparison tolerance must be positive");
    tolerance_slot().store(tol);
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

double Rng::exponential() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return -std::log(u);
}

std::vector<double> Rng::dirichlet(int n) {
    if (n < 1) throw DomainError("dirichlet: n must be positive");
    std::vector<double> v(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& x : v) {
        x = exponential();
        sum += x;
    }
    for (double& x : v) x /= sum;
    return v;
}

}  // namespace swapkit
