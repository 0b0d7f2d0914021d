#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace swapkit {

using Cx = std::complex<double>;

inline constexpr const char* kVersion = "0.1.0";

/// Global absolute tolerance used for generic matrix/scalar comparisons.
/// Defaults to 1e-9; the environment variable SWAPKIT_TOLERANCE overrides the
/// default once at startup, and set_comparison_tolerance overrides it at runtime.
double comparison_tolerance();
void set_comparison_tolerance(double tol);

// --- error taxonomy ---------------------------------------------------------

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateEntryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct StructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidBasisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A documented mathematical guarantee failed numerically. CLI maps this to
/// exit code 2; the test suites treat it as an escalation signal.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- deterministic RNG ------------------------------------------------------

/// mt19937_64 with hand-rolled variate transforms so that streams are
/// bit-reproducible for a fixed seed regardless of the standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double normal();

    double exponential() ;

    /// Dirichlet(1,...,1): a uniform point on the probability simplex.
    std::vector<double> dirichlet(int n);

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace swapkit
