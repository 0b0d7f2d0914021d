#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace swapkit::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    std::uint64_t seed = 1;
    int threads = 0;  // census worker cap; <=0 picks a default
};

/// The protocol-guarantee suite: every documented quantitative claim of the
/// library, each with its tolerance pinned in code. Deterministic for a fixed
/// seed.
std::vector<CheckResult> run_all_checks(const Options& options = {});

/// Convenience: true iff every check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace swapkit::verify
