// Acceptance suite: one pass/fail line per documented guarantee, nonzero exit
// on any failure. The checks and their tolerances live in swapkit/verify.

#include <cstdio>

#include "swapkit/verify.hpp"

int main() {
    const auto results = swapkit::verify::run_all_checks();
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%s %-28s %s [%.2fs]\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        ok = ok && r.passed;
    }
    std::printf("%s: %zu checks\n", ok ? "ALL PASSED" : "FAILURES PRESENT", results.size());
    return ok ? 0 : 1;
}
