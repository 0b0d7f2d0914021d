#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace swapkit::cli {

enum class Command { swap, census, chain, chain_sweep, noise, classify, verify_all };

struct RunConfig {
    Command command = Command::swap;
    int dim = 2;
    std::uint64_t seed = 1;
    double tolerance = 0.0;  // 0 = keep the ambient default
    int threads = 0;
    std::string out_path;  // empty = stdout

    // swap / noise
    std::vector<double> a_values;
    std::vector<double> b_values;
    bool raw_diag = false;  // values are diagonal entries, not squared weights
    std::string basis_spec = "gour:fourier";
    bool with_oracle = false;

    // noise
    double p = 0.0;
    double q = 0.0;

    // chain
    std::vector<std::vector<double>> link_values;
    std::string order;  // empty = left-associated

    // chain-sweep
    int num_links = 3;
    int trials = 100;

    // census
    std::string emit_reps_path;

    // classify
    std::string matrix_a_path;
    std::string matrix_b_path;
};

/// Parses a full argument vector (without the program name). Throws UsageError
/// on malformed input.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a parsed config. Returns the process exit status: 0 on success,
/// 2 when a documented guarantee failed numerically.
int run(const RunConfig& config);

/// parse + run with the usage/violation exit-code policy applied (1 on usage
/// errors, 2 on invariant violations).
int main_entry(int argc, char** argv);

}  // namespace swapkit::cli
