#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "swapkit/json_io.hpp"
#include "swapkit/verify.hpp"

namespace swapkit::cli {

namespace {

std::vector<double> parse_csv(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("malformed CSV number: '" + item + "'");
        }
    }
    if (values.empty()) throw UsageError("empty CSV list");
    return values;
}

DiagonalSpectrum spectrum_from_values(const std::vector<double>& values, bool raw_diag,
                                      int expect_dim) {
    for (double v : values)
        if (v < 0.0) throw UsageError("spectrum entries must be nonnegative");
    if (static_cast<int>(values.size()) != expect_dim)
        throw UsageError("spectrum length does not match --dim");
    return raw_diag ? DiagonalSpectrum::from_raw_diagonal(values)
                    : DiagonalSpectrum::from_squared(values);
}

MeasurementBasis resolve_basis(const std::string& spec, int dim) {
    if (spec == "gour:fourier") return gour_basis(fourier(dim).to_unitary());
    if (spec.rfind("gour:u4", 0) == 0) {
        if (dim != 4) throw UsageError("basis gour:u4 requires --dim 4");
        double alpha = 0.0;
        if (spec.size() > 8 && spec[7] == ':') {
            try {
                alpha = std::stod(spec.substr(8));
            } catch (const std::exception&) {
                throw UsageError("malformed alpha in basis spec '" + spec + "'");
            }
        } else if (spec != "gour:u4") {
            throw UsageError("unknown basis spec '" + spec + "'");
        }
        return gour_basis(family_u4(alpha).matrix);
    }
    // Anything else is a basis file.
    MeasurementBasis basis = basis_from_json(load_json_file(spec));
    if (basis.dim() != dim) throw UsageError("basis file dimension does not match --dim");
    return basis;
}

Json config_json(const RunConfig& c, const char* command_name) {
    Json j{{"command", command_name},
           {"dim", c.dim},
           {"seed", c.seed},
           {"tolerance", comparison_tolerance()},
           {"threads", c.threads}};
    return j;
}

void emit(const RunConfig& c, Json report) {
    if (c.out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        write_json_file(c.out_path, report);
    }
}

int run_swap(const RunConfig& c) {
    const DiagonalSpectrum a = spectrum_from_values(c.a_values, c.raw_diag, c.dim);
    const DiagonalSpectrum b = spectrum_from_values(c.b_values, c.raw_diag, c.dim);
    const MeasurementBasis basis = resolve_basis(c.basis_spec, c.dim);

    const SwapReport analytic = swap(a, b, basis);
    Json report{{"artifact_version", kVersion},
                {"config", config_json(c, "swap")},
                {"result", to_json(analytic)}};

    int status = 0;
    if (c.with_oracle) {
        const SwapReport oracle = oracle_swap(a, b, basis);
        double max_prob = 0.0, max_schmidt = 0.0;
        for (std::size_t i = 0; i < analytic.outcomes.size(); ++i) {
            max_prob = std::max(max_prob, std::abs(analytic.outcomes[i].probability -
                                                   oracle.outcomes[i].probability));
            if (analytic.outcomes[i].schmidt && oracle.outcomes[i].schmidt)
                max_schmidt = std::max(max_schmidt,
                                       analytic.outcomes[i].schmidt->max_abs_diff(
                                           *oracle.outcomes[i].schmidt));
        }
        const bool agree = max_prob <= 1e-9 && max_schmidt <= 1e-8;
        report["oracle"] = to_json(oracle);
        report["oracle_agreement"] = Json{{"agree", agree},
                                          {"max_probability_deviation", max_prob},
                                          {"max_schmidt_deviation", max_schmidt}};
        if (!agree) status = 2;
    }
    emit(c, std::move(report));
    return status;
}

int run_census(const RunConfig& c) {
    const CensusReport r = census(c.dim, c.threads);
    Json report{{"artifact_version", kVersion},
                {"config", config_json(c, "census")},
                {"result", to_json(r, /*include_representatives=*/false)}};
    if (!c.emit_reps_path.empty()) {
        Json reps = Json::array();
        for (const auto& rep : r.representatives) reps.push_back(to_json(rep));
        write_json_file(c.emit_reps_path, reps);
        report["representatives_path"] = c.emit_reps_path;
    }
    emit(c, std::move(report));
    return 0;
}

int run_chain(const RunConfig& c) {
    std::vector<DiagonalSpectrum> links;
    for (const auto& values : c.link_values)
        links.push_back(spectrum_from_values(values, c.raw_diag, c.dim));
    if (links.size() < 2) throw UsageError("chain needs at least 2 links");

    const FusionTree tree = c.order.empty()
                                ? FusionTree::left_associated(static_cast<int>(links.size()))
                                : FusionTree::parse(c.order);
    const ChainResult r = evaluate_chain(links, tree);
    Json report{{"artifact_version", kVersion},
                {"config", config_json(c, "chain")},
                {"result", to_json(r)}};
    emit(c, std::move(report));
    return 0;
}

int run_chain_sweep(const RunConfig& c) {
    const OrderIndependenceReport r =
        order_independence_check(c.dim, c.num_links, c.trials, c.seed);
    Json cfg = config_json(c, "chain-sweep");
    cfg["num_links"] = c.num_links;
    cfg["trials"] = c.trials;
    Json report{{"artifact_version", kVersion},
                {"config", std::move(cfg)},
                {"result", to_json(r)}};
    emit(c, std::move(report));
    return 0;
}

int run_noise(const RunConfig& c) {
    const DiagonalSpectrum a = spectrum_from_values(c.a_values, c.raw_diag, c.dim);
    const DiagonalSpectrum b = spectrum_from_values(c.b_values, c.raw_diag, c.dim);
    const MeasurementBasis basis = resolve_basis(c.basis_spec, c.dim);

    const auto outcomes = noisy_swap(a, b, basis, NoiseModel{c.p, c.q});
    const MixedLuReport lu = mixed_lu_deterministic(outcomes, basis);

    Json cfg = config_json(c, "noise");
    cfg["p"] = c.p;
    cfg["q"] = c.q;
    Json outs = Json::array();
    for (const auto& o : outcomes) outs.push_back(to_json(o));
    Json report{{"artifact_version", kVersion},
                {"config", std::move(cfg)},
                {"result", Json{{"outcomes", std::move(outs)}, {"lu_report", to_json(lu)}}}};
    emit(c, std::move(report));
    return 0;
}

// Catalog names ("fourier:<d>", "u4:<alpha>", "v4k:<k>:<alpha>",
// "weyl-x:<d>", "weyl-z:<d>", "weyl-r:<d>") or a matrix JSON file.
ComplexMatrix resolve_matrix(const std::string& spec) {
    const auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        return parts;
    };
    const auto parts = split(spec);
    try {
        if (parts.size() == 2 && parts[0] == "fourier")
            return fourier(std::stoi(parts[1])).to_unitary();
        if (parts.size() == 2 && parts[0] == "u4")
            return family_u4(std::stod(parts[1])).matrix;
        if (parts.size() == 3 && parts[0] == "v4k")
            return family_4k(std::stoi(parts[1]), std::stod(parts[2])).matrix;
        if (parts.size() == 2 && parts[0] == "weyl-x") return weyl_ops(std::stoi(parts[1])).shift;
        if (parts.size() == 2 && parts[0] == "weyl-z") return weyl_ops(std::stoi(parts[1])).phase;
        if (parts.size() == 2 && parts[0] == "weyl-r")
            return weyl_ops(std::stoi(parts[1])).reversal;
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed catalog matrix spec '" + spec + "'");
    } catch (const std::out_of_range&) {
        throw UsageError("malformed catalog matrix spec '" + spec + "'");
    }
    return matrix_from_json(load_json_file(spec));
}

int run_classify(const RunConfig& c) {
    const ComplexMatrix a = resolve_matrix(c.matrix_a_path);
    const ComplexMatrix b = resolve_matrix(c.matrix_b_path);
    const PCVerdict v = pc_equivalent(a, b);
    Json report{{"artifact_version", kVersion},
                {"config", config_json(c, "classify")},
                {"result", to_json(v)}};
    emit(c, std::move(report));
    return 0;
}

int run_verify_all(const RunConfig& c) {
    verify::Options options;
    options.seed = c.seed;
    options.threads = c.threads;
    const auto results = verify::run_all_checks(options);

    Json checks = Json::array();
    for (const auto& r : results) {
        std::fprintf(stderr, "%s %-28s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                     r.detail.c_str());
        checks.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    const bool ok = verify::all_passed(results);
    Json report{{"artifact_version", kVersion},
                {"config", config_json(c, "verify-all")},
                {"result", Json{{"all_passed", ok}, {"checks", std::move(checks)}}}};
    emit(c, std::move(report));
    return ok ? 0 : 2;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig config;

    CLI::App app{"deterministic entanglement-swapping toolkit"};
    app.require_subcommand(1);

    std::string a_csv, b_csv, links_joined;

    auto add_common = [&](CLI::App* sub, bool needs_dim) {
        if (needs_dim)
            sub->add_option("--dim", config.dim, "local dimension d")
                ->required()
                ->check(CLI::Range(2, 64));
        sub->add_option("--seed", config.seed, "seed for randomized checks");
        sub->add_option("--tolerance", config.tolerance, "override the global tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", config.threads, "worker cap for parallel enumeration");
        sub->add_option("--out", config.out_path, "write the JSON report to this path");
    };

    CLI::App* swap_cmd = app.add_subcommand("swap", "single-node swap report");
    add_common(swap_cmd, true);
    swap_cmd->add_option("--a", a_csv, "squared spectrum CSV for the A-side link")->required();
    swap_cmd->add_option("--b", b_csv, "squared spectrum CSV for the B-side link")->required();
    swap_cmd->add_option("--basis", config.basis_spec,
                         "gour:fourier | gour:u4:<alpha> | basis file");
    swap_cmd->add_flag("--oracle", config.with_oracle, "cross-check against the dense oracle");
    swap_cmd->add_flag("--raw-diag", config.raw_diag,
                       "interpret --a/--b as unnormalized diagonal entries");

    CLI::App* census_cmd = app.add_subcommand("census", "PC-class census of the Fourier orbit");
    add_common(census_cmd, true);
    census_cmd->add_option("--emit-reps", config.emit_reps_path,
                           "write class representatives to this path");

    CLI::App* chain_cmd = app.add_subcommand("chain", "evaluate a repeater chain");
    add_common(chain_cmd, true);
    chain_cmd->add_option("--links", links_joined, "semicolon-separated spectrum CSVs")
        ->required();
    chain_cmd->add_option("--order", config.order, "parenthesization, e.g. ((0.1).2)");
    chain_cmd->add_flag("--raw-diag", config.raw_diag,
                        "interpret links as unnormalized diagonal entries");

    CLI::App* sweep_cmd =
        app.add_subcommand("chain-sweep", "randomized order-independence check");
    add_common(sweep_cmd, true);
    sweep_cmd->add_option("--links", config.num_links, "number of links")->required();
    sweep_cmd->add_option("--trials", config.trials, "number of random trials")->required();

    CLI::App* noise_cmd = app.add_subcommand("noise", "depolarizing-noise swap report");
    add_common(noise_cmd, true);
    noise_cmd->add_option("--a", a_csv, "squared spectrum CSV")->required();
    noise_cmd->add_option("--b", b_csv, "squared spectrum CSV")->required();
    noise_cmd->add_option("--p", config.p, "A-link depolarizing weight")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    noise_cmd->add_option("--q", config.q, "B-link depolarizing weight")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    noise_cmd->add_option("--basis", config.basis_spec,
                          "gour:fourier | gour:u4:<alpha> | basis file");
    noise_cmd->add_flag("--raw-diag", config.raw_diag,
                        "interpret --a/--b as unnormalized diagonal entries");

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "PC-equivalence verdict for two matrices");
    add_common(classify_cmd, false);
    classify_cmd
        ->add_option("--a", config.matrix_a_path,
                     "matrix JSON file, or fourier:<d> | u4:<alpha> | v4k:<k>:<alpha> | "
                     "weyl-x:<d> | weyl-z:<d> | weyl-r:<d>")
        ->required();
    classify_cmd->add_option("--b", config.matrix_b_path, "matrix JSON file or catalog name")
        ->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify-all", "run the full protocol-guarantee suite");
    add_common(verify_cmd, false);

    std::vector<std::string> argv_storage = args;
    std::vector<char*> argv;
    std::string program = "swapkit";
    argv.push_back(program.data());
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help() << std::flush;
        throw UsageError("help requested");
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (swap_cmd->parsed()) {
        config.command = Command::swap;
        config.a_values = parse_csv(a_csv);
        config.b_values = parse_csv(b_csv);
    } else if (census_cmd->parsed()) {
        config.command = Command::census;
        if (config.dim < 2 || config.dim > 6)
            throw UsageError("census supports 2 <= dim <= 6");
    } else if (chain_cmd->parsed()) {
        config.command = Command::chain;
        std::stringstream ss(links_joined);
        std::string link;
        while (std::getline(ss, link, ';')) config.link_values.push_back(parse_csv(link));
    } else if (sweep_cmd->parsed()) {
        config.command = Command::chain_sweep;
    } else if (noise_cmd->parsed()) {
        config.command = Command::noise;
        config.a_values = parse_csv(a_csv);
        config.b_values = parse_csv(b_csv);
    } else if (classify_cmd->parsed()) {
        config.command = Command::classify;
    } else if (verify_cmd->parsed()) {
        config.command = Command::verify_all;
    }
    return config;
}

int run(const RunConfig& config) {
    if (config.tolerance > 0.0) set_comparison_tolerance(config.tolerance);
    switch (config.command) {
        case Command::swap: return run_swap(config);
        case Command::census: return run_census(config);
        case Command::chain: return run_chain(config);
        case Command::chain_sweep: return run_chain_sweep(config);
        case Command::noise: return run_noise(config);
        case Command::classify: return run_classify(config);
        case Command::verify_all: return run_verify_all(config);
    }
    throw UsageError("unknown command");
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        return run(parse_args(args));
    } catch (const UsageError& e) {
        if (std::string(e.what()) == "help requested") return 0;
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace swapkit::cli
