#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "cli_app.hpp"
#include "swapkit/json_io.hpp"

using namespace swapkit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("swapkit_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const char* name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("argument parsing") {
    SUBCASE("census") {
        const cli::RunConfig c = cli::parse_args({"census", "--dim", "5"});
        CHECK(c.command == cli::Command::census);
        CHECK(c.dim == 5);
    }

    SUBCASE("swap with spectra") {
        const cli::RunConfig c = cli::parse_args({"swap", "--dim", "2", "--a", "0.5,0.5",
                                                  "--b", "0.5,0.5", "--basis", "gour:fourier"});
        CHECK(c.command == cli::Command::swap);
        CHECK(c.a_values == std::vector<double>{0.5, 0.5});
        CHECK(c.basis_spec == "gour:fourier");
    }

    SUBCASE("rejects dim 0") {
        CHECK_THROWS_AS(cli::parse_args({"swap", "--dim", "0", "--a", "1", "--b", "1"}),
                        UsageError);
    }

    SUBCASE("rejects unknown flags and malformed CSV") {
        CHECK_THROWS_AS(cli::parse_args({"census", "--dim", "3", "--bogus"}), UsageError);
        CHECK_THROWS_AS(cli::parse_args({"swap", "--dim", "2", "--a", "0.5,x", "--b", "1,1"}),
                        UsageError);
        CHECK_THROWS_AS(cli::parse_args({"census"}), UsageError);  // missing --dim
        CHECK_THROWS_AS(cli::parse_args({}), UsageError);          // missing subcommand
    }

    SUBCASE("chain links split on semicolons") {
        const cli::RunConfig c = cli::parse_args(
            {"chain", "--dim", "2", "--links", "0.5,0.5;0.7,0.3", "--order", "(0.1)"});
        REQUIRE(c.link_values.size() == 2);
        CHECK(c.link_values[1] == std::vector<double>{0.7, 0.3});
    }
}

TEST_CASE("negative spectrum entries are a usage error") {
    const cli::RunConfig c = cli::parse_args(
        {"swap", "--dim", "2", "--a", "-0.5,1.5", "--b", "0.5,0.5"});
    CHECK_THROWS_AS(cli::run(c), UsageError);
}

TEST_CASE("swap command end to end with oracle agreement") {
    TempDir tmp;
    cli::RunConfig c = cli::parse_args({"swap", "--dim", "3", "--a", "0.5,0.3,0.2", "--b",
                                        "0.6,0.3,0.1", "--basis", "gour:fourier", "--oracle",
                                        "--out", tmp.file("swap.json")});
    CHECK(cli::run(c) == 0);

    const Json report = load_json_file(tmp.file("swap.json"));
    CHECK(report.at("artifact_version").get<std::string>() == kVersion);
    CHECK(report.at("config").at("seed").get<std::uint64_t>() == 1);
    CHECK(report.at("result").at("uniform_probs").get<bool>());
    CHECK(report.at("result").at("lu_deterministic").get<bool>());
    CHECK(report.at("oracle_agreement").at("agree").get<bool>());
    CHECK(report.at("result").at("outcomes").size() == 9);
}

TEST_CASE("census command writes representatives") {
    TempDir tmp;
    cli::RunConfig c = cli::parse_args({"census", "--dim", "4", "--emit-reps",
                                        tmp.file("reps.json"), "--out", tmp.file("census.json")});
    CHECK(cli::run(c) == 0);
    CHECK(load_json_file(tmp.file("census.json")).at("result").at("class_count").get<int>() ==
          9);
    const Json reps = load_json_file(tmp.file("reps.json"));
    REQUIRE(reps.is_array());
    CHECK(reps.size() == 9);
    // representatives round-trip as exponent matrices
    const ExponentMatrix first = exponent_matrix_from_json(reps.at(0));
    CHECK(first.dim() == 4);
}

TEST_CASE("chain command reproduces the counterexample") {
    TempDir tmp;
    cli::RunConfig c = cli::parse_args({"chain", "--dim", "4", "--links",
                                        "9,9,1,1;9,9,9,3;8,5,5,1", "--raw-diag", "--order",
                                        "((0.1).2)", "--out", tmp.file("chain.json")});
    CHECK(cli::run(c) == 0);
    const Json report = load_json_file(tmp.file("chain.json"));
    const auto final = report.at("result").at("final").get<std::vector<double>>();
    REQUIRE(final.size() == 4);
    CHECK(final[0] == doctest::Approx(0.856147).epsilon(1e-5));
    CHECK(final[1] == doctest::Approx(0.511754).epsilon(1e-5));
}

TEST_CASE("reports are byte-identical across runs") {
    TempDir tmp;
    for (const char* name : {"a.json", "b.json"}) {
        cli::RunConfig c = cli::parse_args({"chain-sweep", "--dim", "3", "--links", "4",
                                            "--trials", "25", "--seed", "9", "--out",
                                            tmp.file(name)});
        CHECK(cli::run(c) == 0);
    }
    CHECK(slurp(tmp.file("a.json")) == slurp(tmp.file("b.json")));
}

TEST_CASE("classify command decides the conjugate branch") {
    TempDir tmp;
    write_json_file(tmp.file("a.json"), to_json(family_u4(0.3).matrix));
    write_json_file(tmp.file("b.json"), to_json(family_u4(M_PI - 0.3).matrix));
    cli::RunConfig c = cli::parse_args({"classify", "--a", tmp.file("a.json"), "--b",
                                        tmp.file("b.json"), "--out", tmp.file("verdict.json")});
    CHECK(cli::run(c) == 0);
    const Json verdict = load_json_file(tmp.file("verdict.json"));
    CHECK(verdict.at("result").at("equivalent").get<bool>());
    CHECK(verdict.at("result").at("branch").get<std::string>() == "conjugate");
}

TEST_CASE("noise command emits outcome spectra and the LU report") {
    TempDir tmp;
    cli::RunConfig c = cli::parse_args({"noise", "--dim", "2", "--a", "0.7,0.3", "--b",
                                        "0.6,0.4", "--p", "0.1", "--q", "0.2", "--basis",
                                        "gour:fourier", "--out", tmp.file("noise.json")});
    CHECK(cli::run(c) == 0);
    const Json report = load_json_file(tmp.file("noise.json"));
    CHECK(report.at("result").at("outcomes").size() == 4);
    CHECK(report.at("result").at("lu_report").at("spectra_equal").get<bool>());
    CHECK(report.at("result").at("lu_report").at("diagonal_witnesses_valid").get<bool>());
}

TEST_CASE("basis files round-trip through the CLI") {
    TempDir tmp;
    write_json_file(tmp.file("basis.json"), to_json(gour_basis(fourier(2).to_unitary())));
    cli::RunConfig c = cli::parse_args({"swap", "--dim", "2", "--a", "0.6,0.4", "--b",
                                        "0.5,0.5", "--basis", tmp.file("basis.json"),
                                        "--out", tmp.file("swap.json")});
    CHECK(cli::run(c) == 0);
    CHECK(load_json_file(tmp.file("swap.json"))
              .at("result")
              .at("uniform_probs")
              .get<bool>());
}

TEST_CASE("main entry exit codes") {
    SUBCASE("usage errors exit 1") {
        const char* argv[] = {"swapkit", "swap", "--dim", "0"};
        CHECK(cli::main_entry(4, const_cast<char**>(argv)) == 1);
    }
    SUBCASE("census dim bound is a usage error") {
        const char* argv[] = {"swapkit", "census", "--dim", "7"};
        CHECK(cli::main_entry(4, const_cast<char**>(argv)) == 1);
    }
    SUBCASE("gour:u4 demands dim 4") {
        const char* argv[] = {"swapkit", "swap", "--dim", "2", "--a", "1,1",
                              "--b",     "1,1",  "--basis", "gour:u4:0.3"};
        CHECK(cli::main_entry(10, const_cast<char**>(argv)) == 1);
    }
}

TEST_CASE("classify accepts catalog matrix names") {
    TempDir tmp;
    SUBCASE("fourier against its conjugate") {
        cli::RunConfig c = cli::parse_args({"classify", "--a", "fourier:3", "--b",
                                            "weyl-r:3", "--out", tmp.file("v.json")});
        // F3 vs R: R has zero entries, so the decider must reject it
        CHECK_THROWS_AS(cli::run(c), DegenerateEntryError);
    }
    SUBCASE("two family members") {
        cli::RunConfig c = cli::parse_args({"classify", "--a", "u4:0.3", "--b", "u4:0.7",
                                            "--out", tmp.file("v.json")});
        CHECK(cli::run(c) == 0);
        CHECK(!load_json_file(tmp.file("v.json")).at("result").at("equivalent").get<bool>());
    }
    SUBCASE("tensor family against the plain fourier matrix") {
        cli::RunConfig c = cli::parse_args({"classify", "--a", "v4k:1:0.4", "--b", "u4:0.4",
                                            "--out", tmp.file("v.json")});
        CHECK(cli::run(c) == 0);
        CHECK(load_json_file(tmp.file("v.json")).at("result").at("equivalent").get<bool>());
    }
    SUBCASE("malformed catalog specs") {
        cli::RunConfig c = cli::parse_args({"classify", "--a", "fourier:x", "--b", "u4:0.1"});
        CHECK_THROWS_AS(cli::run(c), UsageError);
    }
}

TEST_CASE("state and exponent JSON round-trips") {
    const BipartiteState s = random_state(3, 5, StateKind::haar_pure);
    const BipartiteState back = state_from_json(to_json(s));
    CHECK(back.coeff().max_abs_diff(s.coeff()) <= 1e-15);
    CHECK_THROWS_AS(state_from_json(to_json(s.coeff())), StructureError);

    const ExponentMatrix e = fourier(4);
    CHECK(exponent_matrix_from_json(to_json(e)) == e);

    const DiagonalSpectrum spec = DiagonalSpectrum::from_squared({0.5, 0.5});
    CHECK(spectrum_from_json(to_json(spec)).max_abs_diff(spec) == 0.0);
}

TEST_CASE("census results do not depend on the worker count") {
    TempDir tmp;
    for (int threads : {1, 3}) {
        cli::RunConfig c = cli::parse_args(
            {"census", "--dim", "5", "--threads", std::to_string(threads), "--emit-reps",
             tmp.file(threads == 1 ? "r1.json" : "r3.json"), "--out",
             tmp.file(threads == 1 ? "c1.json" : "c3.json")});
        CHECK(cli::run(c) == 0);
    }
    CHECK(slurp(tmp.file("r1.json")) == slurp(tmp.file("r3.json")));
    CHECK(load_json_file(tmp.file("c1.json")).at("result") ==
          load_json_file(tmp.file("c3.json")).at("result"));
}

TEST_CASE("tolerance override flows into the report") {
    TempDir tmp;
    cli::RunConfig c = cli::parse_args({"census", "--dim", "2", "--tolerance", "1e-7",
                                        "--out", tmp.file("c.json")});
    CHECK(cli::run(c) == 0);
    CHECK(load_json_file(tmp.file("c.json")).at("config").at("tolerance").get<double>() ==
          doctest::Approx(1e-7));
    set_comparison_tolerance(1e-9);  // restore the ambient default for other tests
}

TEST_CASE("chain defaults to left association when no order is given") {
    TempDir tmp;
    cli::RunConfig c = cli::parse_args({"chain", "--dim", "2", "--links",
                                        "0.7,0.3;0.6,0.4;0.5,0.5", "--out",
                                        tmp.file("chain.json")});
    CHECK(cli::run(c) == 0);
    CHECK(load_json_file(tmp.file("chain.json")).at("result").at("order").get<std::string>() ==
          "((0.1).2)");
}

TEST_CASE("noise with a branch-mixing basis file records the witness failure") {
    TempDir tmp;
    write_json_file(tmp.file("mixed.json"), to_json(conjugate_mixed_basis(4)));
    cli::RunConfig c = cli::parse_args({"noise", "--dim", "4", "--a", "0.45,0.3,0.15,0.1",
                                        "--b", "0.4,0.3,0.2,0.1", "--p", "0.15", "--q", "0.1",
                                        "--basis", tmp.file("mixed.json"), "--out",
                                        tmp.file("noise.json")});
    CHECK(cli::run(c) == 0);
    const Json lu = load_json_file(tmp.file("noise.json")).at("result").at("lu_report");
    CHECK(lu.at("spectra_equal").get<bool>());
    CHECK(!lu.at("diagonal_witnesses_valid").get<bool>());
    CHECK(lu.contains("witness_failure"));
    CHECK(lu.at("witness_failure").at("branch").get<std::string>() == "conjugate");
}

TEST_CASE("garbage input files exit with a usage error") {
    TempDir tmp;
    {
        std::ofstream out(tmp.file("junk.json"));
        out << "not json at all {";
    }
    const std::string junk = tmp.file("junk.json");
    const char* argv[] = {"swapkit", "classify", "--a", junk.c_str(), "--b", "u4:0.1"};
    CHECK(cli::main_entry(6, const_cast<char**>(argv)) == 1);
}

TEST_CASE("u4 basis spec parses its angle") {
    TempDir tmp;
    cli::RunConfig c = cli::parse_args({"swap", "--dim", "4", "--a", "0.4,0.3,0.2,0.1", "--b",
                                        "0.4,0.3,0.2,0.1", "--basis", "gour:u4:0.3", "--out",
                                        tmp.file("u4.json")});
    CHECK(cli::run(c) == 0);
    const Json report = load_json_file(tmp.file("u4.json"));
    CHECK(report.at("result").at("uniform_probs").get<bool>());
    CHECK(report.at("result").at("lu_deterministic").get<bool>());
}
