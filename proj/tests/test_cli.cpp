#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "gl2fp/io.hpp"

namespace {

std::string cli_path() {
    const char* path = std::getenv("GL2FP_CLI");
    REQUIRE(path != nullptr);
    return path;
}

struct CliResult {
    int status;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("cli: bound emits the formula values") {
    CliResult r = run_cli("bound --d 1 --h 1 --format json");
    REQUIRE(r.status == 0);
    auto j = gl2fp::json::parse(r.out);
    REQUIRE(j["exceptional_threshold_degree"] == 21);
    REQUIRE(j["unramified_exceptional_min_p"] == 17);
    REQUIRE(j["torsion_bound"] == "532900");
    REQUIRE(j["frobenius_bound"] == "6400");
    REQUIRE(j["reducible_bound"] == "532900");
}

TEST_CASE("cli: ap-table text matches the library renderer") {
    CliResult r = run_cli("ap-table");
    REQUIRE(r.status == 0);
    REQUIRE(r.out == gl2fp::ap_table_text());

    CliResult rj = run_cli("ap-table --format json");
    auto j = gl2fp::json::parse(rj.out);
    REQUIRE(j["cells"].size() == 21);
}

TEST_CASE("cli: build output feeds classify") {
    CliResult built = run_cli("build --kind split-cartan --p 7");
    REQUIRE(built.status == 0);
    auto path = write_temp("gl2fp_split7.txt", built.out);
    CliResult classified = run_cli("classify --input " + path.string() + " --format json");
    REQUIRE(classified.status == 0);
    auto j = gl2fp::json::parse(classified.out);
    REQUIRE(j["order"] == 36);
    REQUIRE(j["in_split_cartan"] == true);
    REQUIRE(j["irreducible"] == false);
}

TEST_CASE("cli: built normalizers close to the advertised orders") {
    for (std::string kind : {"split-normalizer", "nonsplit-cartan", "nonsplit-normalizer", "borel"}) {
        CliResult built = run_cli("build --kind " + kind + " --p 5 --format json");
        REQUIRE(built.status == 0);
        auto bj = gl2fp::json::parse(built.out);
        CliResult text = run_cli("build --kind " + kind + " --p 5");
        auto path = write_temp("gl2fp_build5.txt", text.out);
        CliResult classified = run_cli("classify --input " + path.string() + " --format json");
        REQUIRE(classified.status == 0);
        auto cj = gl2fp::json::parse(classified.out);
        REQUIRE(cj["order"] == bj["order"]);
    }
}

TEST_CASE("cli: combine and family casework") {
    CliResult ok = run_cli("combine --a1 0 --a2 4 --p 5 --format json");
    REQUIRE(ok.status == 0);
    auto j = gl2fp::json::parse(ok.out);
    REQUIRE(j["kind"] == "homothety_exponent");
    REQUIRE(j["exponent"] == 4);

    CliResult bad = run_cli("combine --a1 0 --a2 4 --p 7 --format json");
    REQUIRE(bad.status == 1);
    auto ej = gl2fp::json::parse(bad.out);
    REQUIRE(ej.contains("error"));

    CliResult fam = run_cli("family --values 6,0 --p 7 --d 2 --h 1 --format json");
    REQUIRE(fam.status == 0);
    auto fj = gl2fp::json::parse(fam.out);
    REQUIRE(fj["outcome"]["kind"] == "squares");
    REQUIRE(fj["local_data"]["good_reduction_inertia_divisors"] ==
            gl2fp::json::array({1, 2, 3, 4, 6}));
}

TEST_CASE("cli: orbit bound") {
    CliResult r = run_cli("orbit --p 97 --format json");
    REQUIRE(r.status == 0);
    auto j = gl2fp::json::parse(r.out);
    REQUIRE(j["orbit_lower_bound"] == 8);
}

TEST_CASE("cli: verify runs the oracle and reports success via exit status") {
    CliResult r = run_cli("verify --p 5 --mode full --format json");
    REQUIRE(r.status == 0);
    auto j = gl2fp::json::parse(r.out);
    REQUIRE(j["subgroup_count"] == 466);
    REQUIRE(j["conjugacy_class_count"] == 48);
    REQUIRE(j["failures"].empty());
}

TEST_CASE("cli: json output re-serializes byte-identically") {
    for (std::string args : {"bound --d 2 --h 3 --format json", "ap-table --format json",
                             "combine --a1 0 --a2 12 --p 11 --format json"}) {
        CliResult r = run_cli(args);
        REQUIRE(r.status == 0);
        std::string reserialized = gl2fp::json::parse(r.out).dump(2) + "\n";
        REQUIRE(r.out == reserialized);
    }
}

TEST_CASE("cli: explicit alpha for the non-split kinds") {
    CliResult ok = run_cli("build --kind nonsplit-cartan --p 7 --alpha 3 --format json");
    REQUIRE(ok.status == 0);
    auto j = gl2fp::json::parse(ok.out);
    REQUIRE(j["order"] == 48);

    CliResult residue = run_cli("build --kind nonsplit-cartan --p 7 --alpha 4 --format json");
    REQUIRE(residue.status == 1);
    REQUIRE(gl2fp::json::parse(residue.out).contains("error"));
}

TEST_CASE("cli: exit codes distinguish usage and domain errors") {
    REQUIRE(run_cli("bound --d 1").status == 2);          // missing required --h
    REQUIRE(run_cli("nonsense").status == 2);             // unknown subcommand
    REQUIRE(run_cli("orbit --p 12").status == 1);         // not a prime
    REQUIRE(run_cli("classify --input /nonexistent-file.txt").status == 1);
    REQUIRE(run_cli("verify --p 17").status == 1);        // outside supported range
}
