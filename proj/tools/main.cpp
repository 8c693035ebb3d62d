// Command-line front end: classification, named-subgroup construction, bound
// evaluation, the inertia-exponent table, coefficient-family casework, the
// brute-force verifier, and the orbit bound.
//
// Exit status: 0 on success, 1 for domain/input errors (with a structured
// error object on stdout) and for verifier failures, 2 for usage errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gl2fp/io.hpp"

namespace {

using gl2fp::json;

struct Options {
    std::string format = "text";
    std::string input;
    std::string kind;
    std::string mode = "auto";
    std::string values;
    std::uint64_t p = 0;
    std::uint32_t d = 1;
    std::uint32_t h = 1;
    std::uint32_t e = 0;  // defaults to d
    std::uint64_t alpha = 0;
    std::uint32_t a1 = 0;
    std::uint32_t a2 = 0;
};

// text mode: one "key: value" line per field; json mode: canonical dump
void emit(const json& j, const Options& opt) {
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : j.items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
}

int run_classify(const Options& opt) {
    std::ifstream in(opt.input);
    if (!in) throw std::invalid_argument("cannot open input file: " + opt.input);
    gl2fp::GeneratorFile gf = gl2fp::parse_generator_file(in);
    gl2fp::Subgroup G = gl2fp::generate(gf.mod, gf.generators);
    emit(gl2fp::to_json(gl2fp::classify(G)), opt);
    return 0;
}

int run_build(const Options& opt) {
    gl2fp::PrimeModulus mod(opt.p);
    std::uint64_t p = mod.value();
    std::uint32_t g = gl2fp::primitive_root(mod).value();
    std::vector<gl2fp::Mat2> gens;
    std::uint64_t order = 0;
    if (opt.kind == "split-cartan") {
        gens = {gl2fp::Mat2::diagonal(mod, g, 1), gl2fp::Mat2::diagonal(mod, 1, g)};
        order = (p - 1) * (p - 1);
    } else if (opt.kind == "borel") {
        gens = {gl2fp::Mat2::diagonal(mod, g, 1), gl2fp::Mat2::diagonal(mod, 1, g),
                gl2fp::Mat2(mod, 1, 1, 0, 1)};
        order = p * (p - 1) * (p - 1);
    } else if (opt.kind == "split-normalizer") {
        gens = {gl2fp::Mat2::diagonal(mod, g, 1), gl2fp::Mat2::diagonal(mod, 1, g),
                gl2fp::Mat2(mod, 0, 1, 1, 0)};
        order = 2 * (p - 1) * (p - 1);
    } else if (opt.kind == "nonsplit-cartan" || opt.kind == "nonsplit-normalizer") {
        gl2fp::Scalar alpha = opt.alpha != 0 ? gl2fp::Scalar(opt.alpha, mod)
                                             : gl2fp::smallest_nonresidue(mod);
        gens = {gl2fp::nonsplit_cartan_generator(mod, alpha)};
        order = p * p - 1;
        if (opt.kind == "nonsplit-normalizer") {
            // (1 0; 0 -1) conjugates (x y*alpha; y x) to (x -y*alpha; -y x).
            gens.push_back(gl2fp::Mat2::from_ints(mod, 1, 0, 0, -1));
            order = 2 * (p * p - 1);
        }
    } else {
        throw std::invalid_argument(
            "unknown kind (expected split-cartan, split-normalizer, nonsplit-cartan, "
            "nonsplit-normalizer or borel)");
    }
    if (opt.format == "json") {
        json j;
        j["p"] = p;
        j["kind"] = opt.kind;
        j["order"] = order;
        json gj = json::array();
        for (const auto& m : gens) gj.push_back(gl2fp::matrix_to_json(m));
        j["generators"] = gj;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << gl2fp::format_generator_file(mod, gens);
    }
    return 0;
}

int run_bound(const Options& opt) {
    std::uint32_t e = opt.e == 0 ? opt.d : opt.e;
    gl2fp::FieldProfile field(opt.d, opt.h, e, e == 1);
    json j;
    j["d"] = opt.d;
    j["h"] = opt.h;
    j["e"] = e;
    j["exceptional_threshold_degree"] = gl2fp::exceptional_exclusion_threshold(opt.d);
    j["exceptional_threshold_ramification"] = gl2fp::exceptional_exclusion_threshold(e);
    j["unramified_exceptional_min_p"] = gl2fp::kUnramifiedExceptionalMinP;
    j["torsion_bound"] = gl2fp::oesterle_torsion_bound(12 * opt.d * opt.h).str();
    j["frobenius_bound"] = gl2fp::frobenius_norm_bound(opt.d, opt.h).str();
    j["reducible_bound"] = gl2fp::uniform_bound_reducible(opt.d, opt.h).str();
    if (opt.d < 2)
        std::cerr << "note: the reducible-case theorem assumes a base field other than Q (d >= 2)\n";
    emit(j, opt);
    return 0;
}

int run_ap_table(const Options& opt) {
    if (opt.format == "json")
        std::cout << gl2fp::ap_table_json().dump(2) << "\n";
    else
        std::cout << gl2fp::ap_table_text();
    return 0;
}

int run_combine(const Options& opt) {
    gl2fp::PrimeModulus mod(opt.p);
    emit(gl2fp::to_json(gl2fp::combine_ap_pair(opt.a1, opt.a2, mod)), opt);
    return 0;
}

int run_family(const Options& opt) {
    gl2fp::PrimeModulus mod(opt.p);
    std::vector<std::uint32_t> values;
    std::stringstream ss(opt.values);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) values.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    gl2fp::ApFamily family(values);
    std::uint32_t e = opt.e == 0 ? 1 : opt.e;
    gl2fp::FieldProfile field(opt.d, opt.h, e, e == 1);
    gl2fp::ReducibleOutcome outcome = gl2fp::classify_ap_family(family, mod, field);
    gl2fp::CharacterLocalData local = gl2fp::nonramified_character_orders();
    json j;
    j["p"] = mod.value();
    j["family"] = family.values();
    j["outcome"] = gl2fp::to_json(outcome);
    json localj;
    localj["good_reduction_inertia_divisors"] = local.good_reduction_inertia_divisors;
    localj["lambda2_unramified_multiplicative"] = local.lambda2_unramified_multiplicative;
    localj["lambda12_unramified_outside_p"] = local.lambda12_unramified_outside_p;
    j["local_data"] = localj;
    emit(j, opt);
    return 0;
}

int run_verify(const Options& opt) {
    gl2fp::PrimeModulus mod(opt.p);
    gl2fp::EnumerationMode mode;
    if (opt.mode == "auto")
        mode = gl2fp::default_enumeration_mode(mod);
    else if (opt.mode == "full")
        mode = gl2fp::EnumerationMode::full_lattice;
    else if (opt.mode == "pairs")
        mode = gl2fp::EnumerationMode::gen_pairs;
    else
        throw std::invalid_argument("mode must be auto, full or pairs");
    gl2fp::EnumerationResult result = gl2fp::verify_all(mod, mode);
    emit(gl2fp::to_json(result), opt);
    return result.failures.empty() ? 0 : 1;
}

int run_orbit(const Options& opt) {
    gl2fp::PrimeModulus mod(opt.p);
    json j;
    j["p"] = mod.value();
    j["orbit_lower_bound"] = gl2fp::orbit_lower_bound(mod);
    emit(j, opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subgroups of GL2(F_p), their taxonomy, and homothety bounds"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees -h / --h for the class number
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* classify = app.add_subcommand("classify", "classify the subgroup from a generator file");
    classify->add_option("--input", opt.input, "generator file (line 1: p, then \"a b c d\")")
        ->required();
    add_format(classify);

    CLI::App* build = app.add_subcommand("build", "emit generators of a named subgroup");
    build->add_option("--kind", opt.kind, "split-cartan, split-normalizer, nonsplit-cartan, nonsplit-normalizer or borel")
        ->required();
    build->add_option("--p", opt.p, "prime modulus")->required();
    build->add_option("--alpha", opt.alpha, "quadratic non-residue for the non-split kinds");
    add_format(build);

    CLI::App* bound = app.add_subcommand("bound", "evaluate the uniform bound formulas");
    bound->add_option("--d", opt.d, "field degree")->required();
    bound->add_option("--h", opt.h, "class number")->required();
    bound->add_option("--e", opt.e, "least ramification index above p (defaults to d)");
    add_format(bound);

    CLI::App* ap = app.add_subcommand("ap-table", "emit the inertia-exponent table");
    add_format(ap);

    CLI::App* combine = app.add_subcommand("combine", "casework for a pair of distinct coefficients");
    combine->add_option("--a1", opt.a1, "first coefficient")->required();
    combine->add_option("--a2", opt.a2, "second coefficient")->required();
    combine->add_option("--p", opt.p, "prime modulus")->required();
    add_format(combine);

    CLI::App* family = app.add_subcommand("family", "casework for a full coefficient family");
    family->add_option("--values", opt.values, "comma-separated coefficients, one per place")
        ->required();
    family->add_option("--p", opt.p, "prime modulus")->required();
    family->add_option("--d", opt.d, "field degree")->required();
    family->add_option("--h", opt.h, "class number")->required();
    family->add_option("--e", opt.e, "least ramification index above p");
    add_format(family);

    CLI::App* verify = app.add_subcommand("verify", "run the brute-force verifier");
    verify->add_option("--p", opt.p, "prime modulus (5, 7, 11 or 13)")->required();
    verify->add_option("--mode", opt.mode, "auto, full or pairs")
        ->check(CLI::IsMember({"auto", "full", "pairs"}));
    add_format(verify);

    CLI::App* orbit = app.add_subcommand("orbit", "orbit-intersection lower bound");
    orbit->add_option("--p", opt.p, "prime modulus")->required();
    add_format(orbit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return run_classify(opt);
        if (build->parsed()) return run_build(opt);
        if (bound->parsed()) return run_bound(opt);
        if (ap->parsed()) return run_ap_table(opt);
        if (combine->parsed()) return run_combine(opt);
        if (family->parsed()) return run_family(opt);
        if (verify->parsed()) return run_verify(opt);
        if (orbit->parsed()) return run_orbit(opt);
    } catch (const std::exception& err) {
        json j;
        json inner;
        inner["type"] = "error";
        inner["message"] = err.what();
        j["error"] = inner;
        std::cout << j.dump(2) << "\n";
        return 1;
    }
    return 2;
}
