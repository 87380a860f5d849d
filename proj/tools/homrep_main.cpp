#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "homrep/experiments.hpp"
#include "homrep/nilpotent.hpp"

namespace hc = homrep::cli;

namespace {

// Human summary on stdout, canonical JSON to --json PATH when given.
// 0 = all checks passed, 1 = failed or inconclusive, 2 = bad invocation.
int finish(const hc::ExperimentReport& rep, const std::string& json_path) {
    if (!json_path.empty()) rep.write_json(json_path);
    std::cout << rep.human_summary();
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact experiments with homological representations of free-group automorphisms"};
    app.require_subcommand(1);

    std::string spec_path, json_path, word, element, model_path, data_path, matrix_path;
    std::string group = "sp", module = "wedge3", class_token, seed_path, prime = "2";
    int rank = 3, exp = 2, subsurface = 1;
    int depth_cap = homrep::nilpotent::kDefaultDegreeCap;
    int cong_cap = 6, genus = 3, expect_min_depth = -1;
    bool verbose = false, expect_identity = false;

    auto* sc_verify = app.add_subcommand("verify-claim1",
                                         "check that the commutator transvection acts trivially on cover homology");
    sc_verify->add_option("--spec", spec_path, "quotient spec JSON file")->required();
    sc_verify->add_option("--exp", exp, "exponent e (both a2^e and a3^e must lie in the cover subgroup)");
    sc_verify->add_option("--json", json_path, "write canonical JSON report here");

    auto* sc_depth = app.add_subcommand("johnson-depth",
                                        "lower-central depth of a word, or Johnson depth of an automorphism");
    sc_depth->add_option("--word", word, "word such as a1A2a2");
    sc_depth->add_option("--element", element, "automorphism recipe such as comm(1,2,3)");
    sc_depth->add_option("--rank", rank, "free group rank");
    sc_depth->add_option("--cap", depth_cap, "truncation degree cap");
    sc_depth->add_option("--json", json_path, "write canonical JSON report here");

    auto* sc_rho = app.add_subcommand("rho", "matrix of an automorphism on cover homology");
    sc_rho->add_option("--spec", spec_path, "quotient spec JSON file")->required();
    sc_rho->add_option("--element", element, "automorphism recipe")->required();
    sc_rho->add_option("--json", json_path, "write canonical JSON report here");

    auto* sc_deck = app.add_subcommand("deck", "deck-translation matrices and consistency checks");
    sc_deck->add_option("--spec", spec_path, "quotient spec JSON file")->required();
    sc_deck->add_option("--element", element, "also check that this element's matrix normalizes the deck image");
    sc_deck->add_option("--json", json_path, "write canonical JSON report here");

    auto* sc_orbit = app.add_subcommand("orbit-index",
                                        "saturate the lattice orbit of a seed vector under an induced action");
    sc_orbit->add_option("--group", group, "sl or sp")->check(CLI::IsMember({"sl", "sp"}));
    sc_orbit->add_option("--module", module, "wedge3 or hom")->check(CLI::IsMember({"wedge3", "hom"}));
    sc_orbit->add_option("--rank", rank, "rank n for group sl");
    sc_orbit->add_option("--genus", genus, "genus g for group sp");
    sc_orbit->add_option("--seed-json", seed_path, "JSON file holding the seed vector");
    sc_orbit->add_option("--element", element, "seed from the degree-2 Johnson image of this recipe");
    sc_orbit->add_option("--subsurface", subsurface, "curve-push seed: subsurface genus j");
    sc_orbit->add_option("--class", class_token, "curve-push seed: homology class token such as e2");
    sc_orbit->add_option("--json", json_path, "write canonical JSON report here");

    auto* sc_cong = app.add_subcommand("congruence-scan",
                                       "p-adic congruence depth of an automorphism's cover-homology matrix");
    sc_cong->add_option("--spec", spec_path, "quotient spec JSON file")->required();
    sc_cong->add_option("--element", element, "automorphism recipe")->required();
    sc_cong->add_option("--prime", prime, "modulus p");
    sc_cong->add_option("--cap", cong_cap, "largest exponent probed");
    sc_cong->add_option("--expect-min-depth", expect_min_depth, "add a verdict: depth must reach this value");
    sc_cong->add_option("--json", json_path, "write canonical JSON report here");

    auto* sc_push = app.add_subcommand("push-act", "homology matrix of a point- or curve-pushing map");
    sc_push->add_option("--model", model_path, "homology model JSON file")->required();
    sc_push->add_option("--data", data_path, "push data JSON file")->required();
    sc_push->add_flag("--expect-identity", expect_identity, "add a verdict: matrix must be the identity");
    sc_push->add_option("--json", json_path, "write canonical JSON report here");

    auto* sc_snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    sc_snf->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    sc_snf->add_flag("--verbose", verbose, "include D, U, V in the report");
    sc_snf->add_option("--json", json_path, "write canonical JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(sc_verify))
            return finish(hc::run_verify_claim1(hc::load_json_file(spec_path), exp), json_path);

        if (app.got_subcommand(sc_depth)) {
            if (word.empty() == element.empty())
                throw std::invalid_argument("give exactly one of --word or --element");
            auto rep = word.empty() ? hc::run_johnson_depth_element(element, rank, depth_cap)
                                    : hc::run_johnson_depth_word(word, rank, depth_cap);
            return finish(rep, json_path);
        }

        if (app.got_subcommand(sc_rho))
            return finish(hc::run_rho(hc::load_json_file(spec_path), element), json_path);

        if (app.got_subcommand(sc_deck)) {
            std::optional<std::string> recipe;
            if (!element.empty()) recipe = element;
            return finish(hc::run_deck(hc::load_json_file(spec_path), recipe), json_path);
        }

        if (app.got_subcommand(sc_orbit)) {
            auto g = group == "sl" ? hc::OrbitGroup::Sl : hc::OrbitGroup::Sp;
            auto m = module == "wedge3" ? hc::OrbitModule::Wedge3 : hc::OrbitModule::Hom;
            int size = g == hc::OrbitGroup::Sl ? rank : genus;
            std::vector<homrep::Int> seed;
            int sources = (!seed_path.empty()) + (!element.empty()) + (!class_token.empty());
            if (sources != 1)
                throw std::invalid_argument(
                    "give exactly one seed source: --seed-json, --element, or --class");
            if (!seed_path.empty())
                seed = hc::vector_from_json(hc::load_json_file(seed_path));
            else if (!element.empty())
                seed = hc::tau_seed(element, g == hc::OrbitGroup::Sl ? rank : 2 * genus);
            else
                seed = hc::johnson_seed(genus, subsurface, class_token);
            return finish(hc::run_orbit_index(g, m, size, seed, hc::pass_limit_from_env()),
                          json_path);
        }

        if (app.got_subcommand(sc_cong))
            return finish(hc::run_congruence_scan(hc::load_json_file(spec_path),
                                                  homrep::Int(prime), cong_cap, element,
                                                  expect_min_depth),
                          json_path);

        if (app.got_subcommand(sc_push))
            return finish(hc::run_push_act(hc::load_json_file(model_path),
                                           hc::load_json_file(data_path), expect_identity),
                          json_path);

        if (app.got_subcommand(sc_snf))
            return finish(hc::run_snf(hc::load_json_file(matrix_path), verbose), json_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
