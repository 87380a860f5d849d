#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "homrep/bigint.hpp"
#include "homrep/cover.hpp"
#include "homrep/freegroup.hpp"
#include "homrep/intlattice.hpp"
#include "homrep/nilpotent.hpp"
#include "homrep/surface.hpp"

namespace homrep::cli {

using nlohmann::json;

// ---- JSON codecs ----------------------------------------------------------
// Integers that fit comfortably in a double-safe range are emitted as JSON
// numbers; anything larger becomes a decimal string. Decoding accepts both.

json int_to_json(const Int& x);
Int json_to_int(const json& j);

json vector_to_json(const std::vector<Int>& v);
std::vector<Int> vector_from_json(const json& j);

json matrix_to_json(const intlattice::IntMatrix& m);
intlattice::IntMatrix matrix_from_json(const json& j);

// { "rank": n, "degree": m, "perms": [[...], ...] } with 0-based images, or
// the shortcut { "rank": n, "mod": q }.
cover::QuotientSpec quotient_from_json(const json& j);

// { "genus": g, "punctures": k } (punctures optional) or { "pairing": [[..]] }.
surface::HomologyModel homology_model_from_json(const json& j);

// List of { "kind": "point"|"curve", "c": [...], "d": [...], "i_gamma": k };
// i_gamma is optional and defaults to 0.
std::vector<surface::PushDatum> push_data_from_json(const json& j);

json load_json_file(const std::string& path);

// ---- reports ---------------------------------------------------------------

struct ExperimentReport {
    std::string experiment;
    json inputs = json::object();
    json outputs = json::object();

    struct Verdict {
        std::string check;
        bool pass;
    };
    std::vector<Verdict> verdicts;

    bool inconclusive = false;
    std::string inconclusive_reason;
    double duration_seconds = 0.0;  // human summary only, never canonical

    void check(const std::string& name, bool pass) { verdicts.push_back({name, pass}); }
    bool all_pass() const;
    std::string status() const;  // "pass", "fail" or "inconclusive"

    // Deterministic sorted-key JSON; identical inputs give identical bytes.
    json canonical() const;
    std::string human_summary() const;

    void write_json(const std::string& path) const;
};

// Saturation pass limit, honoring the JS_PASS_LIMIT environment variable.
int pass_limit_from_env();

// ---- experiment drivers -----------------------------------------------------

// Builds the cover, checks that a_2^e and a_3^e lie in its subgroup, and
// tests whether the commutator transvection acts as the identity on H1.
ExperimentReport run_verify_claim1(const json& spec_json, int e);

ExperimentReport run_johnson_depth_word(const std::string& word_text, int rank, int cap);
ExperimentReport run_johnson_depth_element(const std::string& recipe, int rank, int cap);

ExperimentReport run_rho(const json& spec_json, const std::string& recipe);

// Deck-translation matrices plus consistency checks; when a recipe is given,
// also verifies that its rho image normalizes the deck group.
ExperimentReport run_deck(const json& spec_json, const std::optional<std::string>& recipe);

enum class OrbitGroup { Sl, Sp };
enum class OrbitModule { Wedge3, Hom };

// Saturates the orbit lattice of seed under the induced action of the
// chosen generator family. size = rank for sl, genus for sp.
ExperimentReport run_orbit_index(OrbitGroup group, OrbitModule module, int size,
                                 const std::vector<Int>& seed, int pass_limit);

// Convenience seeds for run_orbit_index.
std::vector<Int> johnson_seed(int genus, int subsurface, const std::string& class_token);
std::vector<Int> tau_seed(const std::string& recipe, int rank);

ExperimentReport run_congruence_scan(const json& spec_json, const Int& prime, int cap,
                                     const std::string& recipe, int expect_min_depth = -1);

ExperimentReport run_push_act(const json& model_json, const json& data_json,
                              bool expect_identity = false);

ExperimentReport run_snf(const json& matrix_json, bool verbose);

}  // namespace homrep::cli
