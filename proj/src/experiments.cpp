#include "homrep/experiments.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "homrep/extrep.hpp"
#include "homrep/recipe.hpp"

namespace homrep::cli {

namespace {

const Int kJsonNumberLimit = Int(1) << 53;

class Timer {
public:
    double seconds() const {
        auto dt = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::string truncate_line(std::string s) {
    constexpr std::size_t kMax = 160;
    if (s.size() > kMax) {
        s.resize(kMax - 3);
        s += "...";
    }
    return s;
}

}  // namespace

json int_to_json(const Int& x) {
    if (abs_int(x) < kJsonNumberLimit) return json(static_cast<std::int64_t>(x));
    return json(x.str());
}

Int json_to_int(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s.empty()) throw std::invalid_argument("empty string is not an integer");
        std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (k == s.size()) throw std::invalid_argument("bad integer literal: " + s);
        for (; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw std::invalid_argument("bad integer literal: " + s);
        return Int(s);
    }
    throw std::invalid_argument("expected an integer or decimal string, got " + j.dump());
}

json vector_to_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(int_to_json(x));
    return out;
}

std::vector<Int> vector_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of integers");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(json_to_int(e));
    return out;
}

json matrix_to_json(const intlattice::IntMatrix& m) {
    json out = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m.at(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

intlattice::IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a nonempty JSON array of rows");
    std::vector<std::vector<Int>> rows;
    rows.reserve(j.size());
    for (const auto& row : j) rows.push_back(vector_from_json(row));
    return intlattice::IntMatrix::from_rows(std::move(rows));
}

cover::QuotientSpec quotient_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("quotient spec must be a JSON object");
    int rank = require_int(j.at("rank"), "rank");
    if (j.contains("mod")) return cover::QuotientSpec::abelian_mod(rank, require_int(j.at("mod"), "mod"));
    int degree = require_int(j.at("degree"), "degree");
    const json& perms = j.at("perms");
    if (!perms.is_array() || static_cast<int>(perms.size()) != rank)
        throw std::invalid_argument("perms must list one permutation per generator");
    std::vector<std::vector<int>> table;
    for (const auto& p : perms) {
        if (!p.is_array() || static_cast<int>(p.size()) != degree)
            throw std::invalid_argument("each permutation must have length degree");
        std::vector<int> images;
        for (const auto& e : p) images.push_back(require_int(e, "permutation image"));
        table.push_back(std::move(images));
    }
    return cover::QuotientSpec(rank, degree, std::move(table));
}

surface::HomologyModel homology_model_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("homology model must be a JSON object");
    if (j.contains("pairing")) return surface::HomologyModel(matrix_from_json(j.at("pairing")));
    int genus = require_int(j.at("genus"), "genus");
    int punctures = j.contains("punctures") ? require_int(j.at("punctures"), "punctures") : 0;
    return surface::HomologyModel::symplectic_with_punctures(genus, punctures);
}

std::vector<surface::PushDatum> push_data_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("push data must be a nonempty JSON array");
    std::vector<surface::PushDatum> data;
    for (const auto& item : j) {
        surface::PushDatum d;
        const std::string kind = item.at("kind").get<std::string>();
        if (kind == "point")
            d.kind = surface::PushKind::Point;
        else if (kind == "curve")
            d.kind = surface::PushKind::Curve;
        else
            throw std::invalid_argument("push datum kind must be \"point\" or \"curve\"");
        d.c = vector_from_json(item.at("c"));
        d.d = vector_from_json(item.at("d"));
        d.i_gamma = item.contains("i_gamma") ? json_to_int(item.at("i_gamma")) : Int(0);
        data.push_back(std::move(d));
    }
    return data;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& ex) {
        throw std::runtime_error(path + ": " + ex.what());
    }
    return j;
}

bool ExperimentReport::all_pass() const {
    if (inconclusive) return false;
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

std::string ExperimentReport::status() const {
    if (inconclusive) return "inconclusive";
    for (const auto& v : verdicts)
        if (!v.pass) return "fail";
    return "pass";
}

json ExperimentReport::canonical() const {
    json doc;
    doc["experiment"] = experiment;
    doc["inputs"] = inputs;
    doc["outputs"] = outputs;
    doc["status"] = status();
    if (inconclusive) doc["reason"] = inconclusive_reason;
    json vs = json::array();
    for (const auto& v : verdicts) vs.push_back(json{{"check", v.check}, {"pass", v.pass}});
    doc["verdicts"] = vs;
    return doc;
}

std::string ExperimentReport::human_summary() const {
    std::ostringstream out;
    out << "experiment: " << experiment << "\n";
    for (const auto& [key, value] : inputs.items())
        out << "  input  " << key << " = " << truncate_line(value.dump()) << "\n";
    for (const auto& [key, value] : outputs.items())
        out << "  output " << key << " = " << truncate_line(value.dump()) << "\n";
    for (const auto& v : verdicts)
        out << "  check  " << v.check << ": " << (v.pass ? "PASS" : "FAIL") << "\n";
    if (inconclusive) out << "  reason: " << inconclusive_reason << "\n";
    out << "  duration: " << duration_seconds << " s\n";
    out << "status: " << status() << "\n";
    return out.str();
}

void ExperimentReport::write_json(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << canonical().dump(2) << "\n";
}

int pass_limit_from_env() {
    const char* raw = std::getenv("JS_PASS_LIMIT");
    if (raw == nullptr || *raw == '\0') return intlattice::kDefaultPassLimit;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1 || v > 1'000'000)
        throw std::runtime_error("JS_PASS_LIMIT must be a positive integer");
    return static_cast<int>(v);
}

ExperimentReport run_verify_claim1(const json& spec_json, int e) {
    Timer timer;
    ExperimentReport rep;
    rep.experiment = "verify-claim1";
    rep.inputs["quotient"] = spec_json;
    rep.inputs["exp"] = e;

    auto spec = quotient_from_json(spec_json);
    if (spec.rank() < 3)
        throw std::invalid_argument("verify-claim1 needs a free group of rank >= 3");
    if (e < 1) throw std::invalid_argument("exp must be >= 1");
    cover::CoverGraph cover(spec);

    for (int i : {2, 3}) {
        auto gen = freegroup::Word::parse("a" + std::to_string(i), spec.rank());
        if (!cover.member(freegroup::power(gen, e)))
            throw std::invalid_argument("precondition failed: a" + std::to_string(i) + "^" +
                                        std::to_string(e) + " does not lie in the cover subgroup");
    }

    auto f = freegroup::commutator_transvection(spec.rank(), e);
    auto m = cover.rho(f);
    bool identity = m.is_identity();

    rep.outputs["degree"] = spec.degree();
    rep.outputs["h1_rank"] = m.rows();
    rep.outputs["identity"] = identity;
    if (m.rows() <= 24) rep.outputs["matrix"] = matrix_to_json(m);
    rep.check("rho_is_identity", identity);
    rep.duration_seconds = timer.seconds();
    return rep;
}

namespace {

void fill_depth(ExperimentReport& rep, const nilpotent::Depth& d) {
    rep.outputs["depth"] = d.value;
    rep.outputs["depth_exact"] = !d.at_least_cap;
    rep.outputs["depth_str"] = d.str();
}

}  // namespace

ExperimentReport run_johnson_depth_word(const std::string& word_text, int rank, int cap) {
    Timer timer;
    ExperimentReport rep;
    rep.experiment = "johnson-depth";
    rep.inputs["word"] = word_text;
    rep.inputs["rank"] = rank;
    rep.inputs["cap"] = cap;

    auto w = freegroup::Word::parse(word_text, rank);
    fill_depth(rep, nilpotent::lcs_depth(w, cap));
    rep.outputs["mode"] = "word";
    rep.duration_seconds = timer.seconds();
    return rep;
}

ExperimentReport run_johnson_depth_element(const std::string& recipe, int rank, int cap) {
    Timer timer;
    ExperimentReport rep;
    rep.experiment = "johnson-depth";
    rep.inputs["element"] = recipe;
    rep.inputs["rank"] = rank;
    rep.inputs["cap"] = cap;

    auto f = parse_element(recipe, rank);
    auto d = nilpotent::johnson_depth(f, cap);
    fill_depth(rep, d);
    rep.outputs["mode"] = "element";
    if (d.value >= 1 && rank >= 2) {
        auto t = nilpotent::tau(f);
        rep.outputs["tau"] = vector_to_json(t.coords());
        rep.outputs["tau_str"] = t.str();
        rep.outputs["tau_zero"] = t.is_zero();
    }
    rep.duration_seconds = timer.seconds();
    return rep;
}

ExperimentReport run_rho(const json& spec_json, const std::string& recipe) {
    Timer timer;
    ExperimentReport rep;
    rep.experiment = "rho";
    rep.inputs["quotient"] = spec_json;
    rep.inputs["element"] = recipe;

    auto spec = quotient_from_json(spec_json);
    cover::CoverGraph cover(spec);
    auto f = parse_element(recipe, spec.rank());
    auto m = cover.rho(f);
    Int det = intlattice::determinant(m);

    rep.outputs["degree"] = spec.degree();
    rep.outputs["h1_rank"] = m.rows();
    rep.outputs["matrix"] = matrix_to_json(m);
    rep.outputs["determinant"] = int_to_json(det);
    rep.check("determinant_is_unit", det == 1 || det == -1);
    rep.duration_seconds = timer.seconds();
    return rep;
}

ExperimentReport run_deck(const json& spec_json, const std::optional<std::string>& recipe) {
    Timer timer;
    ExperimentReport rep;
    rep.experiment = "deck";
    rep.inputs["quotient"] = spec_json;
    if (recipe) rep.inputs["element"] = *recipe;

    auto spec = quotient_from_json(spec_json);
    cover::CoverGraph cover(spec);
    auto decks = cover.deck_matrices();
    int m = spec.degree();

    rep.outputs["degree"] = m;
    rep.outputs["h1_rank"] = cover.h1_rank();
    if (m <= 12 && cover.h1_rank() <= 24) {
        json list = json::array();
        for (const auto& d : decks) list.push_back(matrix_to_json(d));
        rep.outputs["matrices"] = list;
    }
    json orders = json::array();
    for (int g = 0; g < m; ++g) orders.push_back(cover.vertex_order(g));
    rep.outputs["element_orders"] = orders;

    rep.check("identity_at_basepoint", decks[0].is_identity());
    bool table_ok = true;
    int limit = m <= 32 ? m : 8;  // spot-check large groups instead of all m^2 pairs
    for (int g = 0; g < limit && table_ok; ++g)
        for (int h = 0; h < limit && table_ok; ++h)
            table_ok = decks[g].multiply(decks[h]) == decks[cover.mult(g, h)];
    rep.check("product_table_consistent", table_ok);

    if (recipe) {
        auto f = parse_element(*recipe, spec.rank());
        auto mat = cover.rho(f);
        if (cover.h1_rank() <= 24) rep.outputs["element_matrix"] = matrix_to_json(mat);
        rep.check("rho_normalizes_deck", cover.normalizes_deck(mat));
    }
    rep.duration_seconds = timer.seconds();
    return rep;
}

std::vector<Int> johnson_seed(int genus, int subsurface, const std::string& class_token) {
    extrep::SymplecticForm form(genus);
    if (class_token.size() < 2 || (class_token[0] != 'e' && class_token[0] != 'f'))
        throw std::invalid_argument("class token must look like e2 or f1");
    int idx = 0;
    for (std::size_t k = 1; k < class_token.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(class_token[k])))
            throw std::invalid_argument("class token must look like e2 or f1");
        idx = idx * 10 + (class_token[k] - '0');
    }
    if (idx < 1 || idx > genus) throw std::invalid_argument("class index out of range");
    std::vector<Int> c = class_token[0] == 'e' ? form.e(idx) : form.f(idx);
    return surface::johnson_class_curve_push(genus, subsurface, c).coords();
}

std::vector<Int> tau_seed(const std::string& recipe, int rank) {
    auto f = parse_element(recipe, rank);
    return nilpotent::tau(f).coords();
}

ExperimentReport run_orbit_index(OrbitGroup group, OrbitModule module, int size,
                                 const std::vector<Int>& seed, int pass_limit) {
    Timer timer;
    ExperimentReport rep;
    rep.experiment = "orbit-index";
    rep.inputs["group"] = group == OrbitGroup::Sl ? "sl" : "sp";
    rep.inputs["module"] = module == OrbitModule::Wedge3 ? "wedge3" : "hom";
    rep.inputs[group == OrbitGroup::Sl ? "rank" : "genus"] = size;
    rep.inputs["seed"] = vector_to_json(seed);
    rep.inputs["pass_limit"] = pass_limit;

    std::vector<intlattice::IntMatrix> base;
    int h_dim;
    if (group == OrbitGroup::Sl) {
        base = extrep::sl_generators(size);
        h_dim = size;
    } else {
        base = extrep::sp_generators(size);
        h_dim = 2 * size;
    }

    std::vector<intlattice::IntMatrix> actions;
    actions.reserve(base.size());
    for (const auto& g : base)
        actions.push_back(module == OrbitModule::Wedge3 ? extrep::wedge_action(g, 3)
                                                        : extrep::hom_action(g));
    int ambient = actions.front().rows();
    if (static_cast<int>(seed.size()) != ambient)
        throw std::invalid_argument("seed has length " + std::to_string(seed.size()) +
                                    ", module dimension is " + std::to_string(ambient));
    rep.outputs["ambient_dim"] = ambient;

    try {
        auto lat = intlattice::orbit_span(seed, actions, pass_limit);
        rep.outputs["orbit_rank"] = lat.rank();
        auto idx = intlattice::lattice_index(lat);
        rep.outputs["index"] = idx ? int_to_json(*idx) : json("infinite");
        auto d = intlattice::snf(intlattice::IntMatrix::from_rows(lat.basis())).diagonal();
        json divisors = json::array();
        for (const auto& x : d)
            if (x != 0) divisors.push_back(int_to_json(x));
        rep.outputs["elementary_divisors"] = divisors;

        if (module == OrbitModule::Hom) {
            auto delta = extrep::hom_contraction_matrix(h_dim);
            auto in_kernel = [&](const std::vector<Int>& v) {
                for (const auto& x : delta.apply(v))
                    if (x != 0) return false;
                return true;
            };
            if (in_kernel(seed)) {
                bool all = true;
                for (const auto& row : lat.basis()) all = all && in_kernel(row);
                rep.check("orbit_inside_contraction_kernel", all);
                intlattice::Sublattice kernel(ambient);
                for (auto& col : intlattice::kernel_basis(delta)) kernel.insert(std::move(col));
                rep.outputs["contraction_kernel_rank"] = kernel.rank();
                if (all) {
                    auto rel = intlattice::relative_index(lat, kernel);
                    rep.outputs["index_in_contraction_kernel"] =
                        rel ? int_to_json(*rel) : json("infinite");
                }
            }
        }
        if (group == OrbitGroup::Sp && module == OrbitModule::Wedge3)
            rep.check("finite_index", idx.has_value());
    } catch (const intlattice::SaturationLimitError& ex) {
        rep.inconclusive = true;
        rep.inconclusive_reason = ex.what();
    }
    rep.duration_seconds = timer.seconds();
    return rep;
}

ExperimentReport run_congruence_scan(const json& spec_json, const Int& prime, int cap,
                                     const std::string& recipe, int expect_min_depth) {
    Timer timer;
    ExperimentReport rep;
    rep.experiment = "congruence-scan";
    rep.inputs["quotient"] = spec_json;
    rep.inputs["prime"] = int_to_json(prime);
    rep.inputs["cap"] = cap;
    rep.inputs["element"] = recipe;

    auto spec = quotient_from_json(spec_json);
    cover::CoverGraph cover(spec);
    auto f = parse_element(recipe, spec.rank());
    auto m = cover.rho(f);
    int depth = intlattice::congruence_depth(m, prime, cap);

    rep.outputs["h1_rank"] = cover.h1_rank();
    rep.outputs["congruence_depth"] = depth;
    rep.outputs["depth_capped"] = depth == cap;
    auto jd = nilpotent::johnson_depth(f, nilpotent::kDefaultDegreeCap);
    rep.outputs["johnson_depth"] = jd.str();
    if (expect_min_depth >= 0) {
        rep.inputs["expect_min_depth"] = expect_min_depth;
        rep.check("depth_at_least_expected", depth >= expect_min_depth);
    }
    rep.duration_seconds = timer.seconds();
    return rep;
}

ExperimentReport run_push_act(const json& model_json, const json& data_json,
                              bool expect_identity) {
    Timer timer;
    ExperimentReport rep;
    rep.experiment = "push-act";
    rep.inputs["model"] = model_json;
    rep.inputs["data"] = data_json;

    auto model = homology_model_from_json(model_json);
    auto data = push_data_from_json(data_json);
    bool all_point = true, all_curve = true;
    for (const auto& d : data) {
        all_point = all_point && d.kind == surface::PushKind::Point;
        all_curve = all_curve && d.kind == surface::PushKind::Curve;
    }
    if (!all_point && !all_curve)
        throw std::invalid_argument("push data must be all-point or all-curve");
    auto m = all_point ? surface::point_push_matrix(model, data)
                       : surface::curve_push_matrix(model, data);

    rep.outputs["kind"] = all_point ? "point" : "curve";
    rep.outputs["rank"] = m.rows();
    rep.outputs["matrix"] = matrix_to_json(m);
    rep.outputs["identity"] = m.is_identity();
    auto shifted = m.subtract(intlattice::IntMatrix::identity(m.rows()));
    rep.outputs["square_zero_nilpotent"] = shifted.multiply(shifted).is_zero();
    // Reported, not a verdict: arbitrary (c, d, i_gamma) inputs need not come
    // from genuine curves, and only genuine ones are guaranteed to preserve P.
    rep.outputs["preserves_pairing"] = surface::preserves_pairing(model, m);
    if (expect_identity) {
        rep.inputs["expect_identity"] = true;
        rep.check("matrix_is_identity", m.is_identity());
    }
    rep.duration_seconds = timer.seconds();
    return rep;
}

ExperimentReport run_snf(const json& matrix_json, bool verbose) {
    Timer timer;
    ExperimentReport rep;
    rep.experiment = "snf";
    rep.inputs["matrix"] = matrix_json;

    auto a = matrix_from_json(matrix_json);
    auto res = intlattice::snf(a);
    auto diag = res.diagonal();

    rep.outputs["diagonal"] = vector_to_json(diag);
    if (verbose) {
        rep.outputs["d"] = matrix_to_json(res.d);
        rep.outputs["u"] = matrix_to_json(res.u);
        rep.outputs["v"] = matrix_to_json(res.v);
    }
    rep.check("reconstruction_exact", res.u.multiply(a).multiply(res.v) == res.d);
    bool chain = true;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        if (diag[i] == 0)
            chain = chain && diag[i + 1] == 0;
        else
            chain = chain && diag[i + 1] % diag[i] == 0;
    }
    rep.check("divisibility_chain", chain);
    rep.duration_seconds = timer.seconds();
    return rep;
}

}  // namespace homrep::cli
