#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vknot/biquandle.hpp"
#include "vknot/fixtures.hpp"
#include "vknot/index.hpp"
#include "vknot/invariants.hpp"
#include "vknot/khovanov.hpp"
#include "vknot/moves.hpp"

using json = nlohmann::ordered_json;
using namespace vknot;

namespace {

constexpr const char* kSchemaVersion = "vknot-1";

// Inputs may be a literal code, a path to a file holding one, '-' for stdin,
// or a fixture name.
std::string load_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    for (size_t i = 0; i < std::size(fixtures::ALL); ++i)
        if (arg == fixtures::NAMES[i]) return fixtures::ALL[i];
    std::ifstream f(arg);
    if (f.good()) {
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    return arg;
}

json laurent_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({e.first, e.second, c});
    return out;
}

json cochain_json(const Diagram& d, const Cochain& c) {
    json values = json::object();
    for (const LongArc& a : d.arcs) values[std::to_string(a.id)] = c.values[a.id];
    json out;
    out["ring"] = c.ring == Ring::Z ? "Z" : "Z2";
    out["values"] = values;
    if (!c.chord_values.empty()) {
        json chords = json::object();
        for (const auto& [label, v] : c.chord_values) chords[std::to_string(label)] = v;
        out["chords"] = chords;
    }
    return out;
}

json homology_json(const HomologyGroups& h) {
    json out = json::object();
    for (size_t i = 0; i < h.groups.size(); ++i) {
        json g;
        g["rank"] = h.groups[i].rank;
        if (!h.groups[i].torsion.empty()) g["torsion"] = h.groups[i].torsion;
        out[std::to_string(i)] = g;
    }
    return out;
}

json move_json(const Move& m) {
    json out;
    out["kind"] = move_name(m);
    if (const auto* r = std::get_if<R1Add>(&m))
        out["args"] = {{"comp", r->comp}, {"gap", r->gap}, {"over_first", r->over_first}, {"sign", r->sign}};
    else if (const auto* r = std::get_if<R1Remove>(&m))
        out["args"] = {{"comp", r->comp}, {"pos", r->pos}};
    else if (const auto* r = std::get_if<R2Add>(&m))
        out["args"] = {{"comp_a", r->comp_a}, {"gap_a", r->gap_a}, {"comp_b", r->comp_b},
                       {"gap_b", r->gap_b}, {"parallel", r->parallel}, {"sign", r->sign}};
    else if (const auto* r = std::get_if<R2Remove>(&m))
        out["args"] = {{"comp_a", r->comp_a}, {"pos_a", r->pos_a}, {"comp_b", r->comp_b}, {"pos_b", r->pos_b}};
    else if (const auto* r = std::get_if<R3Move>(&m))
        out["args"] = {{"sites", {{r->comp[0], r->pos[0]}, {r->comp[1], r->pos[1]}, {r->comp[2], r->pos[2]}}}};
    else if (const auto* r = std::get_if<VPairAdd>(&m))
        out["args"] = {{"comp", r->comp}, {"gap", r->gap}, {"plus_first", r->plus_first}};
    else if (const auto* r = std::get_if<VPairRemove>(&m))
        out["args"] = {{"comp", r->comp}, {"pos", r->pos}};
    else if (const auto* r = std::get_if<CoboundaryMove>(&m))
        out["args"] = {{"crossing", r->crossing}, {"eps", r->eps}};
    return out;
}

int fail_input(const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
}

FiniteBiquandle biquandle_from_json(const json& j, std::vector<int>* f_out) {
    int n = j.at("n").get<int>();
    auto circ = j.at("circ").get<std::vector<std::vector<int>>>();
    auto star = j.at("star").get<std::vector<std::vector<int>>>();
    if (f_out && j.contains("f")) *f_out = j.at("f").get<std::vector<int>>();
    return make_biquandle(n, std::move(circ), std::move(star));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual link invariants from extended Gauss codes"};
    app.set_version_flag("--version", std::string("vknot (schema ") + kSchemaVersion + ")");
    app.require_subcommand(1);

    std::string input;
    std::vector<std::string> validate_inputs;
    std::string level = "basic";
    auto* validate_cmd = app.add_subcommand("validate", "check structural and cohomological consistency");
    validate_cmd->add_option("code", validate_inputs, "EGC strings, files, fixture names, or '-' (batch)")
        ->required();
    validate_cmd->add_option("--level", level, "basic|cohomological")->check(CLI::IsMember({"basic", "cohomological"}));

    bool emit_cochains = false;
    auto* invariants_cmd = app.add_subcommand("invariants", "writhe, wriggle numbers, indices, index polynomial");
    invariants_cmd->add_option("code", input, "EGC input")->required();
    invariants_cmd->add_flag("--emit-cochains", emit_cochains, "include vi/ci/parity cochains");

    std::string flavor = "both";
    auto* alexander_cmd = app.add_subcommand("alexander", "generalized Alexander polynomials");
    alexander_cmd->add_option("code", input, "EGC input")->required();
    alexander_cmd->add_option("--flavor", flavor, "abq|vaq|both")->check(CLI::IsMember({"abq", "vaq", "both"}));

    std::string aux_spec = "canonical";
    bool emit_complex = false;
    int khovanov_cap = 16;
    auto* khovanov_cmd = app.add_subcommand("khovanov", "integral Khovanov homology");
    khovanov_cmd->add_option("code", input, "EGC input")->required();
    khovanov_cmd->add_option("--aux", aux_spec, "canonical|random:SEED");
    khovanov_cmd->add_flag("--emit-complex", emit_complex, "dump chain ranks and differentials");
    khovanov_cmd->add_option("--max-crossings", khovanov_cap,
                             "state cube cap (2^n states; raise explicitly for large inputs)");

    std::string biquandle_file;
    bool virtual_colorings = false;
    auto* color_cmd = app.add_subcommand("color", "biquandle coloring count");
    color_cmd->add_option("code", input, "EGC input")->required();
    color_cmd->add_option("--biquandle", biquandle_file, "JSON file {n, circ, star, f?}")->required();
    color_cmd->add_flag("--virtual", virtual_colorings, "color short arcs with the virtual biquandle (B, f)");

    int steps = 100;
    uint64_t seed = 0;
    std::string checks_arg = "q,wriggle,colorings,alexander";
    int max_crossings = 9;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "random-move invariance testing");
    fuzz_cmd->add_option("code", input, "EGC input")->required();
    fuzz_cmd->add_option("--steps", steps, "number of moves");
    fuzz_cmd->add_option("--seed", seed, "PRNG seed");
    fuzz_cmd->add_option("--checks", checks_arg, "comma list: q,wriggle,colorings,alexander,khovanov,parity-class");
    fuzz_cmd->add_option("--max-crossings", max_crossings, "crossing cap for insertions");

    CLI11_PARSE(app, argc, argv);

    if (validate_cmd->parsed()) {
        int exit_code = 0;
        for (const std::string& arg : validate_inputs) {
            ExtendedGaussCode code;
            try {
                code = parse_egc(load_input(arg));
            } catch (const std::exception& e) {
                json err;
                err["error"] = e.what();
                std::cerr << err.dump() << "\n";
                exit_code = 2;
                continue;
            }
            ValidationReport report =
                validate(code, level == "basic" ? ValidationLevel::Basic : ValidationLevel::Cohomological);
            json out;
            out["schema"] = kSchemaVersion;
            out["code"] = serialize_egc(code);
            out["level"] = level;
            out["ok"] = report.ok();
            out["errors"] = json::array();
            for (const auto& e : report.errors) out["errors"].push_back({{"check", e.check}, {"detail", e.detail}});
            std::cout << out.dump() << "\n";
            if (!report.ok() && exit_code == 0) exit_code = 1;
        }
        return exit_code;
    }

    ExtendedGaussCode code;
    try {
        code = parse_egc(load_input(input));
    } catch (const std::exception& e) {
        return fail_input(e);
    }

    try {
        Diagram d = long_arcs(code);

        if (invariants_cmd->parsed()) {
            WriggleReport w = wriggle_report(d);
            json out;
            out["schema"] = kSchemaVersion;
            out["code"] = serialize_egc(code);
            out["writhe"] = writhe(d);
            out["wriggle"] = json::array();
            for (const auto& c : w.components)
                out["wriggle"].push_back({{"lk_over", c.lk_over}, {"lk_under", c.lk_under}, {"w", c.wriggle}});
            out["pairwise"] = w.pairwise;
            json indices = json::object();
            for (const CrossingInfo& x : d.crossings)
                if (x.self_crossing()) indices[std::to_string(x.label)] = component_index(d, x.label);
            out["indices"] = indices;
            out["Q"] = laurent_json(index_polynomial(d));
            out["parity_class_trivial"] = parity_class_trivial(d);
            out["checkerboard_colourable"] = checkerboard_colourable(d);
            if (emit_cochains) {
                out["vi"] = cochain_json(d, virtual_index_cocycle(d));
                out["ci"] = cochain_json(d, canonical_index_cocycle(d));
                out["parity"] = cochain_json(d, parity_cocycle(d));
                if (code.components.size() == 1) {
                    ChordIndexCocycle ch = chord_index_cocycle(d);
                    json chords = json::object();
                    for (const auto& [label, v] : ch.chord) chords[std::to_string(label)] = v;
                    out["chord_index"] = chords;
                }
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (alexander_cmd->parsed()) {
            json out;
            out["schema"] = kSchemaVersion;
            out["code"] = serialize_egc(code);
            if (flavor != "vaq") out["G"] = laurent_json(generalized_alexander(d));
            if (flavor != "abq") out["xi"] = laurent_json(xi_polynomial(d));
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (khovanov_cmd->parsed()) {
            AuxData aux;
            if (aux_spec == "canonical")
                aux = default_aux(d);
            else if (aux_spec.rfind("random:", 0) == 0)
                aux = random_aux(d, std::stoull(aux_spec.substr(7)));
            else
                throw std::invalid_argument("bad --aux, expected canonical or random:SEED");
            KhovanovBuild build = build_khovanov(d, aux, khovanov_cap);
            json out;
            out["schema"] = kSchemaVersion;
            out["code"] = serialize_egc(code);
            out["homology"] = homology_json(homology(build.complex));
            if (emit_complex) {
                json cx;
                cx["dims"] = build.complex.dims;
                cx["basis"] = build.complex.basis_labels;
                json diffs = json::array();
                for (const IntMatrix& m : build.complex.d) {
                    json triples = json::array();
                    for (int r = 0; r < m.rows(); ++r)
                        for (int c = 0; c < m.cols(); ++c)
                            if (m.at(r, c) != 0) triples.push_back({r, c, m.at(r, c)});
                    diffs.push_back(triples);
                }
                cx["differentials"] = diffs;
                out["complex"] = cx;
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (color_cmd->parsed()) {
            std::ifstream f(biquandle_file);
            if (!f.good()) throw std::invalid_argument("cannot read biquandle file " + biquandle_file);
            json bj = json::parse(f);
            std::vector<int> fmap;
            FiniteBiquandle b = biquandle_from_json(bj, &fmap);
            json out;
            out["schema"] = kSchemaVersion;
            out["code"] = serialize_egc(code);
            if (virtual_colorings) {
                if (fmap.empty()) throw std::invalid_argument("--virtual requires an 'f' table in the biquandle file");
                out["colorings"] = count_virtual_colorings(d, make_virtual_biquandle(b, fmap));
                out["kind"] = "virtual";
            } else {
                out["colorings"] = count_colorings(d, b);
                out["kind"] = "classical";
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (fuzz_cmd->parsed()) {
            FuzzOptions opt;
            opt.steps = steps;
            opt.seed = seed;
            opt.max_crossings = max_crossings;
            std::stringstream ss(checks_arg);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) opt.checks.insert(item);
            FuzzReport rep = fuzz(code, opt);
            json out;
            out["schema"] = kSchemaVersion;
            out["code"] = serialize_egc(code);
            out["steps"] = rep.steps_applied;
            out["seed"] = seed;
            out["ok"] = rep.ok;
            out["failures"] = json::array();
            for (const auto& f : rep.failures) {
                json script = json::array();
                for (const Move& m : f.shrunk) script.push_back(move_json(m));
                out["failures"].push_back({{"check", f.check},
                                           {"step", f.step},
                                           {"before", f.before_code},
                                           {"after", f.after_code},
                                           {"expected", f.expected},
                                           {"actual", f.actual},
                                           {"shrunk_moves", f.shrunk_moves},
                                           {"replay", script}});
            }
            std::cout << out.dump() << "\n";
            return rep.ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        return fail_input(e);
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
