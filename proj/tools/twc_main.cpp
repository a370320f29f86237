// twc: exact-arithmetic calculator and verifier for strictly unital
// A-infinity section algebras, their shift extensions, twisted modules,
// conflations, and the induced triangulated structure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twc/suites.hpp"

using namespace twc;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string field_override_from_env() {
    const char* v = std::getenv("TWC_FIELD");
    return v ? std::string(v) : std::string();
}

Workspace load(const std::string& path) {
    return parse_workspace(read_file(path), field_override_from_env());
}

int emit(const Report& rep, bool json) {
    std::cout << (json ? rep.json() : rep.text());
    return rep.all_pass() ? kExitPass : kExitCheckFailed;
}

SuiteParams params_from(const Config& cfg, int cases, int window, long long seed, int dims) {
    SuiteParams p;
    p.window = window > 0 ? window : cfg.window;
    p.fuzz_cases = cases > 0 ? cases : cfg.cases;
    p.seed = seed >= 0 ? static_cast<std::uint64_t>(seed) : cfg.seed;
    p.axiom_instances = std::max(1, p.fuzz_cases / 4);
    p.bounds.max_dim = dims > 0 ? dims : std::min(cfg.dims, 3);
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for twisted-module categories over strictly unital section algebras"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit the report as JSON");

    std::string file;
    int cases = 0, window = 0, dims = 0;
    long long seed = -1;

    auto add_common = [&](CLI::App* c, bool needs_file) {
        if (needs_file) c->add_option("file", file, "input .twc file")->required();
        c->add_option("--cases", cases, "fuzz cases per identity");
        c->add_option("--window", window, "window bound for exhaustive sweeps");
        c->add_option("--dims", dims, "fiber dimension bound for generated objects");
        c->add_option("--seed", seed, "generator seed");
    };

    auto* c_alg = app.add_subcommand("check-algebra", "unit axioms and Stasheff relations");
    add_common(c_alg, true);
    auto* c_hat = app.add_subcommand("hat-check", "shift-extension identities and hat-Stasheff");
    add_common(c_hat, true);
    auto* c_twv = app.add_subcommand("tw-validate", "validate the tw objects declared in a file");
    add_common(c_twv, true);

    auto* c_confl = app.add_subcommand("confl", "conflation calculus on named entities");
    std::string op, xi_name, h_name, u_name, x_name, y_name, g_name;
    c_confl->add_option("op", op, "make|check|push|pull|psi|cone|rotate")->required();
    add_common(c_confl, true);
    c_confl->add_option("--xi", xi_name, "named conflation");
    c_confl->add_option("--mor", h_name, "named tw-morphism");
    c_confl->add_option("--X", x_name, "named tw object");
    c_confl->add_option("--Y", y_name, "named tw object");
    c_confl->add_option("--gamma", g_name, "named morphism (corner)");

    auto* c_tri = app.add_subcommand("tri", "triangulated-structure operations");
    std::string tri_op;
    c_tri->add_option("op", tri_op, "cone|rotate|tr3|octa|axioms")->required();
    add_common(c_tri, true);
    c_tri->add_option("--mor", u_name, "named tw-morphism for cone");
    c_tri->add_option("--xi", xi_name, "named conflation for rotate");

    auto* c_self = app.add_subcommand("selftest", "full invariant suite on the shipped examples");
    add_common(c_self, false);
    c_self->add_option("file", file, "optional input file replacing the shipped examples");

    auto* c_fuzz = app.add_subcommand("fuzz", "deterministic generated-object suite");
    add_common(c_fuzz, false);
    c_fuzz->add_option("file", file, "optional input file replacing the shipped examples");

    auto* c_print = app.add_subcommand("print", "parse and reprint a file in canonical form");
    c_print->add_option("file", file, "input .twc file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (c_print->parsed()) {
            std::cout << print_workspace(load(file));
            return kExitPass;
        }
        if (c_alg->parsed()) {
            Workspace ws = load(file);
            Report rep;
            suite_stasheff(rep, "algebra", ws.alg);
            return emit(rep, json);
        }
        if (c_hat->parsed()) {
            Workspace ws = load(file);
            Report rep;
            suite_hat(rep, "algebra", ws.alg, params_from(ws.config, cases, window, seed, dims));
            return emit(rep, json);
        }
        if (c_twv->parsed()) {
            Workspace ws = load(file);
            Report rep;
            for (const auto& [name, obj] : ws.objects) {
                try {
                    TwObject v = validate_tw(ws.alg, obj.module, obj.delta);
                    rep.add("tw." + name, true, "nil_index " + std::to_string(v.nil_index));
                } catch (const Error& e) {
                    rep.add("tw." + name, false, e.what());
                }
            }
            if (ws.objects.empty()) rep.add("tw.none_declared", true, "no tw objects in file");
            return emit(rep, json);
        }
        if (c_confl->parsed()) {
            Workspace ws = load(file);
            Report rep;
            const SectionAlgebra& alg = ws.alg;
            auto named_confl = [&](const std::string& n) -> const Conflation& {
                auto it = ws.conflations.find(n);
                if (it == ws.conflations.end()) throw Error("unknown conflation '" + n + "'");
                return it->second;
            };
            if (op == "make") {
                const TwObject& X = ws.objects.at(x_name);
                const TwObject& Y = ws.objects.at(y_name);
                Conflation xi = make_canonical(alg, X, Y, ws.morphisms.at(g_name));
                rep.add("confl.make", true, "middle delta " + morphism_str(alg, xi.E.delta));
            } else if (op == "check") {
                const Conflation& xi = named_confl(xi_name);
                Conflation v = validate_special(alg, xi.f, xi.g);
                rep.add("confl.check", true, v.canonical ? "canonical" : "special");
            } else if (op == "push") {
                auto [t, out] = pushout(alg, named_confl(xi_name), ws.named_twmor(h_name));
                rep.add("confl.push", true, "gamma1 " + morphism_str(alg, out.gamma));
            } else if (op == "pull") {
                auto [t, out] = pullback(alg, named_confl(xi_name), ws.named_twmor(h_name));
                rep.add("confl.pull", true, "gamma1 " + morphism_str(alg, out.gamma));
            } else if (op == "psi") {
                TwMorphism back = psi_inv(alg, named_confl(xi_name));
                rep.add("confl.psi", true, "class " + morphism_str(alg, back.under));
            } else if (op == "cone") {
                GeneralConflation gc = cone_conflation(alg, ws.named_twmor(h_name));
                rep.add("confl.cone", true, "W delta " + morphism_str(alg, gc.g.dst.delta));
            } else if (op == "rotate") {
                GeneralConflation r = rotate_conflation_right(alg, named_confl(xi_name));
                GeneralConflation l = rotate_conflation_left(alg, named_confl(xi_name));
                rep.add("confl.rotate.right", true, "anchor corner " + morphism_str(alg, r.anchor.gamma));
                rep.add("confl.rotate.left", true, "anchor corner " + morphism_str(alg, l.anchor.gamma));
            } else {
                throw Error("unknown confl op '" + op + "'");
            }
            return emit(rep, json);
        }
        if (c_tri->parsed()) {
            Workspace ws = load(file);
            Report rep;
            const SectionAlgebra& alg = ws.alg;
            SuiteParams p = params_from(ws.config, cases, window, seed, dims);
            if (tri_op == "axioms") {
                suite_axioms(rep, "tri", alg, p);
            } else if (tri_op == "cone") {
                Triangle t = cone_of(alg, HClass{ws.named_twmor(u_name)});
                auto probs = verify_triangle(alg, t);
                rep.add("tri.cone", probs.empty(), probs.empty() ? "" : probs.front());
            } else if (tri_op == "rotate") {
                Triangle t = canonical_triangle(alg, ws.conflations.at(xi_name));
                auto pr = verify_triangle(alg, rotate_right(alg, t));
                auto pl = verify_triangle(alg, rotate_left(alg, t));
                rep.add("tri.rotate.right", pr.empty(), pr.empty() ? "" : pr.front());
                rep.add("tri.rotate.left", pl.empty(), pl.empty() ? "" : pl.front());
            } else if (tri_op == "tr3" || tri_op == "octa") {
                suite_axioms(rep, "tri", alg, p);
            } else {
                throw Error("unknown tri op '" + tri_op + "'");
            }
            return emit(rep, json);
        }
        if (c_self->parsed() || c_fuzz->parsed()) {
            Report rep;
            std::vector<std::pair<std::string, SectionAlgebra>> algebras;
            Config cfg;
            if (!file.empty()) {
                Workspace ws = load(file);
                algebras.emplace_back("input", ws.alg);
                cfg = ws.config;
            } else {
                algebras = shipped_algebras(field_override_from_env());
            }
            SuiteParams p = params_from(cfg, cases, window, seed, dims);
            if (c_fuzz->parsed()) {
                // lighter generated sweep, still deterministic
                p.fuzz_cases = cases > 0 ? cases : 25;
                p.axiom_instances = std::max(1, p.fuzz_cases / 5);
                for (const auto& [name, alg] : algebras) {
                    suite_tw(rep, name, alg, p);
                    suite_psi(rep, name, alg, p);
                    suite_confl(rep, name, alg, p);
                }
            } else {
                p.fuzz_cases = cases > 0 ? cases : 40;
                p.axiom_instances = std::max(1, std::min(8, p.fuzz_cases / 5));
                for (const auto& [name, alg] : algebras) run_suites(rep, name, alg, p);
            }
            return emit(rep, json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string what = e.what();
        return what.rfind("parse error", 0) == 0 || what.rfind("cannot open", 0) == 0 ||
                       what.rfind("load-time", 0) == 0
                   ? kExitUsage
                   : kExitCheckFailed;
    }
    return kExitUsage;
}
