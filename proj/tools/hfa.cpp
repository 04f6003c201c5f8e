#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfree/catalogue.hpp"
#include "hfree/classifier.hpp"
#include "hfree/enumeration.hpp"
#include "hfree/gadget_reductions.hpp"
#include "hfree/gadgets.hpp"
#include "hfree/reductions.hpp"
#include "hfree/report.hpp"
#include "hfree/solver.hpp"

using namespace hfree;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Catalogue id, family name such as F3(t=5), P<n>/C<n>/K<n>/E<n>, graph6, or
// "-" for one line of stdin.
SmallGraph parse_graph(const std::string& spec, const std::string& what)
{
    if (spec.empty()) throw UsageError(what + ": missing graph");
    if (spec == "-") {
        std::string line;
        if (!std::getline(std::cin, line)) throw UsageError(what + ": no graph6 on stdin");
        return parse_graph(line, what);
    }
    if (has_id(spec)) return lookup(spec).graph;
    int fam = 0, t = 0, len = 0;
    char tail = 0, kind = 0;
    if (std::sscanf(spec.c_str(), "%c%d%n", &kind, &len, &t) == 2 && t == static_cast<int>(spec.size()) &&
        std::string("PCKE").find(kind) != std::string::npos) {
        if (len < 1 || len > 64 || (kind == 'C' && len < 3)) throw UsageError(what + ": bad size in '" + spec + "'");
        switch (kind) {
        case 'P': return path_graph(len);
        case 'C': return cycle_graph(len);
        case 'K': return complete_graph(len);
        default: return empty_graph(len);
        }
    }
    t = 0;
    if (std::sscanf(spec.c_str(), "F%d(t=%d%c", &fam, &t, &tail) == 3 && tail == ')') {
        try {
            return generate_family({fam, t});
        } catch (const std::invalid_argument& e) {
            throw UsageError(what + ": " + e.what());
        }
    }
    try {
        return from_graph6(spec);
    } catch (const std::exception& e) {
        throw UsageError(what + ": '" + spec + "' is neither a catalogue id nor valid graph6 (" + e.what() + ")");
    }
}

// "0-1,2-3"
std::vector<Pair> parse_pairs(const std::string& s, int n)
{
    std::vector<Pair> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        int u = -1, v = -1;
        char dash = 0, extra = 0;
        if (std::sscanf(tok.c_str(), "%d%c%d%c", &u, &dash, &v, &extra) != 3 || dash != '-')
            throw UsageError("bad pair '" + tok + "' (expected u-v)");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw UsageError("pair '" + tok + "' out of range for " + std::to_string(n) + " vertices");
        out.emplace_back(std::min(u, v), std::max(u, v));
    }
    return out;
}

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad integer '" + tok + "'");
        }
    }
    return out;
}

// "0,1,2;1,2,3"
PropFormula parse_formula(const std::string& s)
{
    PropFormula phi;
    std::stringstream in(s);
    std::string clause;
    while (std::getline(in, clause, ';')) {
        auto xs = parse_ints(clause);
        if (xs.size() != 3) throw UsageError("clause '" + clause + "' needs three variables");
        phi.clauses.push_back({xs[0], xs[1], xs[2]});
        for (int x : xs) phi.vars = std::max(phi.vars, x + 1);
    }
    try {
        validate(phi, false);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("formula: ") + e.what());
    }
    return phi;
}

Mode parse_mode(const std::string& s)
{
    try {
        return mode_from_string(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Json edge_list(const SmallGraph& g) { return pairs_json(edges(g)); }

struct Ctx {
    std::string command;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    int workers = 1;
};

int emit(const Ctx& ctx, Json inputs, Json outputs, const std::vector<std::string>& counterexamples,
         const std::string& summary, int code)
{
    Json j;
    j["command"] = ctx.command;
    j["version"] = kVersion;
    j["inputs"] = std::move(inputs);
    j["outputs"] = std::move(outputs);
    j["counterexamples"] = counterexamples;
    j["runtime_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.t0).count();
    std::cout << dump(j);
    std::cerr << summary << "\n";
    return code;
}

int resolve_workers(int flag)
{
    const char* env = std::getenv("HFA_WORKERS");
    if (!env) return flag;
    try {
        std::size_t used = 0;
        int w = std::stoi(env, &used);
        if (used == std::string(env).size() && w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("HFA_WORKERS='") + env + "' is not a positive integer");
}

}  // namespace

int main(int argc, char** argv)
{
    Ctx ctx;
    for (int i = 0; i < argc; ++i) ctx.command += (i ? " " : "") + std::string(argv[i]);

    CLI::App app{"Classification, verification and reductions for H-free edge modification"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", std::string("hfa ") + kVersion);
    app.require_subcommand(1);

    std::string graph, h_spec, problem = "edit", mode = "del", forbidden, construction, vprime, row, cell,
                formula, campaign, resume, id;
    int k = 1, param = 0, n_max = 9, workers = 1, n_host = 6, exhaustive_limit = 15;
    bool allow_large = false, connected_only = false, exhaustive = false, controls = false;

    auto* classify_cmd = app.add_subcommand("classify", "Kernelization status of H-free modification");
    classify_cmd->add_option("--graph", graph, "graph6, catalogue id or - for stdin")->required();
    classify_cmd->add_option("--problem", problem, "edit, del or comp")->capture_default_str();

    auto* churn_cmd = app.add_subcommand("churn", "Repeated low/high peeling down to a regular graph");
    churn_cmd->add_option("--graph", graph)->required();

    auto* chain_cmd = app.add_subcommand("chain", "Reduction chain to the finite refinement");
    chain_cmd->add_option("--graph", graph)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "Run one reduction construction");
    reduce_cmd->add_option("--construction", construction)->required();
    reduce_cmd->add_option("--graph", graph, "instance graph (unused by ConCai)");
    reduce_cmd->add_option("--k", k)->capture_default_str();
    reduce_cmd->add_option("--h", h_spec, "target pattern (ConMain, LargestComponent)");
    reduce_cmd->add_option("--vprime", vprime, "kept vertices of h, comma separated (ConMain)");
    reduce_cmd->add_option("--param", param, "ell for ConMod, t for ConNearUni");
    reduce_cmd->add_option("--mode", mode, "del or comp (EnforcerAttach, ConCai)")->capture_default_str();
    reduce_cmd->add_option("--forbidden", forbidden, "forbidden pairs u-v,...");
    reduce_cmd->add_option("--row", row, "gadget table target id (EnforcerAttach, ConCai)");
    reduce_cmd->add_option("--formula", formula, "clauses x,y,z;... (ConCai)");

    auto* solve_cmd = app.add_subcommand("solve", "Decide an edge modification instance");
    solve_cmd->add_option("--graph", graph)->required();
    solve_cmd->add_option("--h", h_spec)->required();
    solve_cmd->add_option("--k", k)->required();
    solve_cmd->add_option("--mode", mode)->capture_default_str();
    solve_cmd->add_option("--forbidden", forbidden, "forbidden pairs u-v,...");
    solve_cmd->add_flag("--exhaustive", exhaustive, "use the subset enumeration instead of the search tree");
    solve_cmd->add_flag("--allow-large", allow_large, "raise the vertex cap to 64");

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive search campaign");
    verify_cmd->add_option("--campaign", campaign, "case_lemmas, regular_tail, churn_totality or W_closure")->required();
    verify_cmd->add_option("--n-max", n_max)->capture_default_str();
    verify_cmd->add_option("--workers", workers)->capture_default_str();
    verify_cmd->add_option("--resume", resume, "checkpoint directory; resumed when it holds progress");
    verify_cmd->add_flag("--allow-large", allow_large, "lift the n <= 10 guardrail to 11");
    verify_cmd->add_flag("--connected-only", connected_only);

    auto* gadgets_cmd = app.add_subcommand("verify-gadgets", "Check the gadget table");
    gadgets_cmd->add_option("--row", row, "target id; all rows when omitted");
    gadgets_cmd->add_option("--cell", cell, "SD BD ED SC BC EC");
    gadgets_cmd->add_option("--n-host", n_host, "host bound of the enforcer falsification")->capture_default_str();
    gadgets_cmd->add_option("--exhaustive-limit", exhaustive_limit, "largest ring checked subset by subset")
        ->capture_default_str();
    gadgets_cmd->add_flag("--controls", controls, "also run the mutation controls");

    auto* cat_cmd = app.add_subcommand("catalogue", "Catalogue access");
    cat_cmd->require_subcommand(1);
    auto* show_cmd = cat_cmd->add_subcommand("show", "Edge list and properties of one entry");
    show_cmd->add_option("id", id)->required();
    auto* list_cmd = cat_cmd->add_subcommand("list", "All stored ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) {
            auto g = parse_graph(graph, "--graph");
            auto p = problem_from_string(problem);
            auto v = classify(g, p);
            std::string name = name_of(g);
            return emit(ctx, {{"graph", to_graph6(g)}, {"problem", to_string(p)}}, to_json(v, g), {},
                        (name.empty() ? to_graph6(g) : name) + " " + to_string(p) + ": " + to_string(v.status) + " (" +
                            v.reason + ")",
                        0);
        }
        if (*churn_cmd) {
            auto g = parse_graph(graph, "--graph");
            auto c = churn(g);
            return emit(ctx, {{"graph", to_graph6(g)}}, to_json(c), {},
                        std::to_string(c.trace.size()) + " steps, result " + to_graph6(c.result), 0);
        }
        if (*chain_cmd) {
            auto g = parse_graph(graph, "--graph");
            std::vector<ReductionStep> steps;
            try {
                steps = derive_chain(g);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            Json out = Json::array();
            for (auto& st : steps) out.push_back(to_json(st));
            return emit(ctx, {{"graph", to_graph6(g)}}, {{"chain", out}}, {},
                        std::to_string(steps.size()) + " reduction steps", 0);
        }
        if (*reduce_cmd) {
            auto c = construction_from_string(construction);
            if (!c) throw UsageError("unknown construction '" + construction + "'");
            auto g = *c == Construction::ConCai && graph.empty() ? SmallGraph(0) : parse_graph(graph, "--graph");
            if (k < 0) throw UsageError("--k must be non-negative");
            Json inputs{{"construction", to_string(*c)}, {"graph", to_graph6(g)}, {"k", k}};
            Json out;
            auto need_h = [&] {
                if (h_spec.empty()) throw UsageError(to_string(*c) + " needs --h");
                auto h = parse_graph(h_spec, "--h");
                inputs["h"] = to_graph6(h);
                return h;
            };
            auto instance = [&](Mode m) {
                EditInstance inst;
                inst.g = g;
                inst.k = k;
                inst.mode = m;
                for (auto [u, v] : parse_pairs(forbidden, g.n())) inst.forbidden.insert(u, v);
                inputs["mode"] = to_string(m);
                inputs["forbidden"] = pairs_json(inst.forbidden.list());
                return inst;
            };
            auto gadget = [&](const char* role) {
                Mode m = parse_mode(mode);
                if (m == Mode::Edit) throw UsageError("--mode must be del or comp");
                std::string key = std::string(role) + (m == Mode::Delete ? "D" : "C");
                auto r = find_row(row, key);
                if (!r) throw UsageError("no gadget row " + row + " " + key);
                inputs["row"] = row;
                inputs["cell"] = key;
                return r->gadget;
            };
            auto small = [&](const SmallGraph& x) {
                out["graph"] = to_graph6(x);
                out["n"] = x.n();
                out["k"] = k;
            };
            switch (*c) {
            case Construction::ConMain: {
                auto h = need_h();
                Mask kept = 0;
                for (int v : parse_ints(vprime)) {
                    if (v < 0 || v >= h.n()) throw UsageError("--vprime vertex out of range");
                    kept |= bit(v);
                }
                inputs["vprime"] = parse_ints(vprime);
                small(con_main(g, k, h, kept));
                break;
            }
            case Construction::ConMod:
                inputs["param"] = param;
                small(con_mod(g, k, param));
                break;
            case Construction::ConNearUni:
                inputs["param"] = param;
                small(con_near_uni(g, k, param));
                break;
            case Construction::DisjointClique: small(disjoint_clique(g, k)); break;
            case Construction::LargestComponent: {
                auto h = need_h();
                out = to_json(largest_component_reduction(instance(Mode::Edit), h));
                break;
            }
            case Construction::EnforcerAttach:
                out = to_json(enforcer_attach(instance(parse_mode(mode)), gadget("E")));
                break;
            case Construction::ConCai: {
                if (formula.empty()) throw UsageError("ConCai needs --formula");
                auto phi = parse_formula(formula);
                inputs["formula"] = formula;
                auto s = gadget("S");
                auto u = gadget("B");
                out = to_json(con_cai(phi, k, s, u));
                break;
            }
            default: {
                auto shape = tricky_shape(*c);
                auto inst = instance(shape.mode);
                auto why = tricky_side_condition(*c, inst);
                if (!why.empty()) throw UsageError("side condition fails: " + why);
                out = to_json(tricky_reduction(*c, inst));
                out["source_h"] = to_graph6(shape.source_h);
                out["target_h"] = to_graph6(shape.target_h);
                break;
            }
            }
            return emit(ctx, inputs, out, {},
                        to_string(*c) + ": " + std::to_string(out["n"].get<int>()) + " vertices, k' = " +
                            std::to_string(out["k"].get<int>()),
                        0);
        }
        if (*solve_cmd) {
            EditInstance inst;
            inst.g = parse_graph(graph, "--graph");
            auto h = parse_graph(h_spec, "--h");
            inst.k = k;
            inst.mode = parse_mode(mode);
            for (auto [u, v] : parse_pairs(forbidden, inst.g.n())) inst.forbidden.insert(u, v);
            try {
                validate(inst);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            SolveLimits lim;
            if (allow_large) lim.max_n = 64;
            auto sol = exhaustive ? solve_exhaustive(inst, h, lim) : solve(inst, h, lim);
            Json out = to_json(sol);
            out["witness_valid"] = sol.feasible && witness_valid(inst, h, sol.witness);
            out["method"] = exhaustive ? "exhaustive" : "search-tree";
            return emit(ctx, {{"instance", to_json(inst)}, {"h", to_graph6(h)}}, out, {},
                        sol.feasible ? "yes, " + std::to_string(sol.witness.size()) + " modifications" : "no", 0);
        }
        if (*verify_cmd) {
            auto c = campaign_from_string(campaign);
            if (!c) throw UsageError("unknown campaign '" + campaign +
                                     "' (expected case_lemmas, regular_tail, churn_totality or W_closure)");
            EnumConfig cfg;
            cfg.n_max = n_max;
            cfg.workers = resolve_workers(workers);
            cfg.allow_large = allow_large;
            cfg.connected_only = connected_only;
            cfg.checkpoint_dir = resume;
            try {
                check_enumeration_bound(n_max, allow_large);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            cfg.on_level = [](int n, long long count) {
                std::cerr << "level " << n << ": " << count << " graphs\n";
            };
            auto rep = run_search_campaign(*c, cfg);
            std::string summary = rep.campaign + " n <= " + std::to_string(rep.n_max) + ": " +
                                  std::to_string(rep.counterexamples.size()) + " counterexamples";
            if (!rep.exceptions.empty()) {
                summary += ", exceptions";
                for (auto& e : rep.exceptions) summary += " " + e;
            }
            if (!rep.complete) summary += ", incomplete: " + rep.error + " (rerun with --resume " + rep.resume_token + ")";
            int code = rep.counterexamples.empty() && rep.complete ? 0 : 1;
            return emit(ctx, {{"campaign", rep.campaign}, {"n_max", n_max}, {"workers", cfg.workers}},
                        to_json(rep), rep.counterexamples, summary, code);
        }
        if (*gadgets_cmd) {
            if (!row.empty() && std::find(gadget_targets().begin(), gadget_targets().end(), row) == gadget_targets().end())
                throw UsageError("no gadget rows for '" + row + "'");
            if (n_host < 2) throw UsageError("--n-host must be at least 2");
            Json rows = Json::array();
            std::vector<std::string> failed;
            for (auto& r : gadget_rows()) {
                if (!row.empty() && r.h_id != row) continue;
                if (!cell.empty() && r.cell != cell) continue;
                auto rep = verify_row(r, n_host, exhaustive_limit);
                rows.push_back(to_json(rep));
                if (!rep.passed) failed.push_back(r.h_id + " " + r.cell);
            }
            if (rows.empty()) throw UsageError("no row matches the selection");
            Json out{{"rows", rows}};
            if (controls) {
                Json cs = Json::array();
                for (auto& cr : mutation_controls(std::min(n_host, 5))) {
                    cs.push_back(to_json(cr));
                    if (!cr.failed_as_expected) failed.push_back("control " + cr.name);
                }
                out["controls"] = cs;
            }
            return emit(ctx, {{"row", row}, {"cell", cell}, {"n_host", n_host}, {"exhaustive_limit", exhaustive_limit}},
                        out, failed,
                        std::to_string(rows.size()) + " rows, " + std::to_string(failed.size()) + " failures",
                        failed.empty() ? 0 : 1);
        }
        if (*show_cmd) {
            if (!has_id(id)) throw UsageError("unknown catalogue id '" + id + "' (try: hfa catalogue list)");
            auto e = lookup(id);
            const auto& g = e.graph;
            Json out;
            out["id"] = e.id;
            out["graph"] = to_graph6(g);
            out["n"] = g.n();
            out["m"] = static_cast<int>(edges(g).size());
            out["edges"] = edge_list(g);
            Json deg = Json::array();
            for (int v = 0; v < g.n(); ++v) deg.push_back(g.degree(v));
            out["degrees"] = deg;
            out["regular"] = is_regular(g);
            out["connected"] = is_connected(g);
            out["connectivity"] = vertex_connectivity(g);
            out["complement"] = to_graph6(complement(g));
            out["source"] = e.source;
            auto w = membership_W(g);
            out["in_W"] = w.has_value();
            if (w) out["W_reason"] = w->describe();
            std::string summary = e.id + ":";
            for (auto [u, v] : edges(g)) summary += " " + std::to_string(u) + "-" + std::to_string(v);
            return emit(ctx, {{"id", id}}, out, {}, summary, 0);
        }
        if (*list_cmd) {
            Json out = Json::array();
            for (auto& e : catalogue()) out.push_back({{"id", e.id}, {"graph", to_graph6(e.graph)}});
            return emit(ctx, Json::object(), {{"entries", out}}, {}, std::to_string(out.size()) + " entries", 0);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: guardrail: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
