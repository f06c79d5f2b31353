// flagfold: command-line front end for the graph/complex reduction library.
//
// Exit codes: 0 = reduced/contractible (Yes), 1 = refuted (No),
// 2 = inconclusive (Unknown), 3 = parse or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "flagfold/complex.hpp"
#include "flagfold/graph.hpp"
#include "flagfold/homology.hpp"
#include "flagfold/itransform.hpp"
#include "flagfold/link_moves.hpp"
#include "flagfold/reduction.hpp"
#include "flagfold/serialize.hpp"

using namespace flagfold;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitParse = 3;

std::size_t face_cap_from_env() {
    const char* raw = std::getenv("FLAGFOLD_FACE_CAP");
    if (!raw || !*raw) return kDefaultFaceCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) {
        std::cerr << "error: FLAGFOLD_FACE_CAP must be a positive integer\n";
        std::exit(kExitParse);
    }
    return static_cast<std::size_t>(v);
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(kExitParse);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) {
    try {
        return parse_graph_text(slurp(path));
    } catch (const GraphError& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        std::exit(kExitParse);
    }
}

SimplicialComplex load_complex(const std::string& path) {
    try {
        return parse_complex_text(slurp(path));
    } catch (const ComplexError& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        std::exit(kExitParse);
    }
}

void write_trace_file(const std::string& path, const ITrace& trace) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(kExitParse);
    }
    out << trace_to_json(trace).dump(2) << "\n";
}

struct CommonFlags {
    std::uint64_t budget_nodes = Budget{}.max_nodes;
    int budget_depth = Budget{}.max_depth;
    std::string format = "text";
    std::string emit_trace;

    Budget budget() const { return Budget{budget_nodes, budget_depth}; }
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_trace = true) {
    cmd->add_option("--budget-nodes", f.budget_nodes, "search node budget");
    cmd->add_option("--budget-depth", f.budget_depth, "nested certification depth budget");
    cmd->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_trace) cmd->add_option("--emit-trace", f.emit_trace, "write a replayable JSON trace");
}

void echo_config(const CommonFlags& f, const std::string& extra = {}) {
    std::cout << "# config: budget-nodes=" << f.budget_nodes
              << " budget-depth=" << f.budget_depth << " face-cap=" << face_cap_from_env()
              << (extra.empty() ? "" : " ") << extra << "\n";
}

int report_verdict(const Verdict& v, const CommonFlags& f) {
    if (f.format == "json") {
        std::cout << verdict_to_json(v).dump(2) << "\n";
    } else {
        switch (v.kind) {
            case Verdict::Kind::Yes:
                std::cout << "Yes: reduced to a single vertex in "
                          << v.certificate->moves.size() << " moves\n";
                break;
            case Verdict::Kind::No:
                std::cout << "No: nonzero reduced homology";
                if (v.witness) std::cout << " " << v.witness->to_string();
                std::cout << "\n";
                break;
            case Verdict::Kind::Unknown:
                std::cout << "Unknown: " << v.diagnostics << "\n";
                break;
        }
    }
    if (!f.emit_trace.empty() && v.yes()) write_trace_file(f.emit_trace, *v.certificate);
    return v.yes() ? kExitYes : (v.no() ? kExitNo : kExitUnknown);
}

int cmd_reduce(const std::string& input, const std::string& strategy, const CommonFlags& f) {
    Graph g = load_graph(input);
    if (g.empty()) {
        std::cerr << "error: the empty graph cannot be reduced\n";
        return kExitParse;
    }
    if (f.format == "text") echo_config(f, "strategy=" + strategy);
    if (strategy == "dismantle") {
        DismantlingTrace t = dismantle(g);
        ITrace moves = dismantling_to_moves(g, t);
        if (!f.emit_trace.empty()) write_trace_file(f.emit_trace, moves);
        if (f.format == "json")
            std::cout << trace_to_json(moves).dump(2) << "\n";
        else
            std::cout << (t.reached_k1() ? "reduced to K1" : "stuck") << " after "
                      << t.steps.size() << " deletions; core has " << t.core.vertex_count()
                      << " vertices\n";
        return t.reached_k1() ? kExitYes : kExitUnknown;
    }
    if (strategy == "s") {
        STrace t = s_reduce(g);
        ITrace moves{g, {}, t.terminal};
        for (Vertex v : t.deletions) moves.moves.push_back(IMove::s_delete(v));
        if (!f.emit_trace.empty()) write_trace_file(f.emit_trace, moves);
        if (f.format == "json")
            std::cout << trace_to_json(moves).dump(2) << "\n";
        else
            std::cout << (t.reached_k1() ? "reduced to K1" : "stuck") << " after "
                      << t.deletions.size() << " deletions; terminal has "
                      << t.terminal.vertex_count() << " vertices\n";
        return t.reached_k1() ? kExitYes : kExitUnknown;
    }
    // i-moves
    Verdict v = reduce_via_moves(g, f.budget());
    return report_verdict(v, f);
}

int cmd_certify(const std::string& input, const CommonFlags& f) {
    Graph g = load_graph(input);
    if (g.empty()) {
        std::cerr << "error: the empty graph cannot be certified\n";
        return kExitParse;
    }
    if (f.format == "text") echo_config(f);
    Verdict v = reduce_via_moves(g, f.budget());
    return report_verdict(v, f);
}

int cmd_verify(const std::string& input, const CommonFlags& f) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(slurp(input));
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << input << ": " << e.what() << "\n";
        return kExitParse;
    }
    ITrace t;
    try {
        t = trace_from_json(j);
    } catch (const std::exception& e) {
        std::cerr << "error: " << input << ": " << e.what() << "\n";
        return kExitParse;
    }
    VerifyResult r = verify_trace(t, f.budget());
    if (f.format == "json") {
        nlohmann::json out{{"ok", r.ok}, {"failed_step", r.failed_step},
                           {"diagnostics", r.diagnostics}};
        std::cout << out.dump(2) << "\n";
    } else if (r.ok) {
        std::cout << "trace verifies: " << t.moves.size() << " moves\n";
    } else {
        std::cout << "trace fails at step " << r.failed_step << ": " << r.diagnostics << "\n";
    }
    return r.ok ? kExitYes : kExitNo;
}

struct TheoremConfig {
    int trials = 1000;
    int n = 12;
    double p = 0.5;
    std::uint64_t seed = 7;
};

int cmd_verify_theorems(const TheoremConfig& cfg, const CommonFlags& f) {
    echo_config(f, "trials=" + std::to_string(cfg.trials) + " n=" + std::to_string(cfg.n) +
                       " p=" + std::to_string(cfg.p) + " seed=" + std::to_string(cfg.seed));
    const Budget budget{500, 4};
    int move_checks = 0, s_checks = 0, link_checks = 0, failed = 0;

    auto report_counterexample = [&](const char* suite, const Graph& g) {
        ++failed;
        std::cout << "COUNTEREXAMPLE (" << suite << "):\n" << graph_to_text(g);
    };

    for (int t = 0; t < cfg.trials; ++t) {
        int n = 1 + t % cfg.n;
        Graph g = random_graph(n, cfg.p, cfg.seed + static_cast<std::uint64_t>(t));
        if (g.empty()) continue;
        SimplicialComplex k = clique_complex(g);
        HomologyProfile before = homology(k, true, face_cap_from_env());

        // move/homology invariance: one certified move per kind where possible
        std::vector<IMove> cands;
        for (Vertex v : g.vertices()) cands.push_back(IMove::delete_vertex(v));
        for (Vertex v : g.vertices())
            for (Vertex w : g.vertices()) {
                if (v >= w) continue;
                cands.push_back(g.has_edge(v, w) ? IMove::delete_edge(v, w)
                                                 : IMove::glue_edge(v, w));
            }
        for (const IMove& m : cands) {
            MoveOutcome out = apply_move(g, m, budget);
            if (!out.applied() || out.result->empty()) continue;
            ++move_checks;
            if (homology(clique_complex(*out.result), true, face_cap_from_env()) != before) {
                report_counterexample("move invariance", g);
                break;
            }
        }

        // s-to-I embedding
        STrace s = s_reduce(g);
        Graph cur = g;
        for (Vertex v : s.deletions) {
            ++s_checks;
            if (!check_precondition(cur, IMove::delete_vertex(v), budget).yes()) {
                report_counterexample("s-move acceptance", g);
                break;
            }
            cur = cur.delete_vertex(v);
        }

        // link identity
        if (g.vertex_count() <= 10) {
            for (Vertex v : g.vertices()) {
                ++link_checks;
                if (link(k, g.display_name(v)) != clique_complex(g.induced(g.neighbors(v)))) {
                    report_counterexample("link identity", g);
                    break;
                }
            }
        }
    }

    std::cout << "move-invariance checks: " << move_checks << "\n"
              << "s-move acceptance checks: " << s_checks << "\n"
              << "link-identity checks: " << link_checks << "\n"
              << (failed == 0 ? "all suites passed" : "FAILURES: " + std::to_string(failed))
              << "\n";
    return failed == 0 ? kExitYes : kExitNo;
}

int cmd_homology(const std::string& input, bool reduced, const CommonFlags& f) {
    SimplicialComplex k = load_complex(input);
    if (k.empty()) {
        std::cerr << "error: empty complex\n";
        return kExitParse;
    }
    HomologyProfile p = homology(k, reduced, face_cap_from_env());
    if (f.format == "json")
        std::cout << profile_to_json(p).dump(2) << "\n";
    else
        std::cout << p.to_string() << "\n";
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph dismantling, contractible transformations, and simplicial reductions"};
    app.require_subcommand(1);

    // reduce
    std::string reduce_input, strategy = "i-moves";
    CommonFlags reduce_flags;
    CLI::App* reduce = app.add_subcommand("reduce", "reduce a graph toward K1");
    reduce->add_option("input", reduce_input, "graph file ('-' for stdin)")->required();
    reduce->add_option("--strategy", strategy, "reduction strategy")
        ->check(CLI::IsMember({"dismantle", "s", "i-moves"}));
    add_common(reduce, reduce_flags);

    // certify
    std::string certify_input;
    CommonFlags certify_flags;
    CLI::App* certify = app.add_subcommand("certify", "certify contractibility of a graph");
    certify->add_option("input", certify_input, "graph file")->required();
    add_common(certify, certify_flags);

    // verify
    std::string verify_input;
    CommonFlags verify_flags;
    CLI::App* verify = app.add_subcommand("verify", "replay and re-certify a JSON trace");
    verify->add_option("input", verify_input, "trace JSON file")->required();
    add_common(verify, verify_flags, false);

    // verify-theorems
    TheoremConfig theorem_cfg;
    CommonFlags theorem_flags;
    CLI::App* theorems =
        app.add_subcommand("verify-theorems", "run the randomized invariance suites");
    theorems->add_option("--trials", theorem_cfg.trials, "number of random graphs");
    theorems->add_option("--n", theorem_cfg.n, "maximum vertex count");
    theorems->add_option("--p", theorem_cfg.p, "edge probability")
        ->check(CLI::Range(0.0, 1.0));
    theorems->add_option("--seed", theorem_cfg.seed, "base RNG seed");
    add_common(theorems, theorem_flags, false);

    // complex tools
    std::string clique_input, skeleton_input, bd_input, cyl_input, collapse_input;
    std::string homology_input, link_input, link_vertex;
    bool homology_reduced = false;
    CommonFlags homology_flags;
    CLI::App* clique = app.add_subcommand("clique", "clique complex of a graph");
    clique->add_option("input", clique_input, "graph file")->required();
    CLI::App* skeleton = app.add_subcommand("skeleton", "1-skeleton of a complex");
    skeleton->add_option("input", skeleton_input, "complex file")->required();
    CLI::App* bd = app.add_subcommand("bd", "barycentric subdivision");
    bd->add_option("input", bd_input, "complex file")->required();
    CLI::App* cyl_cmd = app.add_subcommand("cyl", "mapping cylinder complex");
    cyl_cmd->add_option("input", cyl_input, "complex file")->required();
    CLI::App* collapse = app.add_subcommand("collapse", "greedy elementary collapsing");
    collapse->add_option("input", collapse_input, "complex file")->required();
    CLI::App* homology_cmd = app.add_subcommand("homology", "integral homology profile");
    homology_cmd->add_option("input", homology_input, "complex file")->required();
    homology_cmd->add_flag("--reduced", homology_reduced, "reduced homology");
    add_common(homology_cmd, homology_flags, false);
    CLI::App* link_cmd = app.add_subcommand("link", "link of a vertex");
    link_cmd->add_option("input", link_input, "complex file")->required();
    link_cmd->add_option("vertex", link_vertex, "vertex token")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*reduce) return cmd_reduce(reduce_input, strategy, reduce_flags);
        if (*certify) return cmd_certify(certify_input, certify_flags);
        if (*verify) return cmd_verify(verify_input, verify_flags);
        if (*theorems) return cmd_verify_theorems(theorem_cfg, theorem_flags);
        if (*clique) {
            std::cout << complex_to_text(clique_complex(load_graph(clique_input)));
            return kExitYes;
        }
        if (*skeleton) {
            std::cout << graph_to_text(one_skeleton(load_complex(skeleton_input)));
            return kExitYes;
        }
        if (*bd) {
            std::cout << complex_to_text(barycentric(load_complex(bd_input)));
            return kExitYes;
        }
        if (*cyl_cmd) {
            std::cout << complex_to_text(cyl(load_complex(cyl_input)));
            return kExitYes;
        }
        if (*collapse) {
            CollapseTrace t = greedy_collapse(load_complex(collapse_input));
            std::cout << "# " << t.steps.size() << " elementary collapses\n"
                      << complex_to_text(t.result);
            return t.result.vertex_count() == 1 ? kExitYes : kExitUnknown;
        }
        if (*homology_cmd) return cmd_homology(homology_input, homology_reduced, homology_flags);
        if (*link_cmd) {
            SimplicialComplex k = load_complex(link_input);
            std::cout << complex_to_text(link(k, link_vertex));
            return kExitYes;
        }
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ComplexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const FaceCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
