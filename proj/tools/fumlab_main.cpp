// fumlab command line: generate graphs, decide FUM-colorability, check
// coloring files, export CNF, and replay the full verification suite.
//
// Exit codes are a stable contract:
//   0  success / satisfiable / no violations / all claims pass
//   1  violations found, a claim failed, or an internal validation failure
//   2  bad arguments or unparseable input
//   10 solve: search exhausted (no coloring with the given palette)
//   20 solve: node or time budget exceeded

#include <fumlab/fum.hpp>
#include <fumlab/generators.hpp>
#include <fumlab/sat_encoder.hpp>
#include <fumlab/verification.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace fumlab;

int env_threads() {
    const char* raw = std::getenv("FUMLAB_THREADS");
    if (!raw) return 1;
    try {
        return std::max(1, std::stoi(raw));
    } catch (const std::exception&) {
        return 1;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

// "graph or summary to stdout, the other channel to stderr" convention:
// when out_path is empty the payload goes to stdout and the summary moves
// to stderr so the payload stays pipeable.
void emit(const std::string& payload, const std::string& summary, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        std::cerr << summary << "\n";
    } else {
        write_file(out_path, payload);
        std::cout << summary << "\n";
    }
}

std::string census_summary(const PlaneGraph& g) {
    FaceCensus census = trace_faces(g);
    std::ostringstream out;
    out << "V=" << g.vertex_count() << " E=" << g.edge_count() << " F=" << census.faces.size()
        << " Δ=" << max_degree(g);
    return out.str();
}

nlohmann::json stats_to_json(const SearchStats& s) {
    return {{"nodes_expanded", s.nodes_expanded},
            {"prunes_by_properness", s.prunes_by_properness},
            {"prunes_by_face_max", s.prunes_by_face_max},
            {"wall_time_s", s.wall_time_s}};
}

nlohmann::json report_violations_json(const CheckReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& [u, v] : report.proper_violations)
        violations.push_back({{"kind", "proper"}, {"u", u}, {"v", v}});
    for (const FumViolation& f : report.fum_violations)
        violations.push_back({{"kind", "face-max"},
                              {"face", f.face},
                              {"max_color", f.max_color},
                              {"multiplicity", f.multiplicity}});
    return violations;
}

int cmd_gen(const std::string& target, int k, int n, const std::vector<int>& faces,
            const std::string& out_path) {
    PlaneGraph g;
    try {
        if (target == "gadget") {
            g = gen_gadget(k).graph;
        } else if (target == "fig1") {
            g = gen_fig1();
        } else if (target == "k4-composite") {
            g = gen_k4_composite(faces.empty() ? std::vector<int>{0, 1} : faces, k);
        } else if (target == "cycle") {
            g = gen_cycle(n);
        } else if (target == "k4") {
            g = gen_k4();
        } else if (target == "wheel") {
            g = gen_wheel(n);
        } else {
            std::cerr << "unknown target '" << target << "'\n";
            return 2;
        }
    } catch (const Error& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    }
    try {
        emit(serialize_graph(g), census_summary(g), out_path);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_solve(const std::string& graph_path, int k, const SearchOptions& opts,
              const std::string& cert_path, const std::string& format) {
    PlaneGraph g;
    try {
        g = parse_graph(read_file(graph_path));
    } catch (const Error& e) {
        std::cerr << "cannot load graph: " << e.what() << "\n";
        return 2;
    }

    SolveOutcome out;
    try {
        out = solve_fum(g, k, opts);
    } catch (const ResourceLimitExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 20;
    }

    if (format == "machine") {
        nlohmann::json doc;
        doc["status"] = out.status == SolveStatus::Satisfiable ? "satisfiable" : "exhausted";
        doc["palette"] = k;
        doc["stats"] = stats_to_json(out.stats);
        if (out.certificate) {
            nlohmann::json colors = nlohmann::json::array();
            for (int c : out.certificate->colors) colors.push_back(c);
            doc["certificate"] = colors;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "status: "
                  << (out.status == SolveStatus::Satisfiable ? "satisfiable" : "exhausted")
                  << "\n";
        std::cout << "nodes: " << out.stats.nodes_expanded
                  << "  prunes(proper): " << out.stats.prunes_by_properness
                  << "  prunes(face-max): " << out.stats.prunes_by_face_max << "  time: "
                  << out.stats.wall_time_s << "s\n";
        if (out.certificate) {
            std::cout << "certificate:";
            for (int c : out.certificate->colors) std::cout << " " << c;
            std::cout << "\n";
        }
    }
    if (out.certificate && !cert_path.empty())
        write_file(cert_path, serialize_coloring(*out.certificate));
    return out.status == SolveStatus::Satisfiable ? 0 : 10;
}

int cmd_check(const std::string& graph_path, const std::string& coloring_path,
              const std::string& format) {
    PlaneGraph g;
    Coloring c;
    CheckReport report;
    try {
        g = parse_graph(read_file(graph_path));
        c = parse_coloring(read_file(coloring_path));
        report = check_fum(g, c, trace_faces(g));
    } catch (const Error& e) {
        std::cerr << "cannot check: " << e.what() << "\n";
        return 2;
    }

    if (format == "machine") {
        nlohmann::json doc;
        doc["status"] = report.ok() ? "valid" : "invalid";
        doc["violations"] = report_violations_json(report);
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& [u, v] : report.proper_violations)
            std::cout << "proper violation: v" << u << " and v" << v << " share color "
                      << c.colors[u] << "\n";
        for (const FumViolation& f : report.fum_violations)
            std::cout << "face violation: face " << f.face << " has max color " << f.max_color
                      << " on " << f.multiplicity << " vertices\n";
        std::cout << (report.ok() ? "valid FUM-coloring" : "not a FUM-coloring") << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_encode(const std::string& graph_path, int k, const std::string& out_path) {
    PlaneGraph g;
    try {
        g = parse_graph(read_file(graph_path));
    } catch (const Error& e) {
        std::cerr << "cannot load graph: " << e.what() << "\n";
        return 2;
    }
    CnfFormula f = encode_fum(g, k);
    std::ostringstream summary;
    summary << "vars=" << f.var_map.total_vars() << " clauses=" << f.clauses.size();
    emit(write_dimacs(f), summary.str(), out_path);
    return 0;
}

int cmd_verify(const VerifyOptions& opts, const std::string& format,
               const std::string& out_path) {
    VerificationReport report = run_verification(opts);
    if (format == "machine")
        std::cout << report_to_json(report);
    else
        std::cout << report_to_text(report);
    // The machine-readable document is always written alongside the table.
    write_file(out_path, report_to_json(report));
    return report.overall() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"facial unique-maximum coloring laboratory"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::string gen_target;
    int gen_k = 1, gen_n = 3;
    std::vector<int> gen_faces;
    std::string gen_out;
    gen->add_option("target", gen_target, "gadget | fig1 | k4-composite | cycle | k4 | wheel")
        ->required();
    gen->add_option("--k", gen_k, "gadget size parameter (k >= 1)");
    gen->add_option("--n", gen_n, "cycle length / wheel rim size");
    gen->add_option("--faces", gen_faces, "K4 census faces to fill (default 0 1)");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "decide FUM-k-colorability of a graph file");
    std::string solve_graph, solve_out, solve_format = "text", solve_pruning = "on";
    int solve_k = 4;
    SearchOptions solve_opts;
    solve->add_option("graph", solve_graph, "graph file")->required();
    solve->add_option("--k", solve_k, "palette size")->required();
    solve->add_option("--out", solve_out, "write the certificate coloring here");
    solve->add_option("--budget-nodes", solve_opts.node_budget, "node budget");
    solve->add_option("--budget-seconds", solve_opts.time_budget_s, "time budget");
    solve->add_option("--strong-pruning", solve_pruning, "on|off (default on)")
        ->check(CLI::IsMember({"on", "off"}));
    solve->add_option("--format", solve_format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));

    // check
    auto* check = app.add_subcommand("check", "validate a coloring file against a graph");
    std::string check_graph, check_coloring, check_format = "text";
    check->add_option("graph", check_graph, "graph file")->required();
    check->add_option("coloring", check_coloring, "coloring file")->required();
    check->add_option("--format", check_format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));

    // encode
    auto* encode = app.add_subcommand("encode", "export the FUM decision problem as DIMACS CNF");
    std::string encode_graph, encode_out;
    int encode_k = 4;
    encode->add_option("graph", encode_graph, "graph file")->required();
    encode->add_option("--k", encode_k, "palette size")->required();
    encode->add_option("--out", encode_out, "output path (default stdout)");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "replay the full claim suite");
    VerifyOptions verify_opts;
    std::string verify_format = "text", verify_out = "fum_verify_report.json";
    verify->add_option("--budget-nodes", verify_opts.budget_nodes, "per-claim node budget");
    verify->add_option("--budget-seconds", verify_opts.budget_seconds, "per-claim time budget");
    verify->add_option("--format", verify_format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    verify->add_option("--out", verify_out, "machine-readable report path");
    verify->add_flag("--tamper-gadget", verify_opts.tamper_gadget,
                     "testing hook: cut one gadget spoke so the forcing claim fails");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            if (gen_target == "gadget" && gen_k < 1) {
                std::cerr << "invalid arguments: k must be >= 1\n";
                return 2;
            }
            return cmd_gen(gen_target, gen_k, gen_n, gen_faces, gen_out);
        }
        if (solve->parsed()) {
            if (solve_k < 1) {
                std::cerr << "invalid arguments: k must be >= 1\n";
                return 2;
            }
            solve_opts.strong_pruning = solve_pruning == "on";
            solve_opts.threads = env_threads();
            return cmd_solve(solve_graph, solve_k, solve_opts, solve_out, solve_format);
        }
        if (check->parsed()) return cmd_check(check_graph, check_coloring, check_format);
        if (encode->parsed()) {
            if (encode_k < 1) {
                std::cerr << "invalid arguments: k must be >= 1\n";
                return 2;
            }
            return cmd_encode(encode_graph, encode_k, encode_out);
        }
        if (verify->parsed()) {
            verify_opts.threads = env_threads();
            return cmd_verify(verify_opts, verify_format, verify_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
