#include <fumlab/verification.hpp>

#include <fumlab/generators.hpp>
#include <fumlab/sat_encoder.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

namespace fumlab {

bool VerificationReport::overall() const {
    for (const ClaimResult& c : claims)
        if (c.status != ClaimResult::Status::Pass) return false;
    return true;
}

int VerificationReport::passed() const {
    int n = 0;
    for (const ClaimResult& c : claims)
        if (c.status == ClaimResult::Status::Pass) ++n;
    return n;
}

namespace {

struct ClaimRun {
    bool pass = false;
    std::string evidence;
};

std::string coloring_brief(const Coloring& c) {
    std::string s;
    for (std::size_t v = 0; v < c.colors.size(); ++v) {
        if (v) s += ",";
        s += std::to_string(c.colors[v]);
    }
    return s;
}

std::string census_brief(const FaceCensus& census) {
    std::string s = "{";
    bool first = true;
    for (const auto& [len, count] : census.counts_by_length) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(count) + "xlen" + std::to_string(len);
    }
    return s + "}";
}

void run_claim(VerificationReport& report, const std::string& id, const std::string& description,
               const std::string& anchor, const std::function<ClaimRun()>& body) {
    ClaimResult result;
    result.id = id;
    result.description = description;
    result.anchor = anchor;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ClaimRun run = body();
        result.status = run.pass ? ClaimResult::Status::Pass : ClaimResult::Status::Fail;
        result.evidence = run.evidence;
    } catch (const ResourceLimitExceeded& e) {
        result.status = ClaimResult::Status::BudgetExceeded;
        result.evidence = e.what();
    } catch (const std::exception& e) {
        result.status = ClaimResult::Status::Fail;
        result.evidence = std::string("error: ") + e.what();
    }
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.claims.push_back(std::move(result));
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& opts) {
    SearchOptions search;
    search.node_budget = opts.budget_nodes;
    search.time_budget_s = opts.budget_seconds;
    search.threads = opts.threads;

    VerificationReport report;

    run_claim(report, "gadget-census",
              "the k=1 gadget builds with the advertised topology",
              "H_1 has V=8, E=16, F=10 with 8 triangles and 2 quadrilaterals; every degree is 4 "
              "and the outer face is the a-cycle",
              [&]() -> ClaimRun {
                  GadgetHandle h = gen_gadget(1);
                  FaceCensus census = trace_faces(h.graph);
                  bool ok = h.graph.vertex_count() == 8 && h.graph.edge_count() == 16 &&
                            census.faces.size() == 10 &&
                            census.counts_by_length ==
                                std::map<std::size_t, std::size_t>{{3, 8}, {4, 2}} &&
                            max_degree(h.graph) == 4 && census.outer_face_index.has_value() &&
                            census.faces[*census.outer_face_index].incident_vertices ==
                                h.outer_cycle;
                  std::ostringstream ev;
                  ev << "V=" << h.graph.vertex_count() << " E=" << h.graph.edge_count()
                     << " F=" << census.faces.size() << " census " << census_brief(census);
                  return {ok, ev.str()};
              });

    for (int k : {1, 2}) {
        std::string kk = std::to_string(k);
        run_claim(report, "forcing-h" + kk,
                  "every proper 4-coloring of H_" + kk +
                      " with unique maxima on all interior faces colors some outer-cycle vertex 4",
                  "verify_gadget_forcing(H_" + kk + ", palette 4, forced color 4) holds",
                  [&, k]() -> ClaimRun {
                      GadgetHandle h = gen_gadget(k);
                      PlaneGraph graph = h.graph;
                      if (opts.tamper_gadget && k == 1) {
                          // Testing hook: cut the spoke a1-b1 and watch the property die.
                          graph = remove_edge(graph, *graph.find_label("a1"),
                                              *graph.find_label("b1"));
                      }
                      GadgetReport r = verify_gadget_forcing(graph, 4, 4, search);
                      std::ostringstream ev;
                      ev << r.colorings_examined << " interior-FUM colorings examined";
                      if (!r.holds && r.witness)
                          ev << "; witness without color 4 on the outer cycle: "
                             << coloring_brief(*r.witness);
                      return {r.holds, ev.str()};
                  });
    }

    run_claim(report, "fig1-not-4-colorable",
              "the 16-vertex two-gadget graph admits no FUM-coloring with palette {1,2,3,4}",
              "solve_fum(fig1, 4) = Exhausted",
              [&]() -> ClaimRun {
                  SolveOutcome out = solve_fum(gen_fig1(), 4, search);
                  std::ostringstream ev;
                  ev << (out.status == SolveStatus::Exhausted ? "exhausted" : "satisfiable")
                     << " after " << out.stats.nodes_expanded << " nodes";
                  return {out.status == SolveStatus::Exhausted, ev.str()};
              });

    run_claim(report, "fig1-5-colorable",
              "the two-gadget graph has a FUM-coloring with palette {1..5} and the certificate "
              "revalidates",
              "solve_fum(fig1, 5) = Satisfiable with a certificate passing check_fum",
              [&]() -> ClaimRun {
                  PlaneGraph g = gen_fig1();
                  SolveOutcome out = solve_fum(g, 5, search);
                  if (out.status != SolveStatus::Satisfiable) return {false, "exhausted"};
                  bool valid = check_fum(g, *out.certificate, trace_faces(g)).ok();
                  std::ostringstream ev;
                  ev << "certificate " << coloring_brief(*out.certificate) << " ("
                     << out.stats.nodes_expanded << " nodes)";
                  return {valid, ev.str()};
              });

    run_claim(report, "degree-facts",
              "the counterexample has maximum degree 5; deleting the connecting edge leaves two "
              "components of maximum degree 4",
              "max_degree(fig1) = 5; fig1 - a4a2' has 2 components, each with max degree 4",
              [&]() -> ClaimRun {
                  PlaneGraph g = gen_fig1();
                  int d5 = max_degree(g);
                  PlaneGraph d = remove_edge(g, *g.find_label("a4"), *g.find_label("a2'"));
                  std::vector<int> comp_max(d.component_count(), 0);
                  for (VertexId v = 0; v < d.vertex_count(); ++v)
                      comp_max[d.component_of(v)] = std::max(comp_max[d.component_of(v)],
                                                             d.degree(v));
                  bool ok = d5 == 5 && d.component_count() == 2 && comp_max.size() == 2 &&
                            comp_max[0] == 4 && comp_max[1] == 4;
                  std::ostringstream ev;
                  ev << "max degree " << d5 << "; after deletion " << d.component_count()
                     << " components with max degrees";
                  for (int m : comp_max) ev << " " << m;
                  return {ok, ev.str()};
              });

    run_claim(report, "disconnected-not-4-colorable",
              "with the two components sharing one outer region, the bridge-deleted graph still "
              "has no FUM-coloring with palette {1..4}",
              "every proper 4-coloring of fig1 - a4a2' with unique maxima on all interior faces "
              "violates the compound outer face",
              [&]() -> ClaimRun {
                  PlaneGraph g = gen_fig1();
                  PlaneGraph d = remove_edge(g, *g.find_label("a4"), *g.find_label("a2'"));
                  FaceCensus census = trace_faces(d);
                  int f1 = find_face_of_dart(census,
                                             {*d.find_label("a1"), *d.find_label("a2")});
                  int f2 = find_face_of_dart(census,
                                             {*d.find_label("a1'"), *d.find_label("a2'")});
                  CompoundFace shared = make_compound_face(census, {f1, f2});
                  std::vector<std::vector<VertexId>> interior;
                  for (int i = 0; i < static_cast<int>(census.faces.size()); ++i)
                      if (i != f1 && i != f2)
                          interior.push_back(census.faces[i].incident_vertices);
                  EnumerationOutcome out = enumerate_fum_colorings(
                      d, 4, interior,
                      [&](const Coloring& c) {
                          // a coloring passing the disconnected check would defeat the claim
                          return check_disconnected_fum(d, census, shared, c).ok();
                      },
                      search);
                  std::ostringstream ev;
                  if (out.stopper)
                      ev << "counterexample found: " << coloring_brief(*out.stopper);
                  else
                      ev << out.leaves
                         << " interior-FUM colorings enumerated, every one violates the shared "
                            "outer region";
                  return {!out.stopper && out.leaves > 0, ev.str()};
              });

    run_claim(report, "k4-cover",
              "census faces 0 and 1 of K4 jointly meet color 4 in every proper 4-coloring",
              "verify_cover_condition(K4, {0, 1}) = true by full enumeration",
              [&]() -> ClaimRun {
                  CoverReport r = verify_cover_condition(gen_k4(), {0, 1}, 4, 12, search);
                  std::ostringstream ev;
                  ev << r.colorings_examined << " proper 4-colorings enumerated";
                  if (!r.holds && r.witness) ev << "; defeated by " << coloring_brief(*r.witness);
                  return {r.holds, ev.str()};
              });

    run_claim(report, "composite-not-4-colorable",
              "K4 with a gadget in each of faces 0 and 1 admits no FUM-coloring with palette "
              "{1..4}",
              "solve_fum(gen_k4_composite({0,1}, 1), 4) = Exhausted",
              [&]() -> ClaimRun {
                  SolveOutcome out = solve_fum(gen_k4_composite({0, 1}, 1), 4, search);
                  std::ostringstream ev;
                  ev << (out.status == SolveStatus::Exhausted ? "exhausted" : "satisfiable")
                     << " after " << out.stats.nodes_expanded << " nodes";
                  return {out.status == SolveStatus::Exhausted, ev.str()};
              });

    run_claim(report, "sat-crosscheck",
              "the independent CNF route agrees on the two-gadget graph at palettes 4 and 5",
              "encode_fum(fig1, 4) is unsatisfiable; encode_fum(fig1, 5) is satisfiable and its "
              "model decodes to a coloring passing check_fum",
              [&]() -> ClaimRun {
                  PlaneGraph g = gen_fig1();
                  CnfFormula f4 = encode_fum(g, 4);
                  CnfFormula f5 = encode_fum(g, 5);
                  std::uint64_t budget =
                      std::min<std::uint64_t>(opts.budget_nodes, 50'000'000);
                  DpllResult r4 = dpll_solve(f4, budget);
                  DpllResult r5 = dpll_solve(f5, budget);
                  if (r4.status == DpllStatus::BudgetExceeded ||
                      r5.status == DpllStatus::BudgetExceeded)
                      throw ResourceLimitExceeded("dpll decision budget exhausted");
                  bool ok = r4.status == DpllStatus::Unsatisfiable &&
                            r5.status == DpllStatus::Satisfiable;
                  std::string decoded = "-";
                  if (r5.status == DpllStatus::Satisfiable) {
                      Coloring c = decode_model(f5, r5.model);
                      ok = ok && check_fum(g, c, trace_faces(g)).ok();
                      decoded = coloring_brief(c);
                  }
                  std::ostringstream ev;
                  ev << "palette 4: "
                     << (r4.status == DpllStatus::Unsatisfiable ? "UNSAT" : "SAT") << " ("
                     << r4.decisions << " decisions); palette 5: "
                     << (r5.status == DpllStatus::Satisfiable ? "SAT" : "UNSAT") << " ("
                     << r5.decisions << " decisions), decoded " << decoded;
                  return {ok, ev.str()};
              });

    return report;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    int index = 0;
    for (const ClaimResult& c : report.claims) {
        ++index;
        const char* status = c.status == ClaimResult::Status::Pass ? "PASS"
                             : c.status == ClaimResult::Status::Fail ? "FAIL"
                                                                     : "BUDGET-EXCEEDED";
        char header[160];
        std::snprintf(header, sizeof(header), "[%2d/%2d] %-28s %-15s %8.3fs", index,
                      static_cast<int>(report.claims.size()), c.id.c_str(), status,
                      c.wall_time_s);
        out << header << "\n";
        out << "        checks: " << c.description << "\n";
        out << "        claim:  " << c.anchor << "\n";
        out << "        found:  " << c.evidence << "\n";
    }
    out << "overall: " << (report.overall() ? "PASS" : "FAIL") << " (" << report.passed() << "/"
        << report.claims.size() << " claims)\n";
    return out.str();
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json doc;
    doc["overall"] = report.overall();
    doc["claims"] = nlohmann::json::array();
    for (const ClaimResult& c : report.claims) {
        nlohmann::json claim;
        claim["id"] = c.id;
        claim["description"] = c.description;
        claim["anchor"] = c.anchor;
        claim["evidence"] = c.evidence;
        claim["status"] = c.status == ClaimResult::Status::Pass ? "pass"
                          : c.status == ClaimResult::Status::Fail ? "fail"
                                                                  : "budget-exceeded";
        claim["wall_time_s"] = c.wall_time_s;
        doc["claims"].push_back(claim);
    }
    return doc.dump(2) + "\n";
}

}  // namespace fumlab
