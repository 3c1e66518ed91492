// Scratch runner: computes ground-truth values with the brute-force oracle
// so they can be frozen into the regression tests. Not installed.

#include <fumlab/fum.hpp>
#include <fumlab/generators.hpp>

#include <cstdio>

using namespace fumlab;

int main() {
    struct Entry {
        const char* name;
        PlaneGraph g;
    };
    std::vector<Entry> suite;
    for (int n = 3; n <= 7; ++n)
        suite.push_back({"", gen_cycle(n)});
    suite[0].name = "C3";
    suite[1].name = "C4";
    suite[2].name = "C5";
    suite[3].name = "C6";
    suite[4].name = "C7";
    suite.push_back({"P2", gen_path(2)});
    suite.push_back({"P3", gen_path(3)});
    suite.push_back({"P4", gen_path(4)});
    suite.push_back({"P5", gen_path(5)});
    suite.push_back({"K4", gen_k4()});
    suite.push_back({"W4", gen_wheel(4)});
    suite.push_back({"W5", gen_wheel(5)});
    suite.push_back({"H1", gen_gadget(1).graph});

    for (const auto& [name, g] : suite) {
        int oracle = brute_force_chi_fum(g);
        auto [solver, cert] = chi_fum(g);
        std::printf("%-3s  n=%2d e=%2d  oracle=%d solver=%d %s\n", name, g.vertex_count(),
                    g.edge_count(), oracle, solver, oracle == solver ? "" : "  <-- MISMATCH");
    }

    // Interior-FUM coloring count of H_1 (drives the forcing claims).
    GadgetReport r1 = verify_gadget_forcing(gen_gadget(1));
    std::printf("H1 forcing: holds=%d colorings=%llu\n", r1.holds ? 1 : 0,
                (unsigned long long)r1.colorings_examined);

    GadgetReport r2 = verify_gadget_forcing(gen_gadget(2));
    std::printf("H2 forcing: holds=%d colorings=%llu\n", r2.holds ? 1 : 0,
                (unsigned long long)r2.colorings_examined);

    // fig1 at palettes 4 and 5.
    PlaneGraph fig1 = gen_fig1();
    SolveOutcome s4 = solve_fum(fig1, 4);
    std::printf("fig1@4: %s nodes=%llu\n",
                s4.status == SolveStatus::Exhausted ? "exhausted" : "SAT",
                (unsigned long long)s4.stats.nodes_expanded);
    SolveOutcome s5 = solve_fum(fig1, 5);
    std::printf("fig1@5: %s nodes=%llu\n",
                s5.status == SolveStatus::Satisfiable ? "SAT" : "exhausted",
                (unsigned long long)s5.stats.nodes_expanded);
    if (s5.certificate) {
        std::printf("fig1@5 certificate:");
        for (int c : s5.certificate->colors) std::printf(" %d", c);
        std::printf("\n");
    }

    PlaneGraph composite = gen_k4_composite({0, 1}, 1);
    std::printf("composite: V=%d E=%d\n", composite.vertex_count(), composite.edge_count());
    SolveOutcome sc = solve_fum(composite, 4);
    std::printf("composite@4: %s nodes=%llu time=%.3fs\n",
                sc.status == SolveStatus::Exhausted ? "exhausted" : "SAT",
                (unsigned long long)sc.stats.nodes_expanded, sc.stats.wall_time_s);

    return 0;
}

