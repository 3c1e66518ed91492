#include <fumlab/sat_encoder.hpp>

#include <algorithm>
#include <cassert>
#include <sstream>

namespace fumlab {

std::string VarMap::describe(int var) const {
    if (var >= 1 && var <= n * k) {
        int v = (var - 1) / k;
        int c = (var - 1) % k + 1;
        return "x(v" + std::to_string(v) + ",c" + std::to_string(c) + ")";
    }
    if (var > n * k && var <= total_vars()) {
        int rel = var - n * k - 1;
        return "m(f" + std::to_string(rel / k) + ",c" + std::to_string(rel % k + 1) + ")";
    }
    return "?" + std::to_string(var);
}

CnfFormula encode_fum(const PlaneGraph& g, int k) {
    if (k < 1) throw Error("palette size must be >= 1");
    FaceCensus census = trace_faces(g);

    CnfFormula f;
    f.var_map = VarMap{g.vertex_count(), k, static_cast<int>(census.faces.size())};
    for (const Face& face : census.faces) f.faces.push_back(face.incident_vertices);
    const VarMap& vm = f.var_map;
    const int n = g.vertex_count();

    f.comments.push_back("fum coloring of " + std::to_string(n) + " vertices, palette 1.." +
                         std::to_string(k));
    f.comments.push_back("x(v,c) = v*k + c for v in 0.." + std::to_string(n - 1) +
                         ", c in 1.." + std::to_string(k));
    f.comments.push_back("m(f,c) = " + std::to_string(n * k) + " + f*k + c for f in 0.." +
                         std::to_string(vm.num_faces - 1));
    for (int i = 0; i < vm.num_faces; ++i) {
        std::string line = "face " + std::to_string(i) + ":";
        for (VertexId v : f.faces[i]) line += " v" + std::to_string(v);
        f.comments.push_back(line);
    }

    auto add = [&](std::vector<int> clause) {
        assert(!clause.empty());
        f.clauses.push_back(std::move(clause));
    };

    // (1) + (2): each vertex gets exactly one color
    for (VertexId v = 0; v < n; ++v) {
        std::vector<int> alo;
        for (int c = 1; c <= k; ++c) alo.push_back(vm.x(v, c));
        add(alo);
        for (int c = 1; c <= k; ++c)
            for (int d = c + 1; d <= k; ++d) add({-vm.x(v, c), -vm.x(v, d)});
    }

    // (3): adjacent vertices differ
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v)
                for (int c = 1; c <= k; ++c) add({-vm.x(u, c), -vm.x(v, c)});

    // (4): face maxima
    for (int i = 0; i < vm.num_faces; ++i) {
        const auto& verts = f.faces[i];
        std::vector<int> alo;
        for (int c = 1; c <= k; ++c) alo.push_back(vm.m(i, c));
        add(alo);
        for (int c = 1; c <= k; ++c)
            for (int d = c + 1; d <= k; ++d) add({-vm.m(i, c), -vm.m(i, d)});
        for (int c = 1; c <= k; ++c) {
            for (VertexId v : verts)
                for (int d = c + 1; d <= k; ++d) add({-vm.m(i, c), -vm.x(v, d)});
            std::vector<int> witness{-vm.m(i, c)};
            for (VertexId v : verts) witness.push_back(vm.x(v, c));
            add(witness);
            for (std::size_t a = 0; a < verts.size(); ++a)
                for (std::size_t b = a + 1; b < verts.size(); ++b)
                    add({-vm.m(i, c), -vm.x(verts[a], c), -vm.x(verts[b], c)});
        }
    }

    assert(f.clauses.size() == encoding_clause_count(g, k));
    return f;
}

std::size_t encoding_clause_count(const PlaneGraph& g, int k) {
    FaceCensus census = trace_faces(g);
    const std::size_t n = g.vertex_count();
    const std::size_t e = g.edge_count();
    const std::size_t pairs_k = static_cast<std::size_t>(k) * (k - 1) / 2;
    std::size_t count = n + n * pairs_k + e * k;
    for (const Face& face : census.faces) {
        const std::size_t s = face.incident_vertices.size();
        count += 1 + pairs_k;                    // exactly-one m
        count += s * pairs_k;                    // no vertex above the max
        count += k;                              // some vertex attains it
        count += static_cast<std::size_t>(k) * (s * (s - 1) / 2);  // at most one does
    }
    return count;
}

std::string write_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    for (const std::string& c : f.comments) out << "c " << c << "\n";
    out << "p cnf " << f.var_map.total_vars() << " " << f.clauses.size() << "\n";
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

std::vector<bool> read_model(const std::string& text, int total_vars) {
    std::vector<int> sign(total_vars + 1, 0);
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::istringstream ls(raw);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "s") {
            std::string status;
            ls >> status;
            if (status == "UNSATISFIABLE")
                throw ModelParseError("solver output declares the formula unsatisfiable");
            continue;
        }
        std::istringstream lits(first == "v" ? raw.substr(raw.find('v') + 1) : raw);
        std::string tok;
        while (lits >> tok) {
            int lit;
            try {
                std::size_t used = 0;
                lit = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ModelParseError("bad literal token '" + tok + "'");
            }
            if (lit == 0) continue;  // assignment terminator
            int var = std::abs(lit);
            if (var > total_vars)
                throw ModelParseError("literal " + tok + " exceeds the " +
                                      std::to_string(total_vars) + "-variable formula");
            int s = lit > 0 ? 1 : -1;
            if (sign[var] != 0 && sign[var] != s)
                throw ModelParseError("contradictory values for variable " + std::to_string(var));
            sign[var] = s;
        }
    }

    std::vector<bool> model(total_vars + 1, false);
    for (int v = 1; v <= total_vars; ++v) {
        if (sign[v] == 0) throw IncompleteModel("variable " + std::to_string(v) + " unassigned");
        model[v] = sign[v] > 0;
    }
    return model;
}

Coloring decode_model(const CnfFormula& f, const std::vector<bool>& assignment) {
    const VarMap& vm = f.var_map;
    if (static_cast<int>(assignment.size()) != vm.total_vars() + 1)
        throw IncompleteModel("assignment covers " + std::to_string(assignment.size()) +
                              " slots, formula has " + std::to_string(vm.total_vars()) +
                              " variables");

    Coloring coloring{std::vector<int>(vm.n, 0), vm.k};
    for (VertexId v = 0; v < vm.n; ++v) {
        for (int c = 1; c <= vm.k; ++c) {
            if (!assignment[vm.x(v, c)]) continue;
            if (coloring.colors[v] != 0)
                throw AmbiguousVertexColor("v" + std::to_string(v) + " has both color " +
                                           std::to_string(coloring.colors[v]) + " and " +
                                           std::to_string(c));
            coloring.colors[v] = c;
        }
        if (coloring.colors[v] == 0)
            throw NotAModel("v" + std::to_string(v) + " has no color");
    }

    for (const auto& clause : f.clauses) {
        bool satisfied = false;
        for (int lit : clause)
            if (assignment[std::abs(lit)] == (lit > 0)) {
                satisfied = true;
                break;
            }
        if (!satisfied) {
            std::string text;
            for (int lit : clause) text += std::to_string(lit) + " ";
            throw NotAModel("clause falsified: " + text + "0");
        }
    }

    // m-variables must agree with the face maxima the coloring realizes.
    for (int i = 0; i < vm.num_faces; ++i) {
        int mx = 0;
        for (VertexId v : f.faces[i]) mx = std::max(mx, coloring.colors[v]);
        for (int c = 1; c <= vm.k; ++c)
            if (assignment[vm.m(i, c)] != (c == mx))
                throw NotAModel("m-variable of face " + std::to_string(i) +
                                " disagrees with the realized maximum " + std::to_string(mx));
    }
    return coloring;
}

// ---------------------------------------------------------------------------
// DPLL
// ---------------------------------------------------------------------------

namespace {

struct DpllState {
    const std::vector<std::vector<int>>& clauses;
    std::vector<int> value;                      // per var: 0 unknown, +1 true, -1 false
    std::vector<std::vector<int>> occurrences;   // clause ids per literal index
    std::vector<int> num_false;                  // per clause
    std::vector<int> num_true;
    std::vector<int> trail;
    std::size_t prop_head = 0;
    bool seeded = false;
    std::uint64_t decisions = 0;

    explicit DpllState(const CnfFormula& f)
        : clauses(f.clauses),
          value(f.var_map.total_vars() + 1, 0),
          occurrences(2 * (f.var_map.total_vars() + 1)),
          num_false(f.clauses.size(), 0),
          num_true(f.clauses.size(), 0) {
        for (std::size_t i = 0; i < clauses.size(); ++i)
            for (int lit : clauses[i]) occurrences[index(lit)].push_back(static_cast<int>(i));
    }

    std::size_t index(int lit) const {
        return 2 * static_cast<std::size_t>(std::abs(lit)) + (lit > 0 ? 0 : 1);
    }

    // Returns false on conflict.
    bool assign(int lit) {
        int var = std::abs(lit);
        int val = lit > 0 ? 1 : -1;
        if (value[var] != 0) return value[var] == val;
        value[var] = val;
        trail.push_back(var);
        for (int ci : occurrences[index(lit)]) ++num_true[ci];
        bool ok = true;
        for (int ci : occurrences[index(-lit)]) {
            ++num_false[ci];
            if (num_true[ci] == 0 && num_false[ci] == static_cast<int>(clauses[ci].size()))
                ok = false;
        }
        return ok;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            int var = trail.back();
            trail.pop_back();
            int lit = value[var] > 0 ? var : -var;
            for (int ci : occurrences[index(lit)]) --num_true[ci];
            for (int ci : occurrences[index(-lit)]) --num_false[ci];
            value[var] = 0;
        }
        prop_head = mark;
    }

    // Returns false on conflict: the clause stays open with one unassigned
    // literal at most.
    bool propagate_clause(int ci) {
        if (num_true[ci] > 0) return true;
        int open = static_cast<int>(clauses[ci].size()) - num_false[ci];
        if (open == 0) return false;
        if (open == 1) {
            for (int lit : clauses[ci])
                if (value[std::abs(lit)] == 0) return assign(lit);
        }
        return true;
    }

    // Unit propagation to fixpoint from the trail; false on conflict.
    bool propagate() {
        if (!seeded) {
            seeded = true;
            for (std::size_t ci = 0; ci < clauses.size(); ++ci)
                if (!propagate_clause(static_cast<int>(ci))) return false;
        }
        while (prop_head < trail.size()) {
            int var = trail[prop_head++];
            int falsified = value[var] > 0 ? -var : var;
            for (int ci : occurrences[index(falsified)])
                if (!propagate_clause(ci)) return false;
        }
        return true;
    }

    int pick_branch_var() const {
        for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
            if (num_true[ci] > 0) continue;
            for (int lit : clauses[ci])
                if (value[std::abs(lit)] == 0) return std::abs(lit);
        }
        return 0;  // every clause satisfied
    }
};

bool dpll(DpllState& s, std::uint64_t budget) {
    if (!s.propagate()) return false;
    int var = s.pick_branch_var();
    if (var == 0) return true;
    if (++s.decisions > budget) throw TooLargeForEnumeration("dpll decision budget exhausted");
    for (int val : {1, -1}) {
        std::size_t mark = s.trail.size();
        if (s.assign(val > 0 ? var : -var) && dpll(s, budget)) return true;
        s.undo_to(mark);
    }
    return false;
}

}  // namespace

DpllResult dpll_solve(const CnfFormula& f, std::uint64_t decision_budget) {
    DpllState state(f);
    DpllResult result;
    try {
        bool sat = dpll(state, decision_budget);
        result.decisions = state.decisions;
        if (sat) {
            result.status = DpllStatus::Satisfiable;
            result.model.assign(f.var_map.total_vars() + 1, false);
            // Unconstrained variables default to false.
            for (int v = 1; v <= f.var_map.total_vars(); ++v) result.model[v] = state.value[v] > 0;
        } else {
            result.status = DpllStatus::Unsatisfiable;
        }
    } catch (const TooLargeForEnumeration&) {
        result.status = DpllStatus::BudgetExceeded;
        result.decisions = state.decisions;
    }
    return result;
}

}  // namespace fumlab
