#pragma once

// CNF encoding of "g has a FUM-coloring with palette {1..k}" — an
// independent decision path cross-checking the backtracking solver.
//
// Variable map (1-based, dense):
//   x(v, c) = v*k + c            "vertex v has color c"
//   m(f, c) = n*k + f*k + c      "face f's maximum color is c"
// Clause groups:
//   (1) per vertex: at least one color
//   (2) per vertex: at most one color, pairwise
//   (3) per edge and color: endpoints differ
//   (4) per face f: exactly one m(f,.); m(f,c) -> no face vertex above c;
//       m(f,c) -> some face vertex has c; m(f,c) -> at most one does, pairwise
// At-most-one is the naive pairwise encoding throughout; the instances are
// tiny and the clause counts stay closed-form.

#include <fumlab/fum.hpp>
#include <fumlab/plane_graph.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fumlab {

struct VarMap {
    int n = 0;          // vertices
    int k = 0;          // palette size
    int num_faces = 0;

    int x(VertexId v, int c) const { return v * k + c; }
    int m(int f, int c) const { return n * k + f * k + c; }
    int total_vars() const { return (n + num_faces) * k; }

    /// Human-readable name of a variable index.
    std::string describe(int var) const;
};

struct CnfFormula {
    std::vector<std::vector<int>> clauses;  // DIMACS literals, no terminating 0
    VarMap var_map;
    std::vector<std::string> comments;      // provenance, emitted as 'c' lines
    std::vector<std::vector<VertexId>> faces;  // distinct incident vertices per face
};

CnfFormula encode_fum(const PlaneGraph& g, int k);

/// Exact clause count of encode_fum(g, k), computed without encoding.
std::size_t encoding_clause_count(const PlaneGraph& g, int k);

/// DIMACS text: 'c' comment lines, 'p cnf <vars> <clauses>', then one
/// 0-terminated clause per line.
std::string write_dimacs(const CnfFormula& f);

/// Parses a total assignment from raw literal lists or solver output
/// ('s ...' status line, 'v' value lines, 0-terminated). Slot 0 of the
/// result is unused.
std::vector<bool> read_model(const std::string& text, int total_vars);

/// Extracts the coloring from a satisfying assignment. Rejects assignments
/// with several colors on one vertex (AmbiguousVertexColor), a falsified
/// clause or m-variables disagreeing with the actual face maxima (NotAModel).
Coloring decode_model(const CnfFormula& f, const std::vector<bool>& assignment);

// Minimal complete checker (DPLL with unit propagation) for test-scale
// equisatisfiability runs. Not a production SAT solver.

enum class DpllStatus { Satisfiable, Unsatisfiable, BudgetExceeded };

struct DpllResult {
    DpllStatus status = DpllStatus::BudgetExceeded;
    std::vector<bool> model;  // valid when Satisfiable
    std::uint64_t decisions = 0;
};

DpllResult dpll_solve(const CnfFormula& f, std::uint64_t decision_budget = 50'000'000);

}  // namespace fumlab
