#pragma once

// Facial unique-maximum (FUM) colorings.
//
// A coloring with palette {1..k} is a FUM-coloring when it is proper and on
// every face the maximum color over the face's *distinct* incident vertices
// occurs on exactly one of them. Colors are ordered naturals; nothing here
// may assume permutation symmetry between colors (swapping two colors can
// break the unique-maximum property).
//
// solve_fum decides FUM-k-colorability by complete backtracking search:
//   - vertices are ordered by a face-connected traversal so that face
//     constraints close early;
//   - colors are tried in increasing order; the first certificate found is
//     the canonical one (lexicographically first along the search order);
//   - pruning: properness on assignment, unique-maximum on face completion,
//     and (optional, default on) pruning a face that already holds two
//     vertices of the palette maximum. The Satisfiable/Exhausted answer is
//     the same with the strong rule off.
// The search may be split across workers by the first vertex's color; the
// reported status and certificate never depend on scheduling.

#include <fumlab/generators.hpp>
#include <fumlab/plane_graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fumlab {

struct Coloring {
    std::vector<int> colors;  // colors[v] in [1, palette]
    int palette = 0;

    bool operator==(const Coloring&) const = default;
};

struct FumViolation {
    int face = 0;  // census face id; -1 stands for a compound face
    int max_color = 0;
    int multiplicity = 0;

    bool operator==(const FumViolation&) const = default;
};

struct CheckReport {
    std::vector<std::pair<VertexId, VertexId>> proper_violations;
    std::vector<FumViolation> fum_violations;

    bool ok() const { return proper_violations.empty() && fum_violations.empty(); }
};

enum class SolveStatus { Satisfiable, Exhausted };

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t prunes_by_properness = 0;
    std::uint64_t prunes_by_face_max = 0;
    double wall_time_s = 0.0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Exhausted;
    std::optional<Coloring> certificate;  // present iff Satisfiable
    SearchStats stats;
};

struct SearchOptions {
    bool strong_pruning = true;
    std::uint64_t node_budget = 1'000'000'000;
    double time_budget_s = 600.0;
    int threads = 1;  // workers for the root color split
};

struct GadgetReport {
    bool holds = false;
    std::uint64_t colorings_examined = 0;
    std::optional<Coloring> witness;  // present iff !holds
};

struct CoverReport {
    bool holds = false;
    std::uint64_t colorings_examined = 0;
    std::optional<Coloring> witness;  // a proper coloring defeating the condition
};

/// The shared outer region of co-embedded components of a disconnected
/// graph, treated as a single face by the FUM predicate.
struct CompoundFace {
    std::vector<int> member_faces;             // census face ids, distinct components
    std::vector<VertexId> incident_vertices;   // union, sorted
};

// ---- checking ----

/// All monochromatic edges (u < v), ordered. Throws PaletteMismatch when
/// the coloring does not cover the graph or leaves the palette.
std::vector<std::pair<VertexId, VertexId>> check_proper(const PlaneGraph& g, const Coloring& c);

CheckReport check_fum(const PlaneGraph& g, const Coloring& c, const FaceCensus& census);

CompoundFace make_compound_face(const FaceCensus& census, const std::vector<int>& member_faces);

/// FUM check for a disconnected co-embedded graph: every census face except
/// the compound's members, plus the compound region itself (face id -1 in
/// the report).
CheckReport check_disconnected_fum(const PlaneGraph& g, const FaceCensus& census,
                                   const CompoundFace& shared, const Coloring& c);

// ---- solving ----

SolveOutcome solve_fum(const PlaneGraph& g, int k, const SearchOptions& opts = {});

/// Smallest k admitting a FUM-coloring, plus the canonical certificate.
/// Starts from a clique-based lower bound and iterates k upward.
std::pair<int, Coloring> chi_fum(const PlaneGraph& g, const SearchOptions& opts = {});

// ---- verification by enumeration ----

/// Checks that every proper {1..palette}-coloring of g whose faces other
/// than the designated outer face all have a unique maximum puts
/// forced_color on some vertex of the outer face. Requires an outer
/// designation. colorings_examined counts the qualifying colorings seen.
GadgetReport verify_gadget_forcing(const PlaneGraph& g, int palette = 4, int forced_color = 4,
                                   const SearchOptions& opts = {});
GadgetReport verify_gadget_forcing(const GadgetHandle& h, int palette = 4, int forced_color = 4,
                                   const SearchOptions& opts = {});

/// True iff every proper {1..palette}-coloring of g puts the palette
/// maximum on a vertex incident to some face of face_set. Exhaustive;
/// guarded by max_n (TooLargeForEnumeration beyond it).
CoverReport verify_cover_condition(const PlaneGraph& g, const std::vector<int>& face_set,
                                   int palette = 4, int max_n = 12,
                                   const SearchOptions& opts = {});

/// Ground-truth chi_fum by enumerating all k^n colorings, no pruning beyond
/// iterating the palette upward. Guarded by max_n.
int brute_force_chi_fum(const PlaneGraph& g, int max_n = 8);

// ---- enumeration core ----

/// Return true to stop the search; the stopping coloring is reported back.
using StopPredicate = std::function<bool(const Coloring&)>;

struct EnumerationOutcome {
    std::optional<Coloring> stopper;  // first coloring (in search order) the predicate stopped on
    std::uint64_t leaves = 0;         // complete valid colorings reached
    SearchStats stats;
};

/// Enumerates every proper coloring of g with palette {1..k} in which each
/// vertex set of unique_max_faces has a unique maximum, invoking stop_when
/// on each. Deterministic; the root color split runs branches to their own
/// stop, so leaves and stats do not depend on opts.threads. stop_when may
/// be called from several workers at once when opts.threads > 1.
EnumerationOutcome enumerate_fum_colorings(const PlaneGraph& g, int k,
                                           const std::vector<std::vector<VertexId>>& unique_max_faces,
                                           const StopPredicate& stop_when,
                                           const SearchOptions& opts = {});

// ---- coloring files ----
//
//   palette <k>
//   v<i> <color>        one line per vertex

Coloring parse_coloring(const std::string& text);
std::string serialize_coloring(const Coloring& c);

}  // namespace fumlab
