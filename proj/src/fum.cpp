#include <fumlab/fum.hpp>

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <climits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fumlab {

namespace {

void validate_coloring(const PlaneGraph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw PaletteMismatch("coloring covers " + std::to_string(c.colors.size()) +
                              " vertices, graph has " + std::to_string(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (c.colors[v] < 1 || c.colors[v] > c.palette)
            throw PaletteMismatch("v" + std::to_string(v) + " has color " +
                                  std::to_string(c.colors[v]) + " outside palette {1.." +
                                  std::to_string(c.palette) + "}");
}

// max color and its multiplicity over a set of distinct vertices
std::pair<int, int> face_max(const std::vector<VertexId>& verts, const std::vector<int>& colors) {
    int mx = 0, mult = 0;
    for (VertexId v : verts) {
        if (colors[v] > mx) {
            mx = colors[v];
            mult = 1;
        } else if (colors[v] == mx) {
            ++mult;
        }
    }
    return {mx, mult};
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> check_proper(const PlaneGraph& g, const Coloring& c) {
    validate_coloring(g, c);
    std::vector<std::pair<VertexId, VertexId>> bad;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v && c.colors[u] == c.colors[v]) bad.emplace_back(u, v);
    return bad;
}

CheckReport check_fum(const PlaneGraph& g, const Coloring& c, const FaceCensus& census) {
    CheckReport report;
    report.proper_violations = check_proper(g, c);
    for (int f = 0; f < static_cast<int>(census.faces.size()); ++f) {
        auto [mx, mult] = face_max(census.faces[f].incident_vertices, c.colors);
        if (mult >= 2) report.fum_violations.push_back({f, mx, mult});
    }
    return report;
}

CompoundFace make_compound_face(const FaceCensus& census, const std::vector<int>& member_faces) {
    CompoundFace cf;
    std::vector<int> seen_components;
    for (int f : member_faces) {
        if (f < 0 || f >= static_cast<int>(census.faces.size()))
            throw FaceNotFound("compound member face " + std::to_string(f) + " does not exist");
        int comp = census.faces[f].component;
        if (std::find(seen_components.begin(), seen_components.end(), comp) !=
            seen_components.end())
            throw Error("compound face members must come from distinct components");
        seen_components.push_back(comp);
        cf.member_faces.push_back(f);
        cf.incident_vertices.insert(cf.incident_vertices.end(),
                                    census.faces[f].incident_vertices.begin(),
                                    census.faces[f].incident_vertices.end());
    }
    std::sort(cf.incident_vertices.begin(), cf.incident_vertices.end());
    cf.incident_vertices.erase(
        std::unique(cf.incident_vertices.begin(), cf.incident_vertices.end()),
        cf.incident_vertices.end());
    return cf;
}

CheckReport check_disconnected_fum(const PlaneGraph& g, const FaceCensus& census,
                                   const CompoundFace& shared, const Coloring& c) {
    CheckReport report;
    report.proper_violations = check_proper(g, c);
    for (int f = 0; f < static_cast<int>(census.faces.size()); ++f) {
        if (std::find(shared.member_faces.begin(), shared.member_faces.end(), f) !=
            shared.member_faces.end())
            continue;  // replaced by the compound region
        auto [mx, mult] = face_max(census.faces[f].incident_vertices, c.colors);
        if (mult >= 2) report.fum_violations.push_back({f, mx, mult});
    }
    auto [mx, mult] = face_max(shared.incident_vertices, c.colors);
    if (mult >= 2) report.fum_violations.push_back({-1, mx, mult});
    return report;
}

// ---------------------------------------------------------------------------
// enumeration core
// ---------------------------------------------------------------------------

namespace {

struct BudgetHit {};

struct SharedBudget {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t node_budget = 0;
    std::chrono::steady_clock::time_point deadline;
};

struct SearchContext {
    int n = 0;
    int k = 0;
    bool strong = true;
    std::vector<std::vector<VertexId>> adj;
    std::vector<std::vector<VertexId>> face_verts;  // distinct vertices per constrained face
    std::vector<std::vector<int>> vertex_faces;     // face ids per vertex
    std::vector<int> order;                         // face-connected traversal
};

// Orders vertices so each one shares a constrained face with an earlier one
// whenever possible, preferring the vertex whose most nearly complete face
// has the fewest unplaced vertices. Ties and fresh components fall back to
// the smallest index.
std::vector<int> face_connected_order(const SearchContext& ctx) {
    const int n = ctx.n;
    std::vector<char> placed(n, 0);
    std::vector<int> unplaced_in_face(ctx.face_verts.size());
    for (std::size_t f = 0; f < ctx.face_verts.size(); ++f)
        unplaced_in_face[f] = static_cast<int>(ctx.face_verts[f].size());

    std::vector<int> order;
    order.reserve(n);
    auto place = [&](int v) {
        placed[v] = 1;
        for (int f : ctx.vertex_faces[v]) --unplaced_in_face[f];
        order.push_back(v);
    };

    while (static_cast<int>(order.size()) < n) {
        int best = -1;
        int best_score = INT_MAX;
        if (!order.empty()) {
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                int score = INT_MAX;
                for (int f : ctx.vertex_faces[v]) {
                    int face_size = static_cast<int>(ctx.face_verts[f].size());
                    if (unplaced_in_face[f] == face_size) continue;  // no placed vertex yet
                    score = std::min(score, unplaced_in_face[f]);
                }
                if (score < best_score) {
                    best_score = score;
                    best = v;
                }
            }
        }
        if (best == -1) {
            for (int v = 0; v < n; ++v)
                if (!placed[v]) {
                    best = v;
                    break;
                }
        }
        place(best);
    }
    return order;
}

struct BranchResult {
    std::optional<Coloring> stopper;
    bool exceeded = false;
    std::exception_ptr error;
    std::uint64_t leaves = 0;
    std::uint64_t nodes = 0;
    std::uint64_t prune_proper = 0;
    std::uint64_t prune_face = 0;
};

class BranchSearch {
  public:
    BranchSearch(const SearchContext& ctx, SharedBudget& budget, const StopPredicate& stop)
        : ctx_(ctx), budget_(budget), stop_(stop) {
        color_.assign(ctx_.n, 0);
        face_count_.assign(ctx_.face_verts.size(), std::vector<int>(ctx_.k, 0));
        face_colored_.assign(ctx_.face_verts.size(), 0);
    }

    BranchResult run(int pinned_first_color) {
        pinned_ = pinned_first_color;
        try {
            dfs(0);
        } catch (const BudgetHit&) {
            result_.exceeded = true;
        } catch (...) {
            result_.error = std::current_exception();
        }
        return std::move(result_);
    }

  private:
    void count_node() {
        ++result_.nodes;
        if (budget_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget_.node_budget)
            throw BudgetHit{};
        if ((result_.nodes & 0xfff) == 0 &&
            std::chrono::steady_clock::now() > budget_.deadline)
            throw BudgetHit{};
    }

    // 0 = ok, 1 = properness conflict, 2 = face pruned
    int try_assign(int v, int c) {
        for (VertexId u : ctx_.adj[v])
            if (color_[u] == c) return 1;
        const auto& faces = ctx_.vertex_faces[v];
        for (std::size_t j = 0; j < faces.size(); ++j) {
            const int f = faces[j];
            ++face_count_[f][c - 1];
            ++face_colored_[f];
            bool bad = false;
            // Two palette-maximum vertices on one face can never regain a
            // unique maximum; prune without waiting for completion.
            if (ctx_.strong && c == ctx_.k && face_count_[f][c - 1] >= 2) bad = true;
            if (!bad && face_colored_[f] == static_cast<int>(ctx_.face_verts[f].size())) {
                for (int cc = ctx_.k; cc >= 1; --cc) {
                    int cnt = face_count_[f][cc - 1];
                    if (cnt > 0) {
                        bad = cnt >= 2;
                        break;
                    }
                }
            }
            if (bad) {
                for (std::size_t r = 0; r <= j; ++r) {
                    --face_count_[faces[r]][c - 1];
                    --face_colored_[faces[r]];
                }
                return 2;
            }
        }
        color_[v] = c;
        return 0;
    }

    void unassign(int v, int c) {
        color_[v] = 0;
        for (int f : ctx_.vertex_faces[v]) {
            --face_count_[f][c - 1];
            --face_colored_[f];
        }
    }

    bool dfs(std::size_t depth) {  // true = stopped by the predicate
        if (depth == ctx_.order.size()) {
            ++result_.leaves;
            Coloring c{color_, ctx_.k};
            if (stop_(c)) {
                result_.stopper = std::move(c);
                return true;
            }
            return false;
        }
        const int v = ctx_.order[depth];
        int lo = 1, hi = ctx_.k;
        if (depth == 0 && pinned_ > 0) lo = hi = pinned_;
        for (int c = lo; c <= hi; ++c) {
            count_node();
            int res = try_assign(v, c);
            if (res == 1) {
                ++result_.prune_proper;
                continue;
            }
            if (res == 2) {
                ++result_.prune_face;
                continue;
            }
            if (dfs(depth + 1)) return true;
            unassign(v, c);
        }
        return false;
    }

    const SearchContext& ctx_;
    SharedBudget& budget_;
    const StopPredicate& stop_;
    int pinned_ = 0;
    std::vector<int> color_;
    std::vector<std::vector<int>> face_count_;
    std::vector<int> face_colored_;
    BranchResult result_;
};

}  // namespace

EnumerationOutcome enumerate_fum_colorings(const PlaneGraph& g, int k,
                                           const std::vector<std::vector<VertexId>>& unique_max_faces,
                                           const StopPredicate& stop_when,
                                           const SearchOptions& opts) {
    if (k < 1) throw Error("palette size must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    EnumerationOutcome out;
    if (g.vertex_count() == 0) {
        out.leaves = 1;
        Coloring empty{{}, k};
        if (stop_when(empty)) out.stopper = empty;
        out.stats.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    }

    SearchContext ctx;
    ctx.n = g.vertex_count();
    ctx.k = k;
    ctx.strong = opts.strong_pruning;
    ctx.adj = g.rotations();
    ctx.vertex_faces.assign(ctx.n, {});
    for (const auto& verts : unique_max_faces) {
        std::vector<VertexId> distinct = verts;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (!distinct.empty() && (distinct.front() < 0 || distinct.back() >= ctx.n))
            throw IndexOutOfRange("face vertex outside graph");
        int id = static_cast<int>(ctx.face_verts.size());
        for (VertexId v : distinct) ctx.vertex_faces[v].push_back(id);
        ctx.face_verts.push_back(std::move(distinct));
    }
    ctx.order = face_connected_order(ctx);

    SharedBudget budget;
    budget.node_budget = opts.node_budget;
    budget.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(opts.time_budget_s));

    // Root split on the first vertex's color. Every branch runs to its own
    // stop, so the merged leaves and stats are scheduling-independent.
    std::vector<BranchResult> results(k);
    const int workers = std::max(1, std::min(opts.threads, k));
    if (workers == 1) {
        for (int c = 1; c <= k; ++c)
            results[c - 1] = BranchSearch(ctx, budget, stop_when).run(c);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                for (int c = w + 1; c <= k; c += workers)
                    results[c - 1] = BranchSearch(ctx, budget, stop_when).run(c);
            });
        }
        for (auto& t : pool) t.join();
    }

    for (const BranchResult& r : results)
        if (r.error) std::rethrow_exception(r.error);

    for (const BranchResult& r : results) {
        out.leaves += r.leaves;
        out.stats.nodes_expanded += r.nodes;
        out.stats.prunes_by_properness += r.prune_proper;
        out.stats.prunes_by_face_max += r.prune_face;
    }
    out.stats.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    // Branches are ordered by their pinned color; the first stopper is the
    // canonical one, but only if no earlier branch was cut short.
    for (const BranchResult& r : results) {
        if (r.exceeded)
            throw ResourceLimitExceeded("search budget exhausted after " +
                                        std::to_string(out.stats.nodes_expanded) + " nodes");
        if (r.stopper) {
            out.stopper = r.stopper;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// solving
// ---------------------------------------------------------------------------

SolveOutcome solve_fum(const PlaneGraph& g, int k, const SearchOptions& opts) {
    FaceCensus census = trace_faces(g);
    std::vector<std::vector<VertexId>> faces;
    faces.reserve(census.faces.size());
    for (const Face& f : census.faces) faces.push_back(f.incident_vertices);

    EnumerationOutcome out =
        enumerate_fum_colorings(g, k, faces, [](const Coloring&) { return true; }, opts);

    SolveOutcome result;
    result.stats = out.stats;
    if (out.stopper) {
        result.status = SolveStatus::Satisfiable;
        result.certificate = std::move(out.stopper);
        if (!check_fum(g, *result.certificate, census).ok())
            throw std::logic_error("solve_fum produced a certificate that fails check_fum");
    } else {
        result.status = SolveStatus::Exhausted;
    }
    return result;
}

namespace {

// Largest clique size found among sizes 2..4; a valid lower bound for the
// proper chromatic number and hence for chi_fum.
int clique_lower_bound(const PlaneGraph& g) {
    if (g.vertex_count() == 0) return 0;
    int lb = 1;
    if (g.edge_count() > 0) lb = 2;
    for (VertexId u = 0; u < g.vertex_count() && lb < 4; ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (v <= u) continue;
            std::vector<VertexId> common;
            for (VertexId w : g.neighbors(u))
                if (w > v && g.has_edge(v, w)) common.push_back(w);
            if (!common.empty()) lb = std::max(lb, 3);
            for (std::size_t i = 0; i < common.size() && lb < 4; ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (g.has_edge(common[i], common[j])) {
                        lb = 4;
                        break;
                    }
        }
    }
    return lb;
}

}  // namespace

std::pair<int, Coloring> chi_fum(const PlaneGraph& g, const SearchOptions& opts) {
    if (g.vertex_count() == 0) return {0, Coloring{{}, 0}};
    int lb = std::max(1, clique_lower_bound(g));
    for (int k = lb;; ++k) {
        SolveOutcome out = solve_fum(g, k, opts);
        if (out.status == SolveStatus::Satisfiable) return {k, *out.certificate};
        // A coloring by n distinct colors is always facial unique-maximum.
        assert(k < g.vertex_count());
    }
}

// ---------------------------------------------------------------------------
// verification by enumeration
// ---------------------------------------------------------------------------

GadgetReport verify_gadget_forcing(const PlaneGraph& g, int palette, int forced_color,
                                   const SearchOptions& opts) {
    FaceCensus census = trace_faces(g);
    if (!census.outer_face_index)
        throw Error("verify_gadget_forcing needs a designated outer face");
    const int outer = *census.outer_face_index;

    std::vector<std::vector<VertexId>> interior;
    for (int f = 0; f < static_cast<int>(census.faces.size()); ++f)
        if (f != outer) interior.push_back(census.faces[f].incident_vertices);
    const std::vector<VertexId>& outer_verts = census.faces[outer].incident_vertices;

    EnumerationOutcome out = enumerate_fum_colorings(
        g, palette, interior,
        [&](const Coloring& c) {
            for (VertexId v : outer_verts)
                if (c.colors[v] == forced_color) return false;
            return true;  // interior-FUM coloring avoiding the forced color: witness
        },
        opts);

    GadgetReport report;
    report.holds = !out.stopper.has_value();
    report.colorings_examined = out.leaves;
    report.witness = std::move(out.stopper);
    return report;
}

GadgetReport verify_gadget_forcing(const GadgetHandle& h, int palette, int forced_color,
                                   const SearchOptions& opts) {
    return verify_gadget_forcing(h.graph, palette, forced_color, opts);
}

CoverReport verify_cover_condition(const PlaneGraph& g, const std::vector<int>& face_set,
                                   int palette, int max_n, const SearchOptions& opts) {
    if (g.vertex_count() > max_n)
        throw TooLargeForEnumeration("cover-condition enumeration is guarded at " +
                                     std::to_string(max_n) + " vertices");
    FaceCensus census = trace_faces(g);
    std::vector<VertexId> covered;
    for (int f : face_set) {
        if (f < 0 || f >= static_cast<int>(census.faces.size()))
            throw FaceNotFound("face set references face " + std::to_string(f));
        covered.insert(covered.end(), census.faces[f].incident_vertices.begin(),
                       census.faces[f].incident_vertices.end());
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());

    EnumerationOutcome out = enumerate_fum_colorings(
        g, palette, {},
        [&](const Coloring& c) {
            for (VertexId v : covered)
                if (c.colors[v] == palette) return false;
            return true;  // proper coloring keeping the max color off the face set
        },
        opts);

    CoverReport report;
    report.holds = !out.stopper.has_value();
    report.colorings_examined = out.leaves;
    report.witness = std::move(out.stopper);
    return report;
}

int brute_force_chi_fum(const PlaneGraph& g, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n)
        throw TooLargeForEnumeration("brute-force oracle is guarded at " +
                                     std::to_string(max_n) + " vertices");
    if (n == 0) return 0;

    FaceCensus census = trace_faces(g);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);

    // Deliberately primitive: an odometer over all k^n assignments with the
    // FUM test written out inline, independent of the search machinery.
    for (int k = 1; k <= n; ++k) {
        std::vector<int> col(n, 1);
        while (true) {
            bool good = true;
            for (const auto& [u, v] : edges)
                if (col[u] == col[v]) {
                    good = false;
                    break;
                }
            if (good) {
                for (const Face& f : census.faces) {
                    int mx = 0, mult = 0;
                    for (VertexId v : f.incident_vertices) {
                        if (col[v] > mx) {
                            mx = col[v];
                            mult = 1;
                        } else if (col[v] == mx) {
                            ++mult;
                        }
                    }
                    if (mult >= 2) {
                        good = false;
                        break;
                    }
                }
            }
            if (good) return k;

            int pos = n - 1;
            while (pos >= 0 && col[pos] == k) col[pos--] = 1;
            if (pos < 0) break;
            ++col[pos];
        }
    }
    return n;  // n distinct colors always work
}

// ---------------------------------------------------------------------------
// coloring files
// ---------------------------------------------------------------------------

Coloring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    int palette = -1;
    std::vector<std::pair<VertexId, int>> entries;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;

        if (palette < 0) {
            if (head != "palette") throw SyntaxError("expected header 'palette <k>'", line_no);
            if (!(ls >> palette) || palette < 1) throw SyntaxError("bad palette size", line_no);
            continue;
        }
        if (head.size() < 2 || head[0] != 'v')
            throw SyntaxError("expected 'v<i> <color>' but got '" + head + "'", line_no);
        int v, c;
        try {
            std::size_t used = 0;
            v = std::stoi(head.substr(1), &used);
            if (used != head.size() - 1 || v < 0) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw SyntaxError("bad vertex index in '" + head + "'", line_no);
        }
        if (!(ls >> c)) throw SyntaxError("missing color for " + head, line_no);
        if (c < 1 || c > palette)
            throw PaletteMismatch("line " + std::to_string(line_no) + ": color " +
                                  std::to_string(c) + " outside palette {1.." +
                                  std::to_string(palette) + "}");
        entries.emplace_back(v, c);
    }
    if (palette < 0) throw SyntaxError("missing 'palette <k>' header", std::max(1, line_no));

    int n = 0;
    for (const auto& [v, c] : entries) n = std::max(n, v + 1);
    Coloring coloring{std::vector<int>(n, 0), palette};
    for (const auto& [v, c] : entries) {
        if (coloring.colors[v] != 0) throw SyntaxError("duplicate color for v" + std::to_string(v), line_no);
        coloring.colors[v] = c;
    }
    for (VertexId v = 0; v < n; ++v)
        if (coloring.colors[v] == 0)
            throw SyntaxError("no color given for v" + std::to_string(v), line_no);
    return coloring;
}

std::string serialize_coloring(const Coloring& c) {
    std::ostringstream out;
    out << "palette " << c.palette << "\n";
    for (VertexId v = 0; v < static_cast<int>(c.colors.size()); ++v)
        out << "v" << v << " " << c.colors[v] << "\n";
    return out.str();
}

}  // namespace fumlab
