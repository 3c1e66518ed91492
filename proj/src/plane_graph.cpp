#include <fumlab/plane_graph.hpp>

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace fumlab {

namespace {

std::string vname(VertexId v) { return "v" + std::to_string(v); }

}  // namespace

PlaneGraph::PlaneGraph(int n, std::vector<std::vector<VertexId>> rotations,
                       std::vector<std::string> labels, std::optional<Dart> outer)
    : n_(n), rotations_(std::move(rotations)), labels_(std::move(labels)), outer_dart_(outer) {
    if (n_ < 0) throw IndexOutOfRange("vertex count must be non-negative");
    if (static_cast<int>(rotations_.size()) != n_)
        throw IndexOutOfRange("expected " + std::to_string(n_) + " rotation lists, got " +
                              std::to_string(rotations_.size()));
    labels_.resize(n_);

    std::size_t dart_count = 0;
    for (VertexId v = 0; v < n_; ++v) {
        std::vector<char> seen(n_, 0);
        for (VertexId u : rotations_[v]) {
            if (u < 0 || u >= n_)
                throw IndexOutOfRange(vname(v) + " lists neighbor " + std::to_string(u) +
                                      " outside [0, " + std::to_string(n_) + ")");
            if (u == v) throw SelfLoop(vname(v) + " lists itself as a neighbor");
            if (seen[u])
                throw DuplicateNeighbor(vname(v) + " lists " + vname(u) + " more than once");
            seen[u] = 1;
        }
        dart_count += rotations_[v].size();
    }
    for (VertexId v = 0; v < n_; ++v) {
        for (VertexId u : rotations_[v]) {
            const auto& back = rotations_[u];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw AsymmetricAdjacency(vname(v) + " lists " + vname(u) + " but " + vname(u) +
                                          " does not list " + vname(v));
        }
    }
    edge_count_ = static_cast<int>(dart_count / 2);

    if (outer_dart_) {
        Dart d = *outer_dart_;
        if (d.tail < 0 || d.tail >= n_ || !has_edge(d.tail, d.head))
            throw EdgeNotFound("outer dart (" + std::to_string(d.tail) + ", " +
                               std::to_string(d.head) + ") is not an edge of the graph");
    }

    // Connected components by BFS over the adjacency.
    component_.assign(n_, -1);
    component_count_ = 0;
    std::vector<VertexId> queue;
    for (VertexId s = 0; s < n_; ++s) {
        if (component_[s] != -1) continue;
        component_[s] = component_count_;
        queue.assign(1, s);
        while (!queue.empty()) {
            VertexId v = queue.back();
            queue.pop_back();
            for (VertexId u : rotations_[v]) {
                if (component_[u] == -1) {
                    component_[u] = component_count_;
                    queue.push_back(u);
                }
            }
        }
        ++component_count_;
    }
}

bool PlaneGraph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& r = rotations_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

std::optional<VertexId> PlaneGraph::find_label(const std::string& name) const {
    for (VertexId v = 0; v < n_; ++v)
        if (labels_[v] == name) return v;
    return std::nullopt;
}

bool PlaneGraph::operator==(const PlaneGraph& other) const {
    return n_ == other.n_ && rotations_ == other.rotations_ && labels_ == other.labels_ &&
           outer_dart_ == other.outer_dart_;
}

PlaneGraph build_plane_graph(int n, std::vector<std::vector<VertexId>> rotations) {
    return PlaneGraph(n, std::move(rotations));
}

FaceCensus trace_faces(const PlaneGraph& g) {
    const int n = g.vertex_count();

    // pos[v][u] = index of u in the rotation at v, for O(1) successor lookup.
    std::vector<std::unordered_map<VertexId, int>> pos(n);
    for (VertexId v = 0; v < n; ++v) {
        const auto& rot = g.neighbors(v);
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) pos[v][rot[i]] = i;
    }

    auto next_dart = [&](Dart d) {
        const auto& rot = g.neighbors(d.head);
        int i = pos[d.head].at(d.tail);
        return Dart{d.head, rot[(i + 1) % rot.size()]};
    };

    // visited[v][i] marks dart (v, rotations[v][i]).
    std::vector<std::vector<char>> visited(n);
    for (VertexId v = 0; v < n; ++v) visited[v].assign(g.neighbors(v).size(), 0);

    FaceCensus census;
    std::size_t darts_used = 0;

    // Smallest dart first: tails ascending, heads ascending within a tail.
    for (VertexId v = 0; v < n; ++v) {
        std::vector<VertexId> heads = g.neighbors(v);
        std::sort(heads.begin(), heads.end());
        for (VertexId h : heads) {
            if (visited[v][pos[v].at(h)]) continue;
            Face face;
            face.component = g.component_of(v);
            Dart start{v, h};
            Dart d = start;
            do {
                visited[d.tail][pos[d.tail].at(d.head)] = 1;
                face.walk.push_back(d);
                d = next_dart(d);
            } while (d != start);
            darts_used += face.walk.size();
            face.incident_vertices.reserve(face.walk.size());
            for (const Dart& w : face.walk) face.incident_vertices.push_back(w.tail);
            std::sort(face.incident_vertices.begin(), face.incident_vertices.end());
            face.incident_vertices.erase(
                std::unique(face.incident_vertices.begin(), face.incident_vertices.end()),
                face.incident_vertices.end());
            census.faces.push_back(std::move(face));
        }
    }
    assert(darts_used == 2 * static_cast<std::size_t>(g.edge_count()));

    // An isolated vertex still has the plane around it: one dartless face.
    for (VertexId v = 0; v < n; ++v) {
        if (!g.neighbors(v).empty()) continue;
        Face face;
        face.component = g.component_of(v);
        face.incident_vertices = {v};
        census.faces.push_back(std::move(face));
    }

    for (const Face& f : census.faces) ++census.counts_by_length[f.length()];

    if (g.outer_dart()) {
        int idx = find_face_of_dart(census, *g.outer_dart());
        census.faces[idx].is_outer = true;
        census.outer_face_index = idx;
    }
    return census;
}

int find_face_of_dart(const FaceCensus& census, Dart d) {
    for (int i = 0; i < static_cast<int>(census.faces.size()); ++i) {
        const auto& walk = census.faces[i].walk;
        if (std::find(walk.begin(), walk.end(), d) != walk.end()) return i;
    }
    throw FaceNotFound("no face contains dart (" + std::to_string(d.tail) + ", " +
                       std::to_string(d.head) + ")");
}

int euler_characteristic(const PlaneGraph& g) {
    FaceCensus census = trace_faces(g);
    return g.vertex_count() - g.edge_count() + static_cast<int>(census.faces.size());
}

std::vector<int> component_euler_characteristics(const PlaneGraph& g) {
    FaceCensus census = trace_faces(g);
    std::vector<int> v_count(g.component_count(), 0);
    std::vector<int> dart_count(g.component_count(), 0);
    std::vector<int> f_count(g.component_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ++v_count[g.component_of(v)];
        dart_count[g.component_of(v)] += g.degree(v);
    }
    for (const Face& f : census.faces) ++f_count[f.component];
    std::vector<int> chi(g.component_count());
    for (int c = 0; c < g.component_count(); ++c)
        chi[c] = v_count[c] - dart_count[c] / 2 + f_count[c];
    return chi;
}

int max_degree(const PlaneGraph& g) {
    int best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

namespace {

// Strips a trailing comment and surrounding whitespace.
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    auto is_space = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && is_space(s.back())) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && is_space(s[start])) ++start;
    return s.substr(start);
}

// Parses "v<i>" or "v<i>:", returns the index.
VertexId parse_vertex_token(const std::string& tok, bool expect_colon, int line_no) {
    std::string t = tok;
    if (expect_colon) {
        if (t.empty() || t.back() != ':')
            throw SyntaxError("expected 'v<i>:' but got '" + tok + "'", line_no);
        t.pop_back();
    }
    if (t.size() < 2 || t[0] != 'v')
        throw SyntaxError("expected a vertex token but got '" + tok + "'", line_no);
    try {
        std::size_t used = 0;
        int v = std::stoi(t.substr(1), &used);
        if (used != t.size() - 1 || v < 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw SyntaxError("bad vertex index in '" + tok + "'", line_no);
    }
}

}  // namespace

PlaneGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    int n = -1;
    std::vector<std::vector<VertexId>> rotations;
    std::vector<char> have_rotation;
    std::vector<std::string> labels;
    std::optional<Dart> outer;
    std::optional<int> outer_line;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;

        if (n < 0) {
            if (head != "planegraph")
                throw SyntaxError("expected header 'planegraph <n>'", line_no);
            if (!(ls >> n) || n < 0) throw SyntaxError("bad vertex count", line_no);
            std::string extra;
            if (ls >> extra) throw SyntaxError("trailing text after header", line_no);
            rotations.assign(n, {});
            have_rotation.assign(n, 0);
            labels.assign(n, "");
            continue;
        }

        if (head == "label") {
            std::string vtok;
            if (!(ls >> vtok)) throw SyntaxError("label needs a vertex", line_no);
            VertexId v = parse_vertex_token(vtok, false, line_no);
            if (v >= n) throw SyntaxError("label references " + vtok + " >= n", line_no);
            std::string rest;
            std::getline(ls, rest);
            std::string value = clean_line(rest);
            if (value.empty()) throw SyntaxError("label needs a value", line_no);
            labels[v] = value;
            continue;
        }

        if (head == "outer") {
            int t, h;
            if (!(ls >> t >> h)) throw SyntaxError("expected 'outer <tail> <head>'", line_no);
            outer = Dart{t, h};
            outer_line = line_no;
            continue;
        }

        VertexId v = parse_vertex_token(head, true, line_no);
        if (v >= n)
            throw SyntaxError("rotation line for vertex " + std::to_string(v) + " >= n", line_no);
        if (have_rotation[v])
            throw SyntaxError("duplicate rotation line for v" + std::to_string(v), line_no);
        have_rotation[v] = 1;
        int u;
        while (ls >> u) rotations[v].push_back(u);
        if (!ls.eof()) throw SyntaxError("bad neighbor token", line_no);
    }

    if (n < 0) throw SyntaxError("missing 'planegraph <n>' header", line_no == 0 ? 1 : line_no);
    for (VertexId v = 0; v < n; ++v)
        if (!have_rotation[v])
            throw SyntaxError("missing rotation line for v" + std::to_string(v), line_no);

    try {
        return PlaneGraph(n, std::move(rotations), std::move(labels), outer);
    } catch (const EdgeNotFound& e) {
        // Only the outer-dart check raises this here.
        throw SyntaxError(e.what(), outer_line.value_or(line_no));
    }
}

std::string serialize_graph(const PlaneGraph& g) {
    std::ostringstream out;
    out << "planegraph " << g.vertex_count() << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "v" << v << ":";
        for (VertexId u : g.neighbors(v)) out << " " << u;
        out << "\n";
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!g.label(v).empty()) out << "label v" << v << " " << g.label(v) << "\n";
    if (g.outer_dart())
        out << "outer " << g.outer_dart()->tail << " " << g.outer_dart()->head << "\n";
    return out.str();
}

}  // namespace fumlab
