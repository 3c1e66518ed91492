#include <fumlab/generators.hpp>

#include <algorithm>
#include <cassert>

namespace fumlab {

GadgetHandle gen_gadget(int k) {
    if (k < 1) throw Error("gen_gadget: k must be >= 1");
    const int m = 3 * k + 1;          // cycle length
    const int n = 2 * m;              // 6k + 2 vertices
    auto a = [m](int i) { return (i % m + m) % m; };          // a_{i+1} -> index i mod m
    auto b = [m](int i) { return m + (i % m + m) % m; };      // b_{i+1} -> index m + i mod m

    std::vector<std::vector<VertexId>> rot(n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < m; ++i) {
        // Counterclockwise around a_i: next a, the two spokes, previous a.
        rot[a(i)] = {a(i + 1), b(i), b(i - 1), a(i - 1)};
        // Counterclockwise around b_i: forward spoke, next b, previous b, back spoke.
        rot[b(i)] = {a(i + 1), b(i + 1), b(i - 1), a(i)};
        labels[a(i)] = "a" + std::to_string(i + 1);
        labels[b(i)] = "b" + std::to_string(i + 1);
    }

    GadgetHandle h;
    h.graph = PlaneGraph(n, std::move(rot), std::move(labels), Dart{a(0), a(1)});
    h.k = k;
    for (int i = 0; i < m; ++i) h.outer_cycle.push_back(a(i));
    for (int i = 0; i < m; ++i) h.inner_cycle.push_back(b(i));
    return h;
}

namespace {

// Inserts x into rot right after the first occurrence of after.
void insert_after(std::vector<VertexId>& rot, VertexId after, VertexId x) {
    auto it = std::find(rot.begin(), rot.end(), after);
    assert(it != rot.end());
    rot.insert(it + 1, x);
}

// The corner of face at vertex v: the pair (p, q) of neighbors of v that are
// consecutive along the face's boundary walk (first visit of v wins).
std::pair<VertexId, VertexId> face_corner_at(const Face& face, VertexId v) {
    const auto& walk = face.walk;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (walk[i].head == v) {
            const Dart& out = walk[(i + 1) % walk.size()];
            assert(out.tail == v);
            return {walk[i].tail, out.head};
        }
    }
    throw AnchorNotOnFace("vertex " + std::to_string(v) + " is not on the requested face");
}

}  // namespace

VertexId default_gadget_anchor(const GadgetHandle& gadget) {
    // a_4 exists for every k >= 1.
    return gadget.outer_cycle.at(3);
}

VertexId default_host_anchor(const FaceCensus& census, int host_face) {
    const Face& f = census.faces.at(host_face);
    if (f.walk.empty()) throw AnchorNotOnFace("host face has no boundary walk");
    return f.walk.front().tail;
}

PlaneGraph attach_gadget(const PlaneGraph& base, const AttachmentSpec& spec,
                         const std::string& label_suffix) {
    FaceCensus base_census = trace_faces(base);
    if (spec.host_face < 0 || spec.host_face >= static_cast<int>(base_census.faces.size()))
        throw FaceNotFound("host face " + std::to_string(spec.host_face) + " of " +
                           std::to_string(base_census.faces.size()) + " faces");
    const Face& host = base_census.faces[spec.host_face];
    if (!std::binary_search(host.incident_vertices.begin(), host.incident_vertices.end(),
                            spec.host_anchor))
        throw AnchorNotOnFace("host anchor " + std::to_string(spec.host_anchor) +
                              " is not incident to face " + std::to_string(spec.host_face));

    const GadgetHandle& gadget = spec.gadget;
    if (std::find(gadget.outer_cycle.begin(), gadget.outer_cycle.end(), spec.gadget_anchor) ==
        gadget.outer_cycle.end())
        throw AnchorNotOnOuterCycle("gadget anchor " + std::to_string(spec.gadget_anchor) +
                                    " is not on the gadget's outer cycle");

    const int offset = base.vertex_count();
    const int n = offset + gadget.graph.vertex_count();

    std::vector<std::vector<VertexId>> rot(n);
    std::vector<std::string> labels(n);
    for (VertexId v = 0; v < offset; ++v) {
        rot[v] = base.neighbors(v);
        labels[v] = base.label(v);
    }
    for (VertexId v = 0; v < gadget.graph.vertex_count(); ++v) {
        for (VertexId u : gadget.graph.neighbors(v)) rot[offset + v].push_back(offset + u);
        if (!gadget.graph.label(v).empty()) labels[offset + v] = gadget.graph.label(v) + label_suffix;
    }

    // Host side: put the new edge in the corner the host face occupies.
    auto [hp, hq] = face_corner_at(host, spec.host_anchor);
    (void)hq;
    insert_after(rot[spec.host_anchor], hp, offset + spec.gadget_anchor);

    // Gadget side: put the new edge in the corner its outer face occupies,
    // i.e. between the anchor's two outer-cycle neighbors.
    FaceCensus gadget_census = trace_faces(gadget.graph);
    if (!gadget_census.outer_face_index)
        throw AnchorNotOnOuterCycle("gadget has no designated outer face");
    const Face& gadget_outer = gadget_census.faces[*gadget_census.outer_face_index];
    auto [gp, gq] = face_corner_at(gadget_outer, spec.gadget_anchor);
    (void)gq;
    insert_after(rot[offset + spec.gadget_anchor], offset + gp, spec.host_anchor);

    return PlaneGraph(n, std::move(rot), std::move(labels), base.outer_dart());
}

PlaneGraph gen_fig1() {
    GadgetHandle h = gen_gadget(1);
    FaceCensus census = trace_faces(h.graph);

    AttachmentSpec spec;
    spec.host_face = *census.outer_face_index;
    spec.gadget = gen_gadget(1);
    spec.host_anchor = h.outer_cycle.at(3);          // a_4
    spec.gadget_anchor = spec.gadget.outer_cycle.at(1);  // becomes a_2'
    return attach_gadget(h.graph, spec, "'");
}

PlaneGraph gen_k4_composite(const std::vector<int>& faces_to_fill, int k) {
    if (faces_to_fill.empty()) throw FaceNotFound("faces_to_fill must be non-empty");
    PlaneGraph g = gen_k4();
    FaceCensus census = trace_faces(g);

    // Face ids refer to plane K4's census; pin each one by a dart so the ids
    // survive earlier attachments.
    std::vector<Dart> pins;
    for (int f : faces_to_fill) {
        if (f < 0 || f >= static_cast<int>(census.faces.size()))
            throw FaceNotFound("K4 has no face " + std::to_string(f));
        pins.push_back(census.faces[f].walk.front());
    }

    std::string suffix;
    for (Dart pin : pins) {
        suffix += "'";
        FaceCensus current = trace_faces(g);
        AttachmentSpec spec;
        spec.host_face = find_face_of_dart(current, pin);
        spec.gadget = gen_gadget(k);
        spec.gadget_anchor = default_gadget_anchor(spec.gadget);
        spec.host_anchor = default_host_anchor(current, spec.host_face);
        g = attach_gadget(g, spec, suffix);
    }
    return g;
}

PlaneGraph gen_cycle(int n) {
    if (n < 3) throw Error("gen_cycle: n must be >= 3");
    std::vector<std::vector<VertexId>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
    return PlaneGraph(n, std::move(rot), {}, Dart{0, 1});
}

PlaneGraph gen_path(int n) {
    if (n < 1) throw Error("gen_path: n must be >= 1");
    std::vector<std::vector<VertexId>> rot(n);
    for (int i = 0; i + 1 < n; ++i) {
        rot[i].push_back(i + 1);
        rot[i + 1].push_back(i);
    }
    std::optional<Dart> outer;
    if (n >= 2) outer = Dart{0, 1};
    return PlaneGraph(n, std::move(rot), {}, outer);
}

PlaneGraph gen_k4() {
    // Outer triangle 0,1,2 counterclockwise, vertex 3 in the center.
    std::vector<std::vector<VertexId>> rot = {
        {1, 3, 2},
        {2, 3, 0},
        {0, 3, 1},
        {0, 1, 2},
    };
    return PlaneGraph(4, std::move(rot), {}, Dart{0, 1});
}

PlaneGraph gen_wheel(int n) {
    if (n < 3) throw Error("gen_wheel: rim must have >= 3 vertices");
    const int hub = n;
    std::vector<std::vector<VertexId>> rot(n + 1);
    for (int i = 0; i < n; ++i) {
        rot[i] = {(i + 1) % n, hub, (i + n - 1) % n};
        rot[hub].push_back(i);
    }
    return PlaneGraph(n + 1, std::move(rot), {}, Dart{0, 1});
}

PlaneGraph remove_edge(const PlaneGraph& g, VertexId u, VertexId v) {
    if (!g.has_edge(u, v))
        throw EdgeNotFound("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    std::vector<std::vector<VertexId>> rot = g.rotations();
    std::erase(rot[u], v);
    std::erase(rot[v], u);
    std::optional<Dart> outer = g.outer_dart();
    if (outer && ((outer->tail == u && outer->head == v) || (outer->tail == v && outer->head == u)))
        outer.reset();
    return PlaneGraph(g.vertex_count(), std::move(rot), g.labels(), outer);
}

}  // namespace fumlab
