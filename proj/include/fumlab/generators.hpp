#pragma once

// Constructors for the graphs the library studies: the gadget family H_k
// (two nested (3k+1)-cycles joined by a zigzag of spokes), the 16-vertex
// two-gadget counterexample, composites over K4, and small standard graphs.

#include <fumlab/plane_graph.hpp>

#include <string>
#include <vector>

namespace fumlab {

/// A generated gadget together with its two distinguished cycles.
/// H_k has 6k+2 vertices and 12k+4 edges; its traced census is one outer
/// face (the a-cycle), one inner face (the b-cycle) and 6k+2 triangles.
struct GadgetHandle {
    PlaneGraph graph;
    std::vector<VertexId> outer_cycle;  // a_1 .. a_{3k+1}
    std::vector<VertexId> inner_cycle;  // b_1 .. b_{3k+1}
    int k = 0;
};

struct AttachmentSpec {
    int host_face = 0;          // face id in the base graph's census
    GadgetHandle gadget;
    VertexId gadget_anchor = 0; // in gadget index space, must lie on the outer cycle
    VertexId host_anchor = 0;   // in base index space, must lie on host_face
};

/// Builds H_k with labels a1..a{3k+1}, b1..b{3k+1} and the a-cycle
/// designated as the outer face. Rejects k < 1.
GadgetHandle gen_gadget(int k);

/// Plants spec.gadget inside spec.host_face of base, joined by the single
/// new edge (host_anchor, gadget_anchor). The new edge is inserted into the
/// host rotation between the two neighbors consecutive along the host face
/// at host_anchor, and into the gadget rotation between the anchor's two
/// outer-cycle neighbors, so the result is plane by construction.
/// label_suffix is appended to every gadget label (e.g. "'" for a copy).
PlaneGraph attach_gadget(const PlaneGraph& base, const AttachmentSpec& spec,
                         const std::string& label_suffix = "");

/// Default anchors: the fourth outer-cycle vertex (a_4) on the gadget side,
/// the first face-walk vertex on the host side.
VertexId default_gadget_anchor(const GadgetHandle& gadget);
VertexId default_host_anchor(const FaceCensus& census, int host_face);

/// The 16-vertex counterexample: two copies of H_1 joined by the edge
/// a_4 - a_2'. 33 edges, 19 faces, maximum degree 5.
PlaneGraph gen_fig1();

/// K4 with one H_k planted in each listed census face (default faces
/// {0, 1}, the minimum set whose vertices cover all of K4).
PlaneGraph gen_k4_composite(const std::vector<int>& faces_to_fill = {0, 1}, int k = 1);

PlaneGraph gen_cycle(int n);
PlaneGraph gen_path(int n);
PlaneGraph gen_k4();
PlaneGraph gen_wheel(int n);  // n-cycle rim plus hub, n >= 3

/// Removes the undirected edge (u, v) from both rotations; components are
/// recomputed and the two faces along the edge merge (or the graph
/// disconnects). Clears the outer designation if it sat on that edge.
PlaneGraph remove_edge(const PlaneGraph& g, VertexId u, VertexId v);

}  // namespace fumlab
