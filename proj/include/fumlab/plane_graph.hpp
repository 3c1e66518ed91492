#pragma once

// Plane graphs stored as rotation systems.
//
// A plane embedding is encoded per vertex as the counterclockwise cyclic
// order of its neighbors. Faces are never stored; trace_faces derives them
// with the successor rule: after the dart (u, v) the boundary walk continues
// with (v, w), where w is the cyclic successor of u in the rotation at v.
// Under this convention bounded faces come out clockwise and the unbounded
// face counterclockwise.
//
// On-disk format (UTF-8 text, '#' starts a comment):
//
//   planegraph <n>
//   v<i>: <neighbor> <neighbor> ...     one line per vertex, cyclic order
//   label v<i> <string>                 optional
//   outer <dart-tail> <dart-head>       optional, marks the face containing
//                                       that dart as the outer face

#include <fumlab/errors.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fumlab {

using VertexId = int;

/// One directed side of an undirected edge; the unit of face tracing.
struct Dart {
    VertexId tail = -1;
    VertexId head = -1;
    auto operator<=>(const Dart&) const = default;
};

struct Face {
    std::vector<Dart> walk;                   // cyclic boundary walk
    std::vector<VertexId> incident_vertices;  // distinct, sorted ascending
    int component = 0;
    bool is_outer = false;

    std::size_t length() const { return walk.size(); }
};

struct FaceCensus {
    std::vector<Face> faces;
    std::map<std::size_t, std::size_t> counts_by_length;
    std::optional<int> outer_face_index;
};

/// Immutable after construction; the constructor validates adjacency
/// symmetry, absence of loops and multi-edges, and index ranges.
class PlaneGraph {
  public:
    PlaneGraph() = default;
    PlaneGraph(int n, std::vector<std::vector<VertexId>> rotations,
               std::vector<std::string> labels = {},
               std::optional<Dart> outer = std::nullopt);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return rotations_[v]; }
    const std::vector<std::vector<VertexId>>& rotations() const { return rotations_; }
    int degree(VertexId v) const { return static_cast<int>(rotations_[v].size()); }
    bool has_edge(VertexId u, VertexId v) const;

    /// Empty string means "no label".
    const std::string& label(VertexId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find_label(const std::string& name) const;

    std::optional<Dart> outer_dart() const { return outer_dart_; }

    int component_of(VertexId v) const { return component_[v]; }
    int component_count() const { return component_count_; }

    bool operator==(const PlaneGraph& other) const;

  private:
    int n_ = 0;
    std::vector<std::vector<VertexId>> rotations_;
    std::vector<std::string> labels_;  // size n_, "" = unlabeled
    std::optional<Dart> outer_dart_;
    std::vector<int> component_;
    int component_count_ = 0;
    int edge_count_ = 0;
};

PlaneGraph build_plane_graph(int n, std::vector<std::vector<VertexId>> rotations);

/// Traces every face of the embedding, per connected component. Faces are
/// ordered by their smallest dart (isolated vertices contribute a dartless
/// face each, listed last); the ordering is deterministic.
FaceCensus trace_faces(const PlaneGraph& g);

/// Index of the census face whose walk contains d.
int find_face_of_dart(const FaceCensus& census, Dart d);

/// V - E + F over the whole graph; 2 for a connected plane graph,
/// 2 per component otherwise.
int euler_characteristic(const PlaneGraph& g);

/// V - E + F restricted to each connected component (2 each for plane
/// embeddings).
std::vector<int> component_euler_characteristics(const PlaneGraph& g);

int max_degree(const PlaneGraph& g);

PlaneGraph parse_graph(const std::string& text);
std::string serialize_graph(const PlaneGraph& g);

}  // namespace fumlab
