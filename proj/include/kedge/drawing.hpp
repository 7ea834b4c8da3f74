#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kedge/error.hpp"

namespace kedge {

using Vertex = int;

struct CrossingRecord {
    Vertex other_u, other_v;  // the other edge, canonical other_u < other_v
    int index_on_other;       // position of this crossing in the other edge's list
    int sign;                 // +1: ccw order at the node is (this fwd, other fwd, this bwd, other bwd)
};

struct EdgeCrossings {
    Vertex u, v;  // u < v; records ordered from u towards v
    std::vector<CrossingRecord> records;
};

struct DrawingMeta {
    std::string generator;
    std::optional<std::uint64_t> seed;
    std::map<std::string, std::string> labels;
    bool operator==(const DrawingMeta&) const = default;
};

/// Combinatorial encoding of a good drawing of a complete graph: per-vertex
/// counterclockwise rotations plus per-edge ordered crossing lists with a
/// handedness sign per crossing.  Vertices carry arbitrary integer labels so
/// subdrawings keep stable identities.
struct DrawingSpec {
    std::vector<Vertex> vertices;                // sorted distinct labels
    std::vector<std::vector<Vertex>> rotations;  // rotations[i]: ccw neighbours of vertices[i]
    std::vector<EdgeCrossings> edges;            // lex sorted (u,v); all n*(n-1)/2 pairs
    DrawingMeta meta;

    int n() const { return static_cast<int>(vertices.size()); }
    bool operator==(const DrawingSpec&) const;
};

bool operator==(const CrossingRecord& a, const CrossingRecord& b);
bool operator==(const EdgeCrossings& a, const EdgeCrossings& b);

struct Face {
    int id;                        // rank by minimal dart id; stable for a fixed drawing
    int min_dart;
    std::vector<int> orbit;        // darts with this face on their left, in trace order
    std::vector<Vertex> vertices;  // incident real vertices, sorted labels
};

struct GoodnessReport {
    bool ok = true;
    std::string what;
    Vertex eu = -1, ev = -1, fu = -1, fv = -1;  // offending edge pair, when applicable
};

/// Plane multigraph on the sphere obtained by replacing every crossing with a
/// degree-4 node.  Darts are paired by twin (d ^ 1) and chained by sigma, the
/// ccw-next dart at the origin node; faces lie to the left of their darts.
class PlanarizedDrawing {
  public:
    struct CrossingNode {
        int e1, e2;      // edge indices, e1 < e2
        int pos1, pos2;  // crossing positions on e1 / e2
        int sign;        // sign as recorded on e1
    };
    struct EdgeInfo {
        Vertex u, v;              // u < v
        int base_dart;            // darts base..base+2*nseg-1; segment s: fwd base+2s, bwd base+2s+1
        int nseg;
        std::vector<int> xnodes;  // crossing node ids along the path u -> v
    };

    static PlanarizedDrawing build(const DrawingSpec& spec);

    const DrawingSpec& spec() const { return spec_; }
    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<Vertex>& labels() const { return labels_; }
    std::int64_t cr() const { return static_cast<std::int64_t>(crossings_.size()); }

    int node_count() const { return n() + static_cast<int>(crossings_.size()); }
    int segment_count() const { return static_cast<int>(dart_origin_.size()) / 2; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }
    const std::vector<EdgeInfo>& edges() const { return edges_; }
    const std::vector<CrossingNode>& crossing_nodes() const { return crossings_; }

    int edge_index(Vertex u, Vertex v) const;          // throws UnknownVertex if absent
    int vertex_slot(Vertex v) const;                   // index into labels(); throws UnknownVertex
    bool has_vertex(Vertex v) const;

    int twin(int d) const { return d ^ 1; }
    int sigma(int d) const { return sigma_[d]; }
    int dart_origin(int d) const { return dart_origin_[d]; }
    int dart_edge(int d) const { return dart_edge_[d]; }
    int dart_face(int d) const { return dart_face_[d]; }
    int dart_count() const { return static_cast<int>(sigma_.size()); }

    // Some dart of the path of edge {x,y} oriented x -> y (the first from x).
    int oriented_dart(Vertex x, Vertex y) const;
    // Face to the left of the oriented path x -> y.
    int face_left_of(Vertex x, Vertex y) const { return dart_face_[oriented_dart(x, y)]; }

    bool face_incident_to(int face_id, Vertex v) const;
    // Faces incident to v, ascending ids.
    std::vector<int> faces_at(Vertex v) const;
    // Darts with a given origin node, in sigma order.
    std::vector<int> darts_at_node(int node) const;

  private:
    DrawingSpec spec_;
    std::vector<Vertex> labels_;
    std::vector<CrossingNode> crossings_;
    std::vector<EdgeInfo> edges_;
    std::map<std::pair<Vertex, Vertex>, int> edge_idx_;
    std::vector<int> dart_origin_, dart_edge_, sigma_, dart_face_;
    std::vector<Face> faces_;
};

GoodnessReport check_goodness(const DrawingSpec& spec);
GoodnessReport validate_goodness(const PlanarizedDrawing& d);

struct TrianglePartition {
    Vertex u, v, w;
    std::vector<int> left_faces, right_faces;      // disjoint, cover all faces
    std::vector<Vertex> left_vertices, right_vertices;
};

// Side partition induced by the closed curve u-v-w, oriented u -> v.  "Left"
// is the side to the left of the path of uv traversed from u.
TrianglePartition triangle_partition(const PlanarizedDrawing& d, Vertex u, Vertex v, Vertex w);

// Cheap variant for bulk use: per-face 2-colouring by the same curve
// (labels 0/1 arbitrary but deterministic), plus no vertex classification.
std::vector<std::uint8_t> triangle_coloring(const PlanarizedDrawing& d, Vertex a, Vertex b, Vertex c);

struct DeletionTrace {
    Vertex deleted;
    PlanarizedDrawing sub;       // drawing of K_{n-1}, original labels kept
    std::vector<int> face_map;   // face id in parent -> face id in sub; total
    int superface;               // image of every face incident to the deleted vertex
};

DeletionTrace delete_vertex(const PlanarizedDrawing& d, Vertex v);

}
