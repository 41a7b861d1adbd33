#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucpg {

using Vertex = int;

/// Raised when a rotation system or edge list does not describe a valid
/// simple connected plane graph.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Abstract simple graph. Neighbor lists are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edges_; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex a, Vertex b) const;

    void add_edge(Edge e);
    void remove_edge(Edge e);

    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;
    bool is_connected() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    int edges_ = 0;
};

/// A face traced from the rotation system: the cyclic dart sequence on its
/// boundary. A bridge contributes both of its darts to the same face.
struct Face {
    std::vector<int> darts;

    int degree() const { return static_cast<int>(darts.size()); }
};

/// Two distinct faces sharing at least one edge, with low <= high degrees.
struct FacePair {
    int face_a = 0;
    int face_b = 0;
    int degree_low = 0;
    int degree_high = 0;
    int shared_edges = 0;
};

struct EdgeDeletion;

/// Connected simple graph with a combinatorial embedding on the sphere.
///
/// Each vertex carries the counterclockwise cyclic order of its neighbors.
/// Darts are numbered vertex by vertex in rotation order: dart
/// `first_dart(v) + i` leaves v towards `rotation(v)[i]`. Faces follow the
/// rule "after (u,v) comes (v,w) where w precedes u in the rotation at v".
///
/// Values produced by edge deletion may be disconnected; such values keep
/// their rotations but refuse face-level queries.
class PlaneGraph {
public:
    static PlaneGraph from_rotation_system(int n, std::vector<std::vector<Vertex>> rotations);

    int vertex_count() const { return static_cast<int>(rotations_.size()); }
    int edge_count() const { return static_cast<int>(head_.size()) / 2; }
    int face_count() const;
    bool is_connected() const { return connected_; }

    std::span<const Vertex> rotation(Vertex v) const { return rotations_[v]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rotations_; }
    int degree(Vertex v) const { return static_cast<int>(rotations_[v].size()); }

    int dart_count() const { return static_cast<int>(head_.size()); }
    int first_dart(Vertex v) const { return offset_[v]; }
    Vertex tail(int dart) const { return tail_[dart]; }
    Vertex head(int dart) const { return head_[dart]; }
    int reverse(int dart) const { return reverse_[dart]; }
    /// Successor of a dart along its face.
    int next_in_face(int dart) const;
    /// Index into faces() of the face a dart bounds.
    int face_of(int dart) const;

    const std::vector<Face>& faces() const;
    Graph abstract() const;

    bool operator==(const PlaneGraph& other) const { return rotations_ == other.rotations_; }

private:
    PlaneGraph() = default;
    static PlaneGraph build(std::vector<std::vector<Vertex>> rotations, bool require_connected);
    void require_faces() const;

    std::vector<std::vector<Vertex>> rotations_;
    std::vector<int> offset_;
    std::vector<Vertex> tail_;
    std::vector<Vertex> head_;
    std::vector<int> reverse_;
    std::vector<int> face_of_;
    std::vector<Face> faces_;
    bool connected_ = true;

    friend EdgeDeletion delete_edge(const PlaneGraph&, Edge);
    friend PlaneGraph insert_edge(const PlaneGraph&, Edge, int, int);
};

/// Faces in trace order: each trace starts from the lowest unused dart.
std::vector<Face> trace_faces(const PlaneGraph& g);

/// Unordered pairs of distinct faces sharing an edge, sorted by face index.
std::vector<FacePair> adjacent_face_pairs(const PlaneGraph& g);

/// True iff |V| > k and removing any set of fewer than k vertices leaves the
/// graph connected. Supports 1 <= k <= 3.
bool is_k_connected(const Graph& g, int k);
bool is_k_connected(const PlaneGraph& g, int k);

/// Number of vertex triples that induce a 3-cycle.
long long count_triangles(const Graph& g);
long long count_triangles(const PlaneGraph& g);

struct EdgeDeletion {
    PlaneGraph graph;
    Edge edge;
    /// Positions the removed neighbor occupied in the rotations at edge.u and edge.v.
    int position_at_u = 0;
    int position_at_v = 0;
};

/// Removes e from both rotations. The result may be disconnected.
EdgeDeletion delete_edge(const PlaneGraph& g, Edge e);

/// Inserts e so that e.v lands at index position_at_u of rotation(e.u), and
/// symmetrically. Inverse of delete_edge.
PlaneGraph insert_edge(const PlaneGraph& g, Edge e, int position_at_u, int position_at_v);

}  // namespace ucpg
