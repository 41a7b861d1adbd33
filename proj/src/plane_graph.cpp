#include "ucpg/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace ucpg {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges)
        add_edge(e);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    const auto& row = adj_[a];
    return std::binary_search(row.begin(), row.end(), b);
}

void Graph::add_edge(Edge e) {
    const int n = vertex_count();
    if (e.u < 0 || e.v >= n)
        throw GraphError("edge endpoint out of range");
    if (e.u == e.v)
        throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (adjacent(e.u, e.v))
        throw GraphError("multi-edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    auto& a = adj_[e.u];
    a.insert(std::lower_bound(a.begin(), a.end(), e.v), e.v);
    auto& b = adj_[e.v];
    b.insert(std::lower_bound(b.begin(), b.end(), e.u), e.u);
    ++edges_;
}

void Graph::remove_edge(Edge e) {
    if (e.u < 0 || e.v >= vertex_count() || !adjacent(e.u, e.v))
        throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not present");
    auto& a = adj_[e.u];
    a.erase(std::lower_bound(a.begin(), a.end(), e.v));
    auto& b = adj_[e.v];
    b.erase(std::lower_bound(b.begin(), b.end(), e.u));
    --edges_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

namespace {

template <class Neighbors>
bool connected_from_zero(int n, Neighbors&& neighbors, const std::vector<char>* removed = nullptr) {
    if (n == 0)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    Vertex start = -1;
    int alive = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (removed && (*removed)[v])
            continue;
        ++alive;
        if (start < 0)
            start = v;
    }
    if (alive == 0)
        return true;
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : neighbors(x)) {
            if (seen[y] || (removed && (*removed)[y]))
                continue;
            seen[y] = 1;
            ++reached;
            stack.push_back(y);
        }
    }
    return reached == alive;
}

}  // namespace

bool Graph::is_connected() const {
    return connected_from_zero(vertex_count(), [this](Vertex v) { return neighbors(v); });
}

PlaneGraph PlaneGraph::from_rotation_system(int n, std::vector<std::vector<Vertex>> rotations) {
    if (n < 1)
        throw GraphError("a plane graph needs at least one vertex");
    if (static_cast<int>(rotations.size()) != n)
        throw GraphError("expected " + std::to_string(n) + " rotations, got " +
                         std::to_string(rotations.size()));
    return build(std::move(rotations), true);
}

PlaneGraph PlaneGraph::build(std::vector<std::vector<Vertex>> rotations, bool require_connected) {
    const int n = static_cast<int>(rotations.size());
    PlaneGraph g;
    g.rotations_ = std::move(rotations);

    g.offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        const auto& rot = g.rotations_[v];
        for (Vertex w : rot) {
            if (w < 0 || w >= n)
                throw GraphError("neighbor " + std::to_string(w) + " of vertex " + std::to_string(v) +
                                 " out of range");
            if (w == v)
                throw GraphError("self-loop at vertex " + std::to_string(v));
        }
        std::vector<Vertex> sorted(rot.begin(), rot.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw GraphError("multi-edge at vertex " + std::to_string(v));
        g.offset_[v + 1] = g.offset_[v] + static_cast<int>(rot.size());
    }

    const int darts = g.offset_[n];
    g.tail_.resize(static_cast<std::size_t>(darts));
    g.head_.resize(static_cast<std::size_t>(darts));
    g.reverse_.assign(static_cast<std::size_t>(darts), -1);
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i < g.degree(v); ++i) {
            const int d = g.offset_[v] + i;
            g.tail_[d] = v;
            g.head_[d] = g.rotations_[v][i];
        }
    }
    for (int d = 0; d < darts; ++d) {
        const Vertex u = g.tail_[d];
        const Vertex v = g.head_[d];
        const auto& rot = g.rotations_[v];
        const auto it = std::find(rot.begin(), rot.end(), u);
        if (it == rot.end())
            throw GraphError("asymmetric adjacency: " + std::to_string(u) + " lists " + std::to_string(v) +
                             " but " + std::to_string(v) + " does not list " + std::to_string(u));
        g.reverse_[d] = g.offset_[v] + static_cast<int>(it - rot.begin());
    }

    g.connected_ = connected_from_zero(n, [&g](Vertex v) { return g.rotation(v); });
    if (!g.connected_) {
        if (require_connected)
            throw GraphError("graph is disconnected");
        return g;
    }

    if (darts == 0) {
        g.faces_.push_back(Face{});
    } else {
        g.face_of_.assign(static_cast<std::size_t>(darts), -1);
        for (int start = 0; start < darts; ++start) {
            if (g.face_of_[start] >= 0)
                continue;
            Face face;
            const int id = static_cast<int>(g.faces_.size());
            int d = start;
            do {
                g.face_of_[d] = id;
                face.darts.push_back(d);
                d = g.next_in_face(d);
            } while (d != start);
            g.faces_.push_back(std::move(face));
        }
    }

    const int euler = n - g.edge_count() + static_cast<int>(g.faces_.size());
    if (euler != 2) {
        std::ostringstream msg;
        msg << "nonzero genus: n - m + f = " << n << " - " << g.edge_count() << " + " << g.faces_.size()
            << " = " << euler;
        throw GraphError(msg.str());
    }
    return g;
}

int PlaneGraph::next_in_face(int dart) const {
    const Vertex v = head_[dart];
    const int deg = degree(v);
    const int back = reverse_[dart] - offset_[v];
    return offset_[v] + (back + deg - 1) % deg;
}

void PlaneGraph::require_faces() const {
    if (!connected_)
        throw std::logic_error("face-level operations require a connected embedding");
}

int PlaneGraph::face_count() const {
    require_faces();
    return static_cast<int>(faces_.size());
}

int PlaneGraph::face_of(int dart) const {
    require_faces();
    return face_of_[dart];
}

const std::vector<Face>& PlaneGraph::faces() const {
    require_faces();
    return faces_;
}

Graph PlaneGraph::abstract() const {
    Graph g(vertex_count());
    for (int d = 0; d < dart_count(); ++d)
        if (tail_[d] < head_[d])
            g.add_edge(Edge(tail_[d], head_[d]));
    return g;
}

std::vector<Face> trace_faces(const PlaneGraph& g) { return g.faces(); }

std::vector<FacePair> adjacent_face_pairs(const PlaneGraph& g) {
    const auto& faces = g.faces();
    std::map<std::pair<int, int>, int> shared;
    for (int d = 0; d < g.dart_count(); ++d) {
        if (g.tail(d) > g.head(d))
            continue;
        const int a = g.face_of(d);
        const int b = g.face_of(g.reverse(d));
        if (a == b)
            continue;
        ++shared[{std::min(a, b), std::max(a, b)}];
    }
    std::vector<FacePair> out;
    out.reserve(shared.size());
    for (const auto& [key, count] : shared) {
        const int da = faces[key.first].degree();
        const int db = faces[key.second].degree();
        out.push_back(FacePair{key.first, key.second, std::min(da, db), std::max(da, db), count});
    }
    return out;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1 || k > 3)
        throw std::invalid_argument("is_k_connected supports 1 <= k <= 3");
    const int n = g.vertex_count();
    if (n <= k)
        return false;
    auto nb = [&g](Vertex v) { return g.neighbors(v); };
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    if (!connected_from_zero(n, nb, &removed))
        return false;
    if (k >= 2) {
        for (Vertex a = 0; a < n; ++a) {
            removed[a] = 1;
            bool ok = connected_from_zero(n, nb, &removed);
            if (ok && k == 3) {
                for (Vertex b = a + 1; b < n && ok; ++b) {
                    removed[b] = 1;
                    ok = connected_from_zero(n, nb, &removed);
                    removed[b] = 0;
                }
            }
            removed[a] = 0;
            if (!ok)
                return false;
        }
    }
    return true;
}

bool is_k_connected(const PlaneGraph& g, int k) { return is_k_connected(g.abstract(), k); }

long long count_triangles(const Graph& g) {
    long long count = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (v <= u)
                continue;
            for (Vertex w : g.neighbors(v))
                if (w > v && g.adjacent(u, w))
                    ++count;
        }
    }
    return count;
}

long long count_triangles(const PlaneGraph& g) { return count_triangles(g.abstract()); }

EdgeDeletion delete_edge(const PlaneGraph& g, Edge e) {
    const int n = g.vertex_count();
    if (e.u < 0 || e.v >= n || e.u == e.v)
        throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not present");
    auto rotations = g.rotations_;
    auto& ru = rotations[e.u];
    auto& rv = rotations[e.v];
    const auto iu = std::find(ru.begin(), ru.end(), e.v);
    const auto iv = std::find(rv.begin(), rv.end(), e.u);
    if (iu == ru.end() || iv == rv.end())
        throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not present");
    const int pu = static_cast<int>(iu - ru.begin());
    const int pv = static_cast<int>(iv - rv.begin());
    ru.erase(iu);
    rv.erase(iv);
    return EdgeDeletion{PlaneGraph::build(std::move(rotations), false), e, pu, pv};
}

PlaneGraph insert_edge(const PlaneGraph& g, Edge e, int position_at_u, int position_at_v) {
    const int n = g.vertex_count();
    if (e.u < 0 || e.v >= n || e.u == e.v)
        throw GraphError("edge endpoint out of range");
    auto rotations = g.rotations_;
    auto& ru = rotations[e.u];
    auto& rv = rotations[e.v];
    if (position_at_u < 0 || position_at_u > static_cast<int>(ru.size()) || position_at_v < 0 ||
        position_at_v > static_cast<int>(rv.size()))
        throw GraphError("rotation position out of range");
    ru.insert(ru.begin() + position_at_u, e.v);
    rv.insert(rv.begin() + position_at_v, e.u);
    return PlaneGraph::build(std::move(rotations), false);
}

}  // namespace ucpg
