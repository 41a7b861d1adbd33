#include "ucpg/catalog.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>

namespace ucpg::catalog {

namespace {

using Rotations = std::vector<std::vector<Vertex>>;
using Code = std::vector<std::uint8_t>;

int position_of(const std::vector<Vertex>& rot, Vertex x) {
    return static_cast<int>(std::find(rot.begin(), rot.end(), x) - rot.begin());
}

/// Breadth-first rotation code from one starting dart and orientation,
/// compared on the fly against `best`. Returns true if the result is smaller.
class PlaneCoder {
public:
    explicit PlaneCoder(const Rotations& rot) : rot_(rot) {
        const auto n = rot.size();
        number_.resize(n);
        first_.resize(n);
        queue_.reserve(n);
        cur_.reserve(n + 2 * count_darts());
    }

    std::size_t count_darts() const {
        std::size_t d = 0;
        for (const auto& r : rot_)
            d += r.size();
        return d;
    }

    Code minimum() {
        const int n = static_cast<int>(rot_.size());
        if (count_darts() == 0)
            return Code(static_cast<std::size_t>(n), 0);
        // Only darts with the lexicographically largest (tail degree, head
        // degree) may start the code; the restriction is isomorphism invariant.
        std::pair<std::size_t, std::size_t> top{0, 0};
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : rot_[v])
                top = std::max(top, std::pair{rot_[v].size(), rot_[w].size()});
        Code best;
        for (Vertex v = 0; v < n; ++v) {
            for (int p = 0; p < static_cast<int>(rot_[v].size()); ++p) {
                if (std::pair{rot_[v].size(), rot_[rot_[v][p]].size()} != top)
                    continue;
                for (int dir : {1, -1})
                    if (run(v, p, dir, best))
                        best.swap(cur_);
            }
        }
        return best;
    }

private:
    bool run(Vertex start, int start_pos, int dir, const Code& best) {
        std::fill(number_.begin(), number_.end(), 0);
        queue_.clear();
        cur_.clear();
        bool smaller = best.empty();
        int next = 1;
        number_[start] = next++;
        first_[start] = start_pos;
        queue_.push_back(start);
        auto emit = [&](std::uint8_t value) {
            if (!smaller) {
                const std::uint8_t ref = best[cur_.size()];
                if (value > ref)
                    return false;
                if (value < ref)
                    smaller = true;
            }
            cur_.push_back(value);
            return true;
        };
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            const Vertex x = queue_[qi];
            const auto& r = rot_[x];
            const int deg = static_cast<int>(r.size());
            for (int t = 0; t < deg; ++t) {
                const int pos = ((first_[x] + dir * t) % deg + deg) % deg;
                const Vertex y = r[pos];
                if (number_[y] == 0) {
                    number_[y] = next++;
                    first_[y] = position_of(rot_[y], x);
                    queue_.push_back(y);
                }
                if (!emit(static_cast<std::uint8_t>(number_[y])))
                    return false;
            }
            if (!emit(0))
                return false;
        }
        return smaller;
    }

    const Rotations& rot_;
    std::vector<int> number_;
    std::vector<int> first_;
    std::vector<Vertex> queue_;
    Code cur_;
};

Code code_of(const Rotations& rot) { return PlaneCoder(rot).minimum(); }

Rotations decode(const Code& code, int n) {
    Rotations rot(static_cast<std::size_t>(n));
    std::size_t v = 0;
    for (auto c : code) {
        if (c == 0)
            ++v;
        else
            rot[v].push_back(c - 1);
    }
    return rot;
}

std::string as_key(const Code& code) { return {code.begin(), code.end()}; }

std::vector<PlaneGraph> all_plane_graphs(int n_max) {
    std::vector<PlaneGraph> out;
    std::vector<PlaneGraph> level;
    for (int n = 1; n <= n_max; ++n) {
        std::unordered_set<std::string> seen;
        std::vector<PlaneGraph> work;
        auto offer = [&](const Rotations& rot) {
            auto code = code_of(rot);
            if (seen.insert(as_key(code)).second)
                work.push_back(PlaneGraph::from_rotation_system(n, decode(code, n)));
        };

        if (n == 1) {
            offer(Rotations(1));
        } else {
            // Hang a new vertex in every corner of every vertex.
            for (const auto& g : level) {
                for (Vertex x = 0; x < n - 1; ++x) {
                    const int corners = std::max(g.degree(x), 1);
                    for (int p = 0; p < corners; ++p) {
                        Rotations rot = g.rotations();
                        rot.push_back({x});
                        rot[x].insert(rot[x].begin() + p, n - 1);
                        offer(rot);
                    }
                }
            }
        }

        // Close every pair of corners sharing a face with a new edge.
        for (std::size_t i = 0; i < work.size(); ++i) {
            const PlaneGraph g = work[i];
            const Graph abs = g.abstract();
            for (const Face& face : g.faces()) {
                const int len = face.degree();
                for (int a = 0; a < len; ++a) {
                    const int da = face.darts[a];
                    const Vertex xa = g.head(da);
                    const int pa = g.reverse(da) - g.first_dart(xa);
                    for (int b = a + 1; b < len; ++b) {
                        const int db = face.darts[b];
                        const Vertex xb = g.head(db);
                        if (xa == xb || abs.adjacent(xa, xb))
                            continue;
                        const int pb = g.reverse(db) - g.first_dart(xb);
                        Rotations rot = g.rotations();
                        rot[xa].insert(rot[xa].begin() + pa, xb);
                        rot[xb].insert(rot[xb].begin() + pb, xa);
                        offer(rot);
                    }
                }
            }
        }

        std::vector<std::pair<Code, std::size_t>> order;
        order.reserve(work.size());
        for (std::size_t i = 0; i < work.size(); ++i)
            order.emplace_back(code_of(work[i].rotations()), i);
        std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
            const int mx = work[x.second].edge_count();
            const int my = work[y.second].edge_count();
            return std::tie(mx, x.first) < std::tie(my, y.first);
        });
        level.clear();
        for (const auto& [code, idx] : order)
            level.push_back(work[idx]);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace

std::vector<std::uint8_t> plane_code(const PlaneGraph& g) { return code_of(g.rotations()); }

PlaneGraph canonical_plane_form(const PlaneGraph& g) {
    if (!g.is_connected())
        throw GraphError("canonical form needs a connected embedding");
    return PlaneGraph::from_rotation_system(g.vertex_count(), decode(plane_code(g), g.vertex_count()));
}

std::uint64_t abstract_code(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11)
        throw std::invalid_argument("abstract_code supports at most 11 vertices");

    // Refine by (degree, sorted neighbor degrees); only orderings that list
    // refinement classes in a fixed order are tried.
    std::vector<std::vector<int>> key(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        key[v].push_back(g.degree(v));
        std::vector<int> nd;
        for (Vertex w : g.neighbors(v))
            nd.push_back(g.degree(w));
        std::sort(nd.rbegin(), nd.rend());
        key[v].insert(key[v].end(), nd.begin(), nd.end());
    }
    std::vector<Vertex> sorted(static_cast<std::size_t>(n));
    std::iota(sorted.begin(), sorted.end(), 0);
    std::stable_sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) { return key[a] > key[b]; });
    std::vector<std::vector<Vertex>> groups;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i == 0 || key[sorted[i]] != key[sorted[i - 1]])
            groups.emplace_back();
        groups.back().push_back(sorted[i]);
    }
    for (auto& grp : groups)
        std::sort(grp.begin(), grp.end());

    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::uint64_t best = ~std::uint64_t{0};
    auto evaluate = [&] {
        std::size_t at = 0;
        for (const auto& grp : groups)
            for (Vertex v : grp)
                order[at++] = v;
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
        best = std::min(best, code);
    };
    auto permute = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            evaluate();
            return;
        }
        auto& grp = groups[gi];
        do {
            self(self, gi + 1);
        } while (std::next_permutation(grp.begin(), grp.end()));
    };
    permute(permute, 0);
    return (static_cast<std::uint64_t>(n) << 56) | (n == 0 ? 0 : best);
}

std::optional<PlaneGraph> embed(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || !g.is_connected())
        return std::nullopt;
    if (n == 1)
        return PlaneGraph::from_rotation_system(1, {{}});

    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>,
                                             boost::property<boost::edge_index_t, int>>;
    using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;
    BoostGraph bg(static_cast<std::size_t>(n));
    int index = 0;
    for (const Edge& e : g.edges()) {
        auto [edge, added] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
        boost::put(boost::edge_index, bg, edge, index++);
    }
    std::vector<std::vector<BoostEdge>> embedding(static_cast<std::size_t>(n));
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar)
        return std::nullopt;

    Rotations rot(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        for (const BoostEdge& e : embedding[v]) {
            const auto s = static_cast<Vertex>(boost::source(e, bg));
            const auto t = static_cast<Vertex>(boost::target(e, bg));
            rot[v].push_back(s == v ? t : s);
        }
    }
    return PlaneGraph::from_rotation_system(n, std::move(rot));
}

std::vector<Graph> connected_planar_graphs(int n_max) {
    std::vector<Graph> out;
    std::vector<Graph> level;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::pair<std::uint64_t, Graph>> found;
        if (n == 1) {
            found.emplace_back(abstract_code(Graph(1)), Graph(1));
        } else {
            std::unordered_set<std::uint64_t> seen;
            for (const auto& g : level) {
                for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
                    Graph h(n);
                    for (const Edge& e : g.edges())
                        h.add_edge(e);
                    for (Vertex v = 0; v < n - 1; ++v)
                        if (mask >> v & 1)
                            h.add_edge(Edge(v, n - 1));
                    const auto code = abstract_code(h);
                    if (!seen.insert(code).second)
                        continue;
                    if (embed(h))
                        found.emplace_back(code, std::move(h));
                }
            }
        }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
            const int ma = a.second.edge_count();
            const int mb = b.second.edge_count();
            return std::tie(ma, a.first) < std::tie(mb, b.first);
        });
        level.clear();
        for (auto& [code, g] : found)
            level.push_back(std::move(g));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<PlaneGraph> tiny_plane_graphs(int n_max, EmbeddingMode mode) {
    if (n_max > 8)
        throw std::invalid_argument("tiny_plane_graphs is limited to n_max <= 8");
    if (n_max < 1)
        return {};
    if (mode == EmbeddingMode::all_embeddings)
        return all_plane_graphs(n_max);
    std::vector<PlaneGraph> out;
    for (const auto& g : connected_planar_graphs(n_max))
        out.push_back(canonical_plane_form(*embed(g)));
    return out;
}

}  // namespace ucpg::catalog
