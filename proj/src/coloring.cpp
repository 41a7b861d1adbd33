#include "ucpg/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ucpg {

ColorPartition::ColorPartition(std::vector<std::vector<Vertex>> classes) : classes_(std::move(classes)) {
    for (auto& c : classes_) {
        if (c.empty())
            throw std::invalid_argument("color classes must be nonempty");
        std::sort(c.begin(), c.end());
    }
    std::sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

ColorPartition ColorPartition::from_labels(std::span<const int> labels) {
    std::map<int, std::vector<Vertex>> by_label;
    for (std::size_t v = 0; v < labels.size(); ++v)
        by_label[labels[v]].push_back(static_cast<Vertex>(v));
    std::vector<std::vector<Vertex>> classes;
    classes.reserve(by_label.size());
    for (auto& [label, members] : by_label)
        classes.push_back(std::move(members));
    return ColorPartition(std::move(classes));
}

std::vector<int> ColorPartition::labels(int n) const {
    std::vector<int> out(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < class_count(); ++c) {
        for (Vertex v : classes_[c]) {
            if (v < 0 || v >= n || out[v] != -1)
                throw std::invalid_argument("partition does not match the vertex set");
            out[v] = c;
        }
    }
    if (std::find(out.begin(), out.end(), -1) != out.end())
        throw std::invalid_argument("partition does not cover every vertex");
    return out;
}

bool ColorPartition::is_proper_for(const Graph& g) const {
    std::vector<int> label;
    try {
        label = labels(g.vertex_count());
    } catch (const std::invalid_argument&) {
        return false;
    }
    for (const Edge& e : g.edges())
        if (label[e.u] == label[e.v])
            return false;
    return true;
}

BigInt PartitionCensus::labeled_colorings(int k) const {
    BigInt total = 0;
    for (int i = 1; i <= static_cast<int>(counts.size()) && i <= k; ++i) {
        BigInt falling = 1;
        for (int j = 0; j < i; ++j)
            falling *= (k - j);
        total += counts[i - 1] * falling;
    }
    return total;
}

namespace {

constexpr int kMaxClasses = 16;

/// Symmetry-reduced backtracking over class assignments with forward
/// checking. `on_leaf(classes_used, labels)` returns false to stop.
class PartitionSearch {
public:
    using Visitor = std::function<bool(int, const std::vector<int>&)>;

    PartitionSearch(const Graph& g, int k) : g_(g), k_(k) {
        if (k < 1 || k > kMaxClasses)
            throw std::invalid_argument("class count must be in 1.." + std::to_string(kMaxClasses));
        const int n = g.vertex_count();
        order_.resize(static_cast<std::size_t>(n));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        label_.assign(static_cast<std::size_t>(n), -1);
        blocked_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
        blocked_count_.assign(static_cast<std::size_t>(n), 0);
    }

    void run(const Visitor& visit) {
        visit_ = &visit;
        stopped_ = false;
        descend(0, 0);
    }

private:
    int& blocked(Vertex v, int c) { return blocked_[static_cast<std::size_t>(v) * k_ + c]; }

    // Returns false if some unassigned neighbor has no class left.
    bool assign(Vertex v, int c) {
        label_[v] = c;
        bool ok = true;
        for (Vertex w : g_.neighbors(v)) {
            if (label_[w] != -1)
                continue;
            if (blocked(w, c)++ == 0 && ++blocked_count_[w] == k_)
                ok = false;
        }
        return ok;
    }

    void unassign(Vertex v, int c) {
        for (Vertex w : g_.neighbors(v)) {
            if (label_[w] != -1)
                continue;
            if (--blocked(w, c) == 0)
                --blocked_count_[w];
        }
        label_[v] = -1;
    }

    void descend(std::size_t depth, int open) {
        if (depth == order_.size()) {
            if (!(*visit_)(open, label_))
                stopped_ = true;
            return;
        }
        const Vertex v = order_[depth];
        const int limit = std::min(open + 1, k_);
        for (int c = 0; c < limit && !stopped_; ++c) {
            if (c < open && blocked(v, c) > 0)
                continue;
            if (assign(v, c))
                descend(depth + 1, c == open ? open + 1 : open);
            unassign(v, c);
        }
    }

    const Graph& g_;
    int k_;
    std::vector<Vertex> order_;
    std::vector<int> label_;
    std::vector<int> blocked_;
    std::vector<int> blocked_count_;
    const Visitor* visit_ = nullptr;
    bool stopped_ = false;
};

}  // namespace

PartitionCensus partition_census(const Graph& g, int k) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("census needs at least one vertex");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(k), 0);
    PartitionSearch search(g, k);
    search.run([&counts](int used, const std::vector<int>&) {
        ++counts[static_cast<std::size_t>(used - 1)];
        return true;
    });
    PartitionCensus census;
    census.counts.reserve(counts.size());
    for (auto c : counts)
        census.counts.emplace_back(c);
    return census;
}

std::optional<ColorPartition> unique_coloring(const Graph& g, int k) {
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    if (g.vertex_count() < k)
        return std::nullopt;
    int full = 0;
    bool fewer = false;
    std::vector<int> witness;
    PartitionSearch search(g, k);
    search.run([&](int used, const std::vector<int>& labels) {
        if (used < k) {
            fewer = true;
            return false;
        }
        if (++full == 1)
            witness = labels;
        return full < 2;
    });
    if (fewer || full != 1)
        return std::nullopt;
    return ColorPartition::from_labels(witness);
}

bool is_uniquely_k_colorable(const Graph& g, int k) { return unique_coloring(g, k).has_value(); }

namespace {

/// Deletion-contraction over adjacency bitmasks (n <= 64).
class ChromaticEvaluator {
public:
    explicit ChromaticEvaluator(int k) : k_(k) {}

    BigInt evaluate(std::vector<std::uint64_t> adj) {
        BigInt factor = 1;
        // Peel isolated vertices (factor k) and leaves (factor k-1).
        bool changed = true;
        while (changed && !adj.empty()) {
            changed = false;
            for (std::size_t v = 0; v < adj.size(); ++v) {
                const int deg = std::popcount(adj[v]);
                if (deg > 1)
                    continue;
                factor *= (deg == 0 ? k_ : k_ - 1);
                remove_vertex(adj, v);
                changed = true;
                break;
            }
        }
        if (factor == 0)
            return 0;
        const std::size_t r = adj.size();
        if (r == 0)
            return factor;

        std::size_t edges = 0;
        for (auto row : adj)
            edges += static_cast<std::size_t>(std::popcount(row));
        if (edges == r * (r - 1)) {
            BigInt falling = 1;
            for (std::size_t j = 0; j < r; ++j)
                falling *= (k_ - static_cast<int>(j));
            return factor * falling;
        }

        std::string key(reinterpret_cast<const char*>(adj.data()), adj.size() * sizeof(std::uint64_t));
        if (auto it = memo_.find(key); it != memo_.end())
            return factor * it->second;

        std::size_t u = 0;
        for (std::size_t v = 1; v < r; ++v)
            if (std::popcount(adj[v]) > std::popcount(adj[u]))
                u = v;
        const std::size_t w = static_cast<std::size_t>(std::countr_zero(adj[u]));

        auto deleted = adj;
        deleted[u] &= ~(std::uint64_t{1} << w);
        deleted[w] &= ~(std::uint64_t{1} << u);

        auto contracted = deleted;
        const std::uint64_t merged = contracted[w];
        contracted[u] |= merged;
        for (std::size_t x = 0; x < r; ++x)
            if (merged >> x & 1)
                contracted[x] |= std::uint64_t{1} << u;
        remove_vertex(contracted, w);

        BigInt value = evaluate(std::move(deleted)) - evaluate(std::move(contracted));
        memo_.emplace(std::move(key), value);
        return factor * value;
    }

private:
    static void remove_vertex(std::vector<std::uint64_t>& adj, std::size_t v) {
        adj.erase(adj.begin() + static_cast<std::ptrdiff_t>(v));
        const std::uint64_t low = (std::uint64_t{1} << v) - 1;
        for (auto& row : adj)
            row = (row & low) | ((row >> 1) & ~low);
    }

    int k_;
    std::unordered_map<std::string, BigInt> memo_;
};

}  // namespace

BigInt chromatic_polynomial_value(const Graph& g, int k) {
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    const int n = g.vertex_count();
    if (n > 64)
        throw std::invalid_argument("chromatic polynomial supports at most 64 vertices");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= std::uint64_t{1} << e.v;
        adj[e.v] |= std::uint64_t{1} << e.u;
    }
    ChromaticEvaluator eval(k);
    return eval.evaluate(std::move(adj));
}

ClassPairConnectivity class_pair_connectivity(const Graph& g, const ColorPartition& p) {
    if (!p.is_proper_for(g))
        throw std::invalid_argument("not a proper partition of the graph's vertices");
    const auto label = p.labels(g.vertex_count());
    ClassPairConnectivity out;
    out.all_connected = true;
    for (int a = 0; a < p.class_count(); ++a) {
        for (int b = a + 1; b < p.class_count(); ++b) {
            std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
            std::vector<Vertex> stack{p.members(a).front()};
            seen[stack.back()] = 1;
            std::size_t reached = 1;
            while (!stack.empty()) {
                const Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : g.neighbors(x)) {
                    if (seen[y] || (label[y] != a && label[y] != b))
                        continue;
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
            }
            const bool connected = reached == p.members(a).size() + p.members(b).size();
            out.pairs.push_back({a, b, connected});
            out.all_connected = out.all_connected && connected;
        }
    }
    return out;
}

ClassPairSubgraph class_pair_subgraph(const Graph& g, const ColorPartition& p, int class_i, int class_j) {
    if (class_i == class_j || class_i < 0 || class_j < 0 || class_i >= p.class_count() ||
        class_j >= p.class_count())
        throw std::invalid_argument("invalid class pair");
    const auto label = p.labels(g.vertex_count());
    const int n = g.vertex_count();
    auto in_pair = [&](Vertex v) { return label[v] == class_i || label[v] == class_j; };

    ClassPairSubgraph out;
    std::vector<std::vector<Vertex>> sub(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        if (in_pair(e.u) && in_pair(e.v) && label[e.u] != label[e.v]) {
            out.edges.push_back(e);
            sub[e.u].push_back(e.v);
            sub[e.v].push_back(e.u);
        }
    }

    const std::size_t support = p.members(class_i).size() + p.members(class_j).size();
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<Vertex> stack{p.members(class_i).front()};
        seen[stack.back()] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : sub[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
        }
        out.is_tree = reached == support && out.edges.size() + 1 == support;
    }

    // Walk maximal paths between branch vertices (degree != 2).
    std::map<Edge, bool> used;
    auto walk = [&](Vertex start, Vertex first) {
        std::vector<Vertex> path{start};
        Vertex prev = start;
        Vertex cur = first;
        used[Edge(prev, cur)] = true;
        while (true) {
            path.push_back(cur);
            if (sub[cur].size() != 2 || cur == start)
                break;
            const Vertex next = sub[cur][0] == prev ? sub[cur][1] : sub[cur][0];
            prev = cur;
            cur = next;
            used[Edge(prev, cur)] = true;
        }
        return path;
    };
    for (Vertex v = 0; v < n; ++v) {
        if (!in_pair(v) || sub[v].size() == 2)
            continue;
        for (Vertex w : sub[v])
            if (!used[Edge(v, w)])
                out.paths.push_back(walk(v, w));
    }
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : sub[v])
            if (!used[Edge(v, w)])
                out.paths.push_back(walk(v, w));

    if (!out.paths.empty()) {
        const Vertex a = out.paths.front().front();
        const Vertex b = out.paths.front().back();
        bool ok = a != b;
        std::vector<int> interior_hits(static_cast<std::size_t>(n), 0);
        for (const auto& path : out.paths) {
            const bool same_ends = (path.front() == a && path.back() == b) || (path.front() == b && path.back() == a);
            ok = ok && same_ends;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                ok = ok && ++interior_hits[path[i]] == 1;
        }
        out.internally_disjoint_paths = ok;
    }
    return out;
}

long long edge_lower_bound(long long n, long long k) {
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    if (n < k)
        throw std::invalid_argument("edge bound needs n >= k");
    return (k - 1) * n - k * (k - 1) / 2;
}

}  // namespace ucpg
