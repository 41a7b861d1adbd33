#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <vector>

#include "ucpg/plane_graph.hpp"

namespace ucpg {

using BigInt = boost::multiprecision::cpp_int;

/// Partition of V into independent color classes.
///
/// Classes are sorted internally and ordered by their smallest vertex, so two
/// partitions compare equal iff they describe the same split of V.
class ColorPartition {
public:
    ColorPartition() = default;
    explicit ColorPartition(std::vector<std::vector<Vertex>> classes);

    /// Builds the partition induced by a labeling (label[v] = color of v).
    static ColorPartition from_labels(std::span<const int> labels);

    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<Vertex>>& classes() const { return classes_; }
    std::span<const Vertex> members(int cls) const { return classes_.at(static_cast<std::size_t>(cls)); }

    /// Class index of every vertex; requires the partition to cover 0..n-1.
    std::vector<int> labels(int n) const;

    /// True iff the classes cover exactly 0..n-1 and each is independent in g.
    bool is_proper_for(const Graph& g) const;

    bool operator==(const ColorPartition&) const = default;

private:
    std::vector<std::vector<Vertex>> classes_;
};

/// counts[i-1] = N_i, the number of partitions of V into exactly i nonempty
/// independent classes.
struct PartitionCensus {
    std::vector<BigInt> counts;

    const BigInt& classes(int i) const { return counts.at(static_cast<std::size_t>(i - 1)); }
    /// Number of proper colorings with k labeled colors: sum of N_i * k!/(k-i)!.
    BigInt labeled_colorings(int k) const;
};

/// Exact census for 1..k classes by backtracking. Vertices are tried in
/// descending degree order and a vertex may open class i only once classes
/// 0..i-1 are open, so every partition is met exactly once.
PartitionCensus partition_census(const Graph& g, int k);

/// P(g, k) by deletion-contraction with memoization. Practical for n <= ~30
/// sparse or n <= 12 arbitrary graphs.
BigInt chromatic_polynomial_value(const Graph& g, int k);

/// The unique k-class partition when N_k = 1 and N_i = 0 for i < k, else
/// nullopt. Stops as soon as a second partition appears.
std::optional<ColorPartition> unique_coloring(const Graph& g, int k);
bool is_uniquely_k_colorable(const Graph& g, int k);

struct ClassPairVerdict {
    int class_a = 0;
    int class_b = 0;
    bool connected = false;
};

struct ClassPairConnectivity {
    std::vector<ClassPairVerdict> pairs;
    bool all_connected = false;
};

/// For each pair of classes, whether g induced on their union is connected.
/// Throws std::invalid_argument unless p is a proper partition of g.
ClassPairConnectivity class_pair_connectivity(const Graph& g, const ColorPartition& p);

struct ClassPairSubgraph {
    /// E_ij: edges with one end in class i and the other in class j.
    std::vector<Edge> edges;
    /// Connected on the support (members of both classes) with |E| = |V| - 1.
    bool is_tree = false;
    /// Maximal paths whose interior vertices have degree 2 in E_ij; a cycle
    /// without branch vertices is listed with its first vertex repeated.
    std::vector<std::vector<Vertex>> paths;
    /// All paths join the same two endpoints and share no interior vertex.
    bool internally_disjoint_paths = false;
};

ClassPairSubgraph class_pair_subgraph(const Graph& g, const ColorPartition& p, int class_i, int class_j);

/// (k-1)n - k(k-1)/2.
long long edge_lower_bound(long long n, long long k);

}  // namespace ucpg
