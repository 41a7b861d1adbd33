#pragma once

#include <climits>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ucpg/plane_graph.hpp"

namespace ucpg::search {

/// Adjacent face degree pair, low degree first.
using DegreePair = std::pair<int, int>;

/// Property checks a scan can apply to uniquely 3-colorable graphs, plus the
/// discharging check that applies to every graph.
namespace check {
inline const std::string theorem12 = "theorem12";    // adjacent (3,k) pair with k <= 5
inline const std::string theorem11 = "theorem11";    // class-pair unions connected
inline const std::string edge_bound = "edge-bound";  // m >= 2n - 3
inline const std::string triangles = "triangles";    // >= 2 for n >= 4, >= 3 for n >= 5
inline const std::string lemma21 = "lemma21";        // hypothesis => m >= 2|F| and m <= 2n - 4
}  // namespace check

std::set<std::string> all_checks();

struct SearchRecord {
    std::size_t id = 0;
    int n = 0;
    int m = 0;
    int faces = 0;
    bool uniquely_3_colorable = false;
    std::set<DegreePair> face_pair_degrees;
    /// Smallest k with an adjacent (3,k) pair.
    std::optional<int> min_adjacent_3k;
    long long triangle_count = 0;
    bool three_connected = false;
    bool has_three_face = false;
    bool discharging_hypothesis = false;
    std::vector<std::string> violations;

    bool operator==(const SearchRecord&) const = default;
};

/// Evaluates every property of one graph. Only checks named in `checks`
/// may produce violations.
SearchRecord evaluate(const PlaneGraph& g, std::size_t id, const std::set<std::string>& checks = all_checks());

/// Conjunction of predicates; default-constructed accepts everything.
struct FilterSpec {
    std::set<DegreePair> require_pairs;
    std::set<DegreePair> forbid_pairs;
    bool require_unique3 = false;
    bool require_three_connected = false;
    int n_min = 1;
    int n_max = INT_MAX;

    bool accepts(const SearchRecord& r) const;
};

struct ScanOptions {
    unsigned jobs = 1;
    std::set<std::string> checks = all_checks();
    /// Rewrite the checkpoint after every this many graphs (0 disables).
    std::size_t checkpoint_every = 0;
    std::filesystem::path checkpoint_file;
};

/// Records for the graphs passing `filter`, in catalog order. A matching
/// checkpoint file is resumed from its recorded offset.
std::vector<SearchRecord> scan_catalog(std::span<const PlaneGraph> catalog, const FilterSpec& filter,
                                       const ScanOptions& options = {});

struct Conjecture1Summary {
    std::size_t examined = 0;
    /// 3-connected uniquely 3-colorable graphs seen.
    std::size_t qualifying = 0;
    /// min adjacent (3,k) -> count; graphs without any (3,k) pair under key 0.
    std::map<int, std::size_t> histogram;
    /// Qualifying graphs whose minimum k is >= 5 or missing.
    std::vector<SearchRecord> candidates;
};

Conjecture1Summary conjecture1_report(std::span<const PlaneGraph> catalog, unsigned jobs = 1);

/// Uniquely 3-colorable graphs avoiding every forbidden pair. Forbidden pairs
/// must be drawn from (3,3), (3,4), (3,5), at most two of them.
std::vector<SearchRecord> witness_search(std::span<const PlaneGraph> catalog, const std::set<DegreePair>& forbidden,
                                         unsigned jobs = 1);

/// One line of JSON, fields in a fixed order.
std::string to_json_line(const SearchRecord& r);
SearchRecord from_json_line(const std::string& line);

std::string format_pair(const DegreePair& p);
/// Parses "3-4" or "3,4".
DegreePair parse_pair(const std::string& text);

}  // namespace ucpg::search
