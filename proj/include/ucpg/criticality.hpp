#pragma once

#include <stdexcept>
#include <vector>

#include "ucpg/plane_graph.hpp"

namespace ucpg {

class NotUniquelyColorable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CriticalityReport {
    bool is_edge_critical = false;
    /// Edges e (canonical order) such that G - e is still uniquely k-colorable.
    std::vector<Edge> removable_edges;
    /// Set when the edge count met the lower bound and per-edge checks were skipped.
    bool decided_by_edge_bound = false;
};

struct CriticalityOptions {
    /// Run every per-edge check even when the edge bound already decides.
    bool paranoid = false;
};

/// Edge-criticality of a uniquely k-colorable graph. Throws
/// NotUniquelyColorable otherwise.
CriticalityReport criticality_report(const Graph& g, int k, CriticalityOptions options = {});

}  // namespace ucpg
