#include "ucpg/criticality.hpp"

#include "ucpg/coloring.hpp"

namespace ucpg {

CriticalityReport criticality_report(const Graph& g, int k, CriticalityOptions options) {
    if (!is_uniquely_k_colorable(g, k))
        throw NotUniquelyColorable("graph is not uniquely " + std::to_string(k) + "-colorable");

    CriticalityReport report;
    // Any uniquely k-colorable graph has at least the bound, so meeting it
    // exactly leaves no removable edge.
    if (g.edge_count() == edge_lower_bound(g.vertex_count(), k)) {
        report.is_edge_critical = true;
        report.decided_by_edge_bound = true;
        if (!options.paranoid)
            return report;
    }

    Graph scratch = g;
    for (const Edge& e : g.edges()) {
        scratch.remove_edge(e);
        if (is_uniquely_k_colorable(scratch, k))
            report.removable_edges.push_back(e);
        scratch.add_edge(e);
    }
    report.is_edge_critical = report.removable_edges.empty();
    return report;
}

}  // namespace ucpg
