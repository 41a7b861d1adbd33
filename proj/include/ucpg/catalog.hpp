#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ucpg/plane_graph.hpp"

namespace ucpg::catalog {

/// Canonical code of an embedded graph up to orientation-preserving or
/// reversing homeomorphism of the sphere: the lexicographically least
/// breadth-first rotation code over every starting dart and both
/// orientations.
std::vector<std::uint8_t> plane_code(const PlaneGraph& g);

/// The relabeled (possibly mirrored) embedding whose plane_code is minimal;
/// isomorphic plane graphs map to identical values.
PlaneGraph canonical_plane_form(const PlaneGraph& g);

/// Minimum upper-triangle adjacency encoding over all vertex orderings that
/// respect the degree refinement. Requires n <= 11.
std::uint64_t abstract_code(const Graph& g);

/// One plane embedding of a planar connected graph, or nullopt if none.
std::optional<PlaneGraph> embed(const Graph& g);

enum class EmbeddingMode { one_per_graph, all_embeddings };

/// All connected simple plane graphs with 1..n_max vertices in a
/// deterministic order (vertex count, edge count, canonical code).
/// one_per_graph keeps one embedding per abstract isomorphism class;
/// all_embeddings keeps every embedding up to sphere homeomorphism.
/// n_max <= 8.
std::vector<PlaneGraph> tiny_plane_graphs(int n_max, EmbeddingMode mode = EmbeddingMode::one_per_graph);

/// Connected planar abstract graphs on 1..n_max vertices up to isomorphism.
std::vector<Graph> connected_planar_graphs(int n_max);

}  // namespace ucpg::catalog
