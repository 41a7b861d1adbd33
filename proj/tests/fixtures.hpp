#pragma once

#include "ucpg/plane_graph.hpp"

namespace fixture {

using ucpg::PlaneGraph;

inline PlaneGraph k2() { return PlaneGraph::from_rotation_system(2, {{1}, {0}}); }

inline PlaneGraph k3() { return PlaneGraph::from_rotation_system(3, {{1, 2}, {2, 0}, {0, 1}}); }

inline PlaneGraph k4() { return PlaneGraph::from_rotation_system(4, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}); }

inline PlaneGraph c5() { return PlaneGraph::from_rotation_system(5, {{1, 4}, {2, 0}, {3, 1}, {4, 2}, {0, 3}}); }

/// Triangles 0,1,2 and 3,4,5 joined by the bridge 2-3.
inline PlaneGraph two_triangles() {
    return PlaneGraph::from_rotation_system(6, {{1, 2}, {2, 0}, {0, 1, 3}, {2, 4, 5}, {5, 3}, {3, 4}});
}

}  // namespace fixture
