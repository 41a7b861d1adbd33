#pragma once

#include <boost/rational.hpp>

#include <map>
#include <string>

#include "ucpg/plane_graph.hpp"

namespace ucpg::families {

using Rational = boost::rational<long long>;

/// Published statistics of a generated family member.
struct FamilyStats {
    int n = 0;
    int m = 0;
    /// degree -> number of faces
    std::map<int, int> face_degrees;
    bool uniquely_3_colorable = false;
    bool edge_critical = false;
};

/// Labels used by generate_gk: u = 0, w = 1, v_i = i + 2.
inline constexpr Vertex gk_u = 0;
inline constexpr Vertex gk_w = 1;
constexpr Vertex gk_cycle(int i) { return i + 2; }

/// Odd cycle v_0..v_{3k-1} with hub u inside (joined to v_i, i = 1,2 mod 3)
/// and hub w outside (joined to v_i, i = 0,1 mod 3). k odd, k >= 3.
PlaneGraph generate_gk(int k);
FamilyStats gk_stats(int k);

/// Fan: hub 0 joined to every vertex of the path 1..n-1. n >= 3.
PlaneGraph generate_fan(int n);
FamilyStats fan_stats(int n);

/// Octahedron: poles 0 and 5, equator 1,2,3,4 in order.
PlaneGraph generate_octahedron();
FamilyStats octahedron_stats();

/// Triangular prism with its three vertical edges subdivided: inner
/// triangle 0,1,2, subdivision vertices 3,4,5, outer triangle 6,7,8.
PlaneGraph generate_y9();

struct SizeBounds {
    Rational lower;
    Rational upper;
    /// n >= 11, n odd and n = 2 mod 3: some G_k attains the lower bound.
    bool lower_witnessed = false;
};

/// (7n - 14)/3 <= size(n) <= (8n - 17)/3. Throws for n < 3.
SizeBounds size_bounds(long long n);

std::string format_rational(const Rational& r);

}  // namespace ucpg::families
