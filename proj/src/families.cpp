#include "ucpg/families.hpp"

#include <sstream>
#include <stdexcept>

namespace ucpg::families {

PlaneGraph generate_gk(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("G_k needs k odd and k >= 3");
    const int cycle = 3 * k;
    const int n = cycle + 2;
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
    auto touches_u = [](int i) { return i % 3 == 1 || i % 3 == 2; };
    auto touches_w = [](int i) { return i % 3 == 0 || i % 3 == 1; };

    // The cycle is drawn counterclockwise around u; w sits outside, so its
    // counterclockwise order runs against the cycle.
    for (int i = 0; i < cycle; ++i)
        if (touches_u(i))
            rot[gk_u].push_back(gk_cycle(i));
    for (int i = cycle - 1; i >= 0; --i)
        if (touches_w(i))
            rot[gk_w].push_back(gk_cycle(i));
    for (int i = 0; i < cycle; ++i) {
        auto& r = rot[gk_cycle(i)];
        if (touches_w(i))
            r.push_back(gk_w);
        r.push_back(gk_cycle((i + 1) % cycle));
        if (touches_u(i))
            r.push_back(gk_u);
        r.push_back(gk_cycle((i + cycle - 1) % cycle));
    }
    return PlaneGraph::from_rotation_system(n, std::move(rot));
}

FamilyStats gk_stats(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("G_k needs k odd and k >= 3");
    return FamilyStats{3 * k + 2, 7 * k, {{3, 2 * k}, {4, 2 * k}}, true, true};
}

PlaneGraph generate_fan(int n) {
    if (n < 3)
        throw std::invalid_argument("fan needs n >= 3");
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
    // Path 1..n-1 left to right, hub below.
    for (Vertex p = n - 1; p >= 1; --p)
        rot[0].push_back(p);
    for (Vertex p = 1; p < n; ++p) {
        if (p + 1 < n)
            rot[p].push_back(p + 1);
        if (p - 1 >= 1)
            rot[p].push_back(p - 1);
        rot[p].push_back(0);
    }
    return PlaneGraph::from_rotation_system(n, std::move(rot));
}

FamilyStats fan_stats(int n) {
    if (n < 3)
        throw std::invalid_argument("fan needs n >= 3");
    std::map<int, int> faces{{3, n - 2}};
    faces[n] += 1;
    return FamilyStats{n, 2 * n - 3, faces, true, true};
}

PlaneGraph generate_octahedron() {
    return PlaneGraph::from_rotation_system(6, {
                                                   {1, 2, 3, 4},
                                                   {5, 2, 0, 4},
                                                   {5, 3, 0, 1},
                                                   {5, 4, 0, 2},
                                                   {5, 1, 0, 3},
                                                   {4, 3, 2, 1},
                                               });
}

FamilyStats octahedron_stats() { return FamilyStats{6, 12, {{3, 8}}, true, false}; }

PlaneGraph generate_y9() {
    std::vector<std::vector<Vertex>> rot(9);
    for (int i = 0; i < 3; ++i) {
        const int next = (i + 1) % 3;
        const int prev = (i + 2) % 3;
        rot[i] = {3 + i, next, prev};
        rot[3 + i] = {6 + i, i};
        rot[6 + i] = {6 + next, 3 + i, 6 + prev};
    }
    return PlaneGraph::from_rotation_system(9, std::move(rot));
}

SizeBounds size_bounds(long long n) {
    if (n < 3)
        throw std::invalid_argument("size bounds need n >= 3");
    SizeBounds b;
    b.lower = Rational(7 * n - 14, 3);
    b.upper = Rational(8 * n - 17, 3);
    b.lower_witnessed = n >= 11 && n % 2 == 1 && n % 3 == 2;
    return b;
}

std::string format_rational(const Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1)
        out << '/' << r.denominator();
    return out.str();
}

}  // namespace ucpg::families
