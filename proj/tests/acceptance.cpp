// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "ucpg/catalog.hpp"
#include "ucpg/coloring.hpp"
#include "ucpg/criticality.hpp"
#include "ucpg/discharging.hpp"
#include "ucpg/families.hpp"
#include "ucpg/io_formats.hpp"
#include "ucpg/search.hpp"

#ifndef UCPG_FIXTURE_DIR
#error "UCPG_FIXTURE_DIR must point at tests/data"
#endif

using namespace ucpg;
using families::Rational;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::set<search::DegreePair> pair_degrees(const PlaneGraph& g) {
    std::set<search::DegreePair> out;
    for (const auto& p : adjacent_face_pairs(g))
        out.insert({p.degree_low, p.degree_high});
    return out;
}

const std::vector<PlaneGraph>& tiny7_all() {
    static const auto cat = catalog::tiny_plane_graphs(7, catalog::EmbeddingMode::all_embeddings);
    return cat;
}

const std::vector<search::SearchRecord>& tiny7_scan() {
    static const auto records = [] {
        search::ScanOptions opts;
        opts.jobs = std::max(1u, std::thread::hardware_concurrency());
        return search::scan_catalog(tiny7_all(), {}, opts);
    }();
    return records;
}

void criterion1(Outcome& o) {
    for (int k : {3, 5, 7, 9}) {
        const auto g = families::generate_gk(k);
        const int n = g.vertex_count();
        const int m = g.edge_count();
        o.require(n == 3 * k + 2, "n(G_" + std::to_string(k) + ")");
        o.require(m == 7 * k, "m(G_" + std::to_string(k) + ")");
        o.require(Rational(m) == Rational(7, 3) * n - Rational(14, 3), "m = 7n/3 - 14/3");
        o.detail << " G_" << k << ":(n=" << n << ",m=" << m << ")";
    }
}

void criterion2(Outcome& o) {
    for (int k : {3, 5, 7, 9}) {
        const Graph g = families::generate_gk(k).abstract();
        const auto p = unique_coloring(g, 3);
        o.require(p.has_value(), "G_" + std::to_string(k) + " uniquely 3-colorable");
        if (!p)
            continue;
        const auto labels = p->labels(g.vertex_count());
        const int cu = labels[families::gk_u];
        const int cw = labels[families::gk_w];
        bool pattern = cu != cw;
        for (int i = 0; i < 3 * k; ++i) {
            const int c = labels[families::gk_cycle(i)];
            if (i % 3 == 0)
                pattern = pattern && c == cu;
            else if (i % 3 == 2)
                pattern = pattern && c == cw;
            else
                pattern = pattern && c != cu && c != cw;
        }
        o.require(pattern, "G_" + std::to_string(k) + " class pattern");
        o.require(criticality_report(g, 3).is_edge_critical, "G_" + std::to_string(k) + " edge-critical");
    }
    o.detail << " k=3,5,7,9 unique, pattern ok, edge-critical";
}

void criterion3(Outcome& o) {
    for (int k : {3, 5, 7, 9}) {
        const auto pairs = pair_degrees(families::generate_gk(k));
        o.require(pairs.contains({3, 4}) && !pairs.contains({3, 3}) && !pairs.contains({3, 5}),
                  "G_" + std::to_string(k) + " face pairs");
    }
    for (int n = 6; n <= 20; ++n) {
        const auto pairs = pair_degrees(families::generate_fan(n));
        o.require(!pairs.contains({3, 4}) && !pairs.contains({3, 5}), "F_" + std::to_string(n) + " face pairs");
    }
    const auto oct = pair_degrees(families::generate_octahedron());
    o.require(oct == std::set<search::DegreePair>{{3, 3}}, "octahedron face pairs");
    o.detail << " G_k {3,5,7,9}, F_6..F_20, octahedron";
}

int count_violations(const std::string& name, std::size_t* unique) {
    int v = 0;
    for (const auto& r : tiny7_scan()) {
        if (unique && r.uniquely_3_colorable)
            ++*unique;
        for (const auto& s : r.violations)
            v += s == name;
    }
    return v;
}

void criterion4(Outcome& o) {
    std::size_t unique = 0;
    const int v = count_violations(search::check::theorem12, &unique);
    o.require(v == 0, std::to_string(v) + " violations");
    o.require(unique > 0, "no uniquely 3-colorable graphs examined");
    o.detail << " plane graphs=" << tiny7_all().size() << " unique3=" << unique << " violations=" << v;
}

void criterion5(Outcome& o) {
    for (const auto& name : {search::check::theorem11, search::check::edge_bound, search::check::triangles}) {
        const int v = count_violations(name, nullptr);
        o.require(v == 0, name);
        o.detail << " " << name << "=" << v;
    }
}

void criterion6(Outcome& o) {
    const auto y9 = families::generate_y9();
    const auto ledger = audit(y9);
    o.require(ledger.hypothesis_met, "Y9 hypothesis");
    for (const auto& fc : ledger.faces) {
        o.require(fc.final >= Thirds::whole(4), "final charge >= 4");
        if (fc.degree == 3)
            o.require(fc.final == Thirds::whole(4), "3-face at 4");
        if (fc.degree == 6)
            o.require(fc.final == Thirds{16}, "6-face at 16/3");
    }
    o.require(ledger.total_final == Thirds::whole(2LL * y9.edge_count()) && ledger.total_final == Thirds::whole(24),
              "conservation = 24");
    o.require(y9.edge_count() == 12 && ledger.face_count == 5 && ledger.edges_at_least_twice_faces, "12 >= 2*5");

    int met = 0;
    for (const auto& g : tiny7_all()) {
        const auto l = audit(g);
        if (!l.hypothesis_met)
            continue;
        ++met;
        o.require(l.conservation_holds && l.edges_at_least_twice_faces, "catalog graph m >= 2|F|");
    }
    o.require(met > 0, "no catalog graph meets the hypothesis");
    o.detail << " Y9 sum=" << ledger.total_final.str() << " catalog graphs meeting hypothesis=" << met;
}

void criterion7(Outcome& o) {
    const auto cat = catalog::tiny_plane_graphs(8);
    std::size_t mismatches = 0;
    for (const auto& g : cat) {
        const Graph abs = g.abstract();
        const auto census = partition_census(abs, 3);
        const BigInt p = chromatic_polynomial_value(abs, 3);
        if (p != 3 * census.classes(1) + 6 * census.classes(2) + 6 * census.classes(3))
            ++mismatches;
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.detail << " graphs=" << cat.size() << " mismatches=" << mismatches;
}

void criterion8(Outcome& o) {
    const auto b11 = families::size_bounds(11);
    const auto b17 = families::size_bounds(17);
    o.require(b11.lower == Rational(21) && b11.upper == Rational(71, 3), "size_bounds(11)");
    o.require(b17.lower == Rational(35) && b17.upper == Rational(119, 3), "size_bounds(17)");
    o.detail << " (" << families::format_rational(b11.lower) << ", " << families::format_rational(b11.upper)
             << ") (" << families::format_rational(b17.lower) << ", " << families::format_rational(b17.upper)
             << ")";
}

void criterion9(Outcome& o) {
    const auto path = std::filesystem::path(UCPG_FIXTURE_DIR) / "catalog100.pc";
    const auto bytes = io::read_file_bytes(path);
    io::PlanarCodeReader reader(bytes);
    std::vector<PlaneGraph> graphs;
    while (auto g = reader.next())
        graphs.push_back(std::move(*g));
    o.require(graphs.size() == 100, "fixture holds " + std::to_string(graphs.size()) + " graphs");
    const auto out = io::write_planar_code(graphs, reader.had_header());
    o.require(out == bytes, "bytes differ");
    o.detail << " graphs=" << graphs.size() << " bytes=" << bytes.size();
}

void criterion10(Outcome& o) {
    std::vector<PlaneGraph> cat = tiny7_all();
    cat.push_back(families::generate_gk(3));
    cat.push_back(families::generate_gk(5));
    const auto s = search::conjecture1_report(cat, std::max(1u, std::thread::hardware_concurrency()));
    bool only_34 = true;
    o.detail << " qualifying=" << s.qualifying << " histogram={";
    for (const auto& [k, c] : s.histogram) {
        only_34 = only_34 && (k == 3 || k == 4);
        o.detail << " " << k << ":" << c;
    }
    o.detail << " } candidates=" << s.candidates.size();
    o.require(only_34, "histogram outside {3,4}");
    o.require(s.candidates.empty(), "candidates found");
    o.require(s.histogram.contains(4), "G_3/G_5 missing from histogram");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "G_k family sizes", 1.0, criterion1},
        {2, "G_k unique 3-coloring and edge-criticality", 60.0, criterion2},
        {3, "face-structure claims", 0, criterion3},
        {4, "adjacent (3,k<=5) faces in unique graphs, n <= 7 all embeddings", 600.0, criterion4},
        {5, "class unions, edge bound, triangle counts, n <= 7", 0, criterion5},
        {6, "discharging audit", 0, criterion6},
        {7, "P(G,3) = 3N1 + 6N2 + 6N3 for n <= 8", 0, criterion7},
        {8, "size bounds for n = 11, 17", 0, criterion8},
        {9, "planar_code round trip on a 100-graph fixture", 0, criterion9},
        {10, "adjacent (3,k) histogram for 3-connected unique graphs", 0, criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = Clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.budget_s > 0 && secs >= c.budget_s) {
            o.ok = false;
            o.detail << " [over time budget " << c.budget_s << " s]";
        }
        failures += !o.ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", secs);
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << timing << ")"
                  << o.detail.str() << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
