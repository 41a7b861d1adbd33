#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "ucpg/catalog.hpp"
#include "ucpg/coloring.hpp"
#include "ucpg/discharging.hpp"
#include "ucpg/families.hpp"

using namespace ucpg;

TEST_CASE("Thirds printing") {
    CHECK(Thirds{16}.str() == "16/3");
    CHECK(Thirds{12}.str() == "4");
    CHECK(Thirds{-1}.str() == "-1/3");
    CHECK(Thirds::whole(0).str() == "0");
}

TEST_CASE("audit of Y9") {
    const auto y9 = families::generate_y9();
    CHECK(y9.vertex_count() == 9);
    CHECK(y9.edge_count() == 12);
    const auto ledger = audit(y9);
    REQUIRE(ledger.hypothesis_met);
    CHECK(ledger.face_count == 5);

    int threes = 0;
    int sixes = 0;
    for (const auto& fc : ledger.faces) {
        CHECK(fc.initial == Thirds::whole(fc.degree));
        if (fc.degree == 3) {
            ++threes;
            CHECK(fc.final == Thirds::whole(4));
        } else {
            REQUIRE(fc.degree == 6);
            ++sixes;
            CHECK(fc.final == Thirds{16});
        }
    }
    CHECK(threes == 2);
    CHECK(sixes == 3);
    CHECK(ledger.transfers.size() == 6);
    for (const auto& t : ledger.transfers) {
        CHECK(t.amount == Thirds{1});
        CHECK(ledger.faces[t.to_face].degree == 3);
        CHECK(ledger.faces[t.from_face].degree >= 6);
    }
    CHECK(ledger.total_final == Thirds::whole(24));
    CHECK(ledger.total_initial == Thirds::whole(24));
    CHECK(ledger.conservation_holds);
    CHECK(ledger.three_faces_at_four);
    CHECK(ledger.six_plus_faces_at_two_thirds);
    CHECK(ledger.all_faces_at_least_four);
    CHECK(ledger.edges_at_least_twice_faces);

    CHECK(verify_theorem12_inequality(y9));
    CHECK(y9.edge_count() <= 2 * 9 - 4);
    CHECK_FALSE(is_uniquely_k_colorable(y9.abstract(), 3));
}

TEST_CASE("audit hypothesis fails on graphs with small neighbors of triangles") {
    CHECK_FALSE(audit(families::generate_gk(3)).hypothesis_met);
    const auto k3 = audit(fixture::k3());
    CHECK(k3.has_three_face);
    CHECK_FALSE(k3.hypothesis_met);
    CHECK(k3.transfers.empty());
    CHECK_FALSE(k3.edges_at_least_twice_faces);
    CHECK(verify_theorem12_inequality(fixture::k3()));
    CHECK_FALSE(audit(fixture::c5()).has_three_face);
    CHECK_FALSE(audit(fixture::c5()).hypothesis_met);
}

TEST_CASE("audit report text") {
    const auto text = format_ledger(audit(families::generate_y9()));
    CHECK(text.find("ch'=16/3") != std::string::npos);
    CHECK(text.find("conclusion: 12 >= 2*5 : yes") != std::string::npos);
    CHECK(format_ledger(audit(fixture::k3())).find("conclusions skipped") != std::string::npos);
}

TEST_CASE("audit is independent of face enumeration order") {
    std::mt19937 rng(5);
    const auto y9 = families::generate_y9();
    auto summary = [](const AuditLedger& l) {
        std::vector<std::pair<int, long long>> out;
        for (const auto& fc : l.faces)
            out.emplace_back(fc.degree, fc.final.numerator);
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto base = summary(audit(y9));
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<Vertex>> rot(9);
        for (Vertex v = 0; v < 9; ++v)
            for (Vertex w : y9.rotation(v))
                rot[perm[v]].push_back(perm[w]);
        // Also rotate each cyclic order so darts are numbered differently.
        for (auto& r : rot)
            std::rotate(r.begin(), r.begin() + static_cast<long>(rng() % r.size()), r.end());
        CHECK(summary(audit(PlaneGraph::from_rotation_system(9, rot))) == base);
    }
}

TEST_CASE("conservation and the face bound hold across the catalog") {
    int met = 0;
    for (const auto& g : catalog::tiny_plane_graphs(7, catalog::EmbeddingMode::all_embeddings)) {
        const auto ledger = audit(g);
        CHECK(ledger.total_initial == Thirds::whole(2LL * g.edge_count()));
        if (!ledger.hypothesis_met)
            continue;
        ++met;
        CHECK(ledger.conservation_holds);
        CHECK(ledger.all_faces_at_least_four);
        CHECK(ledger.edges_at_least_twice_faces);
        CHECK(verify_theorem12_inequality(g));
    }
    CHECK(met > 0);
}
