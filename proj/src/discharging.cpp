#include "ucpg/discharging.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <sstream>

namespace ucpg {

std::string Thirds::str() const {
    const boost::rational<long long> r(numerator, 3);
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1)
        out << '/' << r.denominator();
    return out.str();
}

AuditLedger audit(const PlaneGraph& g) {
    const auto& faces = g.faces();
    AuditLedger ledger;
    ledger.vertices = g.vertex_count();
    ledger.edges = g.edge_count();
    ledger.face_count = static_cast<int>(faces.size());

    bool isolated_triangles = true;
    for (int f = 0; f < ledger.face_count; ++f) {
        const int d = faces[f].degree();
        ledger.faces.push_back({f, d, Thirds::whole(d), Thirds::whole(d)});
        ledger.total_initial += Thirds::whole(d);
        if (d != 3)
            continue;
        ledger.has_three_face = true;
        for (int dart : faces[f].darts)
            if (faces[g.face_of(g.reverse(dart))].degree() < 6)
                isolated_triangles = false;
    }
    ledger.hypothesis_met = ledger.has_three_face && isolated_triangles;
    if (!ledger.hypothesis_met) {
        ledger.total_final = ledger.total_initial;
        return ledger;
    }

    constexpr Thirds third{1};
    for (int f = 0; f < ledger.face_count; ++f) {
        if (faces[f].degree() != 3)
            continue;
        for (int dart : faces[f].darts) {
            const int donor = g.face_of(g.reverse(dart));
            ledger.transfers.push_back({donor, f, Edge(g.tail(dart), g.head(dart)), third});
            ledger.faces[donor].final -= third;
            ledger.faces[f].final += third;
        }
    }

    ledger.three_faces_at_four = true;
    ledger.four_five_faces_unchanged = true;
    ledger.six_plus_faces_at_two_thirds = true;
    ledger.all_faces_at_least_four = true;
    for (const auto& fc : ledger.faces) {
        ledger.total_final += fc.final;
        if (fc.degree == 3)
            ledger.three_faces_at_four = ledger.three_faces_at_four && fc.final == Thirds::whole(4);
        else if (fc.degree == 4 || fc.degree == 5)
            ledger.four_five_faces_unchanged = ledger.four_five_faces_unchanged && fc.final == fc.initial;
        else if (fc.degree >= 6)
            ledger.six_plus_faces_at_two_thirds =
                ledger.six_plus_faces_at_two_thirds && fc.final >= Thirds{2 * fc.degree};
        ledger.all_faces_at_least_four = ledger.all_faces_at_least_four && fc.final >= Thirds::whole(4);
    }
    ledger.conservation_holds =
        ledger.total_final == ledger.total_initial && ledger.total_initial == Thirds::whole(2LL * ledger.edges);
    ledger.edges_at_least_twice_faces = ledger.edges >= 2 * ledger.face_count;
    return ledger;
}

bool verify_theorem12_inequality(const PlaneGraph& g) {
    const auto ledger = audit(g);
    if (!ledger.hypothesis_met)
        return true;
    // 2m = sum of final charges >= 4|F|.
    const bool faces_bound = ledger.conservation_holds && ledger.all_faces_at_least_four &&
                             ledger.total_final >= Thirds::whole(4LL * ledger.face_count);
    const bool euler_bound = ledger.edges <= 2 * ledger.vertices - 4;
    return faces_bound && ledger.edges_at_least_twice_faces && euler_bound;
}

std::string format_ledger(const AuditLedger& ledger) {
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    std::ostringstream out;
    out << "graph: n=" << ledger.vertices << " m=" << ledger.edges << " faces=" << ledger.face_count << '\n';
    out << "has 3-face: " << yes(ledger.has_three_face) << '\n';
    out << "hypothesis (3-faces border only 6+-faces): " << yes(ledger.hypothesis_met) << '\n';
    out << "faces:\n";
    for (const auto& fc : ledger.faces)
        out << "  face " << fc.face << " degree " << fc.degree << " ch=" << fc.initial.str()
            << " ch'=" << fc.final.str() << '\n';
    if (!ledger.hypothesis_met) {
        out << "conclusions skipped\n";
        return out.str();
    }
    out << "transfers: " << ledger.transfers.size() << " x 1/3\n";
    out << "sum ch = " << ledger.total_initial.str() << ", sum ch' = " << ledger.total_final.str()
        << ", 2m = " << 2 * ledger.edges << '\n';
    out << "conservation: " << yes(ledger.conservation_holds) << '\n';
    out << "3-faces end at 4: " << yes(ledger.three_faces_at_four) << '\n';
    out << "4/5-faces unchanged: " << yes(ledger.four_five_faces_unchanged) << '\n';
    out << "6+-faces keep >= 2d/3: " << yes(ledger.six_plus_faces_at_two_thirds) << '\n';
    out << "all faces >= 4: " << yes(ledger.all_faces_at_least_four) << '\n';
    out << "conclusion: " << ledger.edges << " >= 2*" << ledger.face_count << " : "
        << yes(ledger.edges_at_least_twice_faces) << '\n';
    return out.str();
}

}  // namespace ucpg
