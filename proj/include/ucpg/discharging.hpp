#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ucpg/plane_graph.hpp"

namespace ucpg {

/// Exact multiple of 1/3, stored as its numerator.
struct Thirds {
    long long numerator = 0;

    static constexpr Thirds whole(long long v) { return Thirds{3 * v}; }

    constexpr Thirds operator+(Thirds o) const { return {numerator + o.numerator}; }
    constexpr Thirds operator-(Thirds o) const { return {numerator - o.numerator}; }
    constexpr Thirds& operator+=(Thirds o) { numerator += o.numerator; return *this; }
    constexpr Thirds& operator-=(Thirds o) { numerator -= o.numerator; return *this; }
    constexpr auto operator<=>(const Thirds&) const = default;

    /// "p/q" in lowest terms; integers print without a denominator.
    std::string str() const;
};

struct FaceCharge {
    int face = 0;
    int degree = 0;
    Thirds initial;
    Thirds final;
};

/// One application of the rule: a 6+-face hands 1/3 to a 3-face across an edge.
struct ChargeTransfer {
    int from_face = 0;
    int to_face = 0;
    Edge edge;
    Thirds amount;
};

struct AuditLedger {
    int vertices = 0;
    int edges = 0;
    int face_count = 0;
    bool has_three_face = false;
    /// At least one 3-face and every edge of every 3-face borders a 6+-face.
    bool hypothesis_met = false;

    std::vector<FaceCharge> faces;
    std::vector<ChargeTransfer> transfers;
    Thirds total_initial;
    Thirds total_final;

    // Conclusions; all false when the hypothesis fails.
    bool conservation_holds = false;
    bool three_faces_at_four = false;
    bool four_five_faces_unchanged = false;
    bool six_plus_faces_at_two_thirds = false;
    bool all_faces_at_least_four = false;
    bool edges_at_least_twice_faces = false;
};

AuditLedger audit(const PlaneGraph& g);

/// For a graph meeting the audit hypothesis: m >= 2|F| and therefore, by
/// Euler's formula, m <= 2n - 4. Vacuously true otherwise.
bool verify_theorem12_inequality(const PlaneGraph& g);

std::string format_ledger(const AuditLedger& ledger);

}  // namespace ucpg
