#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab {

bool is_thp_one(const Graph& g);

/// K_{1,n-1} (including K_2) or 2K_1.
bool is_thp_two(const Graph& g);

/// How to read "N(u) ∪ N(v) = V(G)" in the pair condition for th₊ = 3.
///
/// Literal demands the open neighborhoods cover V(G), which forces u ~ v and
/// also applies the no-edge condition to u and v themselves; it rejects K_3
/// and K_{2,3}, both of which have th₊ = 3. Closed asks that every vertex
/// other than u, v be adjacent to one of them and applies the no-edge and
/// degree conditions to those other vertices only, which is exactly what
/// pt₊(G; {u, v}) = 1 requires.
enum class PairReading { Closed, Literal };

enum class ThreeReason { DisconnectedThreeK1, DisconnectedTwoStars, TreeDiameter3or4, Pair };

struct ThreeEvidence {
    ThreeReason reason = ThreeReason::Pair;
    std::optional<std::pair<Vertex, Vertex>> pair;  // set for ThreeReason::Pair
};

std::optional<ThreeEvidence> thp_three_evidence(const Graph& g, PairReading reading = PairReading::Closed);

inline bool is_thp_three(const Graph& g, PairReading reading = PairReading::Closed) {
    return thp_three_evidence(g, reading).has_value();
}

enum class FamilyRejection { None, AlphaOne, AlphaAtLeastThree, InducedC5, InducedHouse, InducedDoubleDiamond };

std::string_view to_string(FamilyRejection r) noexcept;

struct FamilyVerdict {
    bool member = false;
    FamilyRejection reason = FamilyRejection::None;
    /// Independent triple for AlphaAtLeastThree, the induced copy (pattern
    /// order) for Induced*; empty otherwise.
    std::vector<Vertex> witness;
};

/// Membership in 𝒢: α(G) = 2 and no induced C5, house or double diamond.
/// For connected G this is exactly th₊(G) = n−1; complete graphs (α = 1)
/// are outside 𝒢 and have th₊ = n.
/// α is decided with the O(n³) complement-triangle test, so any order works.
FamilyVerdict in_family_g(const Graph& g);

enum class ExtremeClass { ThpOne, ThpTwo, ThpThree, ThpEqualsN, ThpAtLeastNMinus1 };

std::string_view to_string(ExtremeClass c) noexcept;

struct ExtremeClassification {
    /// Empty means none of the extreme classes. ThpAtLeastNMinus1 is
    /// asserted for members of 𝒢 and for complete graphs.
    std::vector<ExtremeClass> classes;
    /// False for disconnected graphs: th₊ = n and th₊ >= n−1 are only
    /// characterized for connected graphs, so they are neither asserted nor denied.
    bool high_end_asserted = true;
    std::optional<ThreeEvidence> three;
    FamilyVerdict family;

    bool has(ExtremeClass c) const;
};

ExtremeClassification classify(const Graph& g);

}  // namespace forcelab
