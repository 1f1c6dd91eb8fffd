#include "forcelab/classifier.hpp"

#include <algorithm>

#include "forcelab/generators.hpp"
#include "forcelab/metrics.hpp"

namespace forcelab {

bool is_thp_one(const Graph& g) { return g.order() == 1; }

namespace {

bool is_star(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 2 || g.size() != n - 1) return false;
    if (n == 2) return true;
    return g.max_degree() == n - 1;
}

// Star or single vertex, as an induced piece of g.
bool is_star_or_k1(const Graph& g) { return g.order() == 1 || is_star(g); }

bool pair_works(const Graph& g, Vertex u, Vertex v, PairReading reading) {
    const VertexSet& nu = g.neighbors(u);
    const VertexSet& nv = g.neighbors(v);
    const VertexSet others = g.vertices() - VertexSet{u, v};
    if (reading == PairReading::Literal) {
        if ((nu | nv) != g.vertices()) return false;
    } else if (!others.is_subset_of(nu | nv)) {
        return false;
    }
    bool ok = true;
    others.for_each([&](Vertex w) {
        if (g.degree(w) > 2) ok = false;
    });
    if (!ok) return false;
    // No edge inside N(u) or inside N(v); the closed reading only looks at
    // vertices other than u and v.
    const VertexSet scope = reading == PairReading::Literal ? g.vertices() : others;
    for (const VertexSet* side : {&nu, &nv}) {
        const VertexSet inside = *side & scope;
        inside.for_each([&](Vertex w) {
            if (g.neighbors(w).intersects(inside)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace

bool is_thp_two(const Graph& g) {
    if (g.order() == 2) return true;  // K2 or 2K1
    return is_star(g);
}

std::optional<ThreeEvidence> thp_three_evidence(const Graph& g, PairReading reading) {
    const std::size_t n = g.order();
    if (n < 3) return std::nullopt;
    const auto parts = components(g, g.vertices());
    if (parts.size() > 1) {
        if (n == 3 && g.size() == 0) return ThreeEvidence{ThreeReason::DisconnectedThreeK1, std::nullopt};
        if (parts.size() != 2) return std::nullopt;
        for (const auto& part : parts)
            if (!is_star_or_k1(g.induced(part))) return std::nullopt;
        // n >= 3 with two pieces means one of them has order > 1.
        return ThreeEvidence{ThreeReason::DisconnectedTwoStars, std::nullopt};
    }
    const bool tree = g.size() == n - 1;
    std::uint32_t diam = 0;
    if (tree) {
        diam = diameter(g).value();
        if (diam == 3 || diam == 4) return ThreeEvidence{ThreeReason::TreeDiameter3or4, std::nullopt};
        if (diam != 5) return std::nullopt;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (pair_works(g, u, v, reading)) return ThreeEvidence{ThreeReason::Pair, std::pair{u, v}};
    return std::nullopt;
}

std::string_view to_string(FamilyRejection r) noexcept {
    switch (r) {
        case FamilyRejection::None: return "none";
        case FamilyRejection::AlphaOne: return "alpha=1";
        case FamilyRejection::AlphaAtLeastThree: return "alpha>=3";
        case FamilyRejection::InducedC5: return "induced C5";
        case FamilyRejection::InducedHouse: return "induced house";
        case FamilyRejection::InducedDoubleDiamond: return "induced double diamond";
    }
    return "?";
}

FamilyVerdict in_family_g(const Graph& g) {
    FamilyVerdict out;
    if (g.is_complete()) {
        out.reason = FamilyRejection::AlphaOne;
        return out;
    }
    if (auto triple = independent_triple(g)) {
        out.reason = FamilyRejection::AlphaAtLeastThree;
        out.witness.assign(triple->begin(), triple->end());
        return out;
    }
    const std::pair<FamilyRejection, Graph> forbidden[] = {
        {FamilyRejection::InducedC5, gen::cycle(5)},
        {FamilyRejection::InducedHouse, gen::house()},
        {FamilyRejection::InducedDoubleDiamond, gen::double_diamond()},
    };
    for (const auto& [reason, pattern] : forbidden) {
        if (auto copy = find_induced(g, pattern)) {
            out.reason = reason;
            out.witness = std::move(*copy);
            return out;
        }
    }
    out.member = true;
    return out;
}

std::string_view to_string(ExtremeClass c) noexcept {
    switch (c) {
        case ExtremeClass::ThpOne: return "thp=1";
        case ExtremeClass::ThpTwo: return "thp=2";
        case ExtremeClass::ThpThree: return "thp=3";
        case ExtremeClass::ThpEqualsN: return "thp=n";
        case ExtremeClass::ThpAtLeastNMinus1: return "thp>=n-1";
    }
    return "?";
}

bool ExtremeClassification::has(ExtremeClass c) const {
    return std::find(classes.begin(), classes.end(), c) != classes.end();
}

ExtremeClassification classify(const Graph& g) {
    ExtremeClassification out;
    if (is_thp_one(g)) out.classes.push_back(ExtremeClass::ThpOne);
    if (g.order() >= 2 && is_thp_two(g)) out.classes.push_back(ExtremeClass::ThpTwo);
    out.three = thp_three_evidence(g);
    if (out.three) out.classes.push_back(ExtremeClass::ThpThree);
    out.family = in_family_g(g);
    out.high_end_asserted = is_connected(g);
    if (out.high_end_asserted) {
        if (g.is_complete()) out.classes.push_back(ExtremeClass::ThpEqualsN);
        if (g.is_complete() || out.family.member) out.classes.push_back(ExtremeClass::ThpAtLeastNMinus1);
    }
    return out;
}

}  // namespace forcelab
