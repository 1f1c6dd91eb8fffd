#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "forcelab/extended.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

enum class Rule { Standard, PSD };

std::string_view to_string(Rule rule) noexcept;

/// forcer -> forced at time `step` (1-based).
struct ForceEvent {
    std::uint32_t step = 0;
    Vertex forcer = 0;
    Vertex forced = 0;

    friend bool operator==(const ForceEvent&, const ForceEvent&) = default;
};

struct PropagationOutcome {
    /// Number of rounds that performed at least one force; ∞ if the process
    /// stalls before every vertex is blue.
    ExtNat steps;
    /// Forces by round, within a round by forced vertex.
    std::vector<ForceEvent> history;
    VertexSet final_blue;
    /// per_step[t-1] = S^(t), the vertices turning blue at round t.
    std::vector<VertexSet> per_step;
};

/// One simultaneous round from `blue`. Under PSD, a blue v forces white w when
/// w is v's only white neighbor inside w's component of G - blue; under the
/// standard rule, when w is v's only white neighbor. If several blue vertices
/// can force w, the lowest-indexed one is recorded. Returns the forces
/// ordered by forced vertex; empty when stalled or blue = V(G).
std::vector<ForceEvent> step(const Graph& g, const VertexSet& blue, Rule rule,
                             std::uint32_t round = 1);

/// Vertices forced in one round (same set as step() reports, without forcers).
VertexSet forced_in_one_round(const Graph& g, const VertexSet& blue, Rule rule);

PropagationOutcome propagate(const Graph& g, const VertexSet& s, Rule rule);

/// pt(G; S) without recording history. With `limit`, gives up and returns ∞
/// as soon as more than `limit` rounds would be needed.
ExtNat propagation_time(const Graph& g, const VertexSet& s, Rule rule,
                        std::uint32_t limit = UINT32_MAX);

bool is_forcing_set(const Graph& g, const VertexSet& s, Rule rule);

/// Forcing trees T_x, one per x in S, built from the recorded forces.
struct ForcingTree {
    Vertex root = 0;
    VertexSet vertices;
    std::vector<Edge> edges;  // (forcer, forced)
};

struct ForcingForest {
    std::vector<ForcingTree> trees;  // ordered by root
};

/// Throws DomainError when `outcome` did not color every vertex.
ForcingForest forcing_forest(const Graph& g, const PropagationOutcome& outcome, const VertexSet& s);

/// Default order cap for the exact zero forcing number search.
inline constexpr std::size_t kExactZeroForcingCap = 20;

struct ZeroForcingResult {
    std::size_t value = 0;
    VertexSet witness;  // lexicographically least forcing set of minimum size
};

/// Z(G) or Z₊(G) by ascending-size search. Isolated vertices are forced into
/// every candidate; a disconnected graph is solved per component and the
/// witnesses united (which keeps the union lexicographically least).
/// Throws CapacityError above `cap`.
ZeroForcingResult zero_forcing_number(const Graph& g, Rule rule, std::size_t cap = kExactZeroForcingCap);

/// pt(G) / pt₊(G): minimum propagation time over minimum-size forcing sets.
std::uint32_t graph_propagation_time(const Graph& g, Rule rule, std::size_t cap = kExactZeroForcingCap);

}  // namespace forcelab
