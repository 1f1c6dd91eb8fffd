#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "forcelab/extended.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

/// Default order cap for the exact independence-number branch and bound.
inline constexpr std::size_t kExactAlphaCap = 32;

struct GraphMetrics {
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
    ExtNat diameter;
    std::vector<ExtNat> eccentricity;
    std::size_t component_count = 0;
};

GraphMetrics metrics(const Graph& g);

/// Connected components of G[mask], each as a VertexSet, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& mask);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// BFS distances from the set `sources` (distance 0 on sources).
std::vector<ExtNat> distances_from(const Graph& g, const VertexSet& sources);

/// dist(S → S̄) = max over w ∉ S of dist(S, w); 0 when S = V(G), ∞ when some
/// vertex is unreachable. Throws DomainError on empty S.
ExtNat dist_set_to_complement(const Graph& g, const VertexSet& s);

/// Early-exit variant used by solvers: returns true iff dist(S→S̄) <= bound.
bool dist_set_to_complement_at_most(const Graph& g, const VertexSet& s, std::uint32_t bound);

ExtNat diameter(const Graph& g);

/// Exact α(G) by branch and bound. Throws CapacityError above `cap`.
std::size_t independence_number(const Graph& g, std::size_t cap = kExactAlphaCap);

/// Maximum independent set found by the same search.
VertexSet maximum_independent_set(const Graph& g, std::size_t cap = kExactAlphaCap);

/// α(G) <= 2 decided in O(n^3) at any order: the complement is triangle-free.
bool independence_at_most_two(const Graph& g);

/// An independent triple, if one exists (witness for α >= 3).
std::optional<std::array<Vertex, 3>> independent_triple(const Graph& g);

/// Largest order accepted as an induced-subgraph pattern.
inline constexpr std::size_t kMaxPatternOrder = 8;

/// Some vertex subset of g inducing a copy of `pattern`: result[i] is the
/// vertex of g playing pattern vertex i. Throws CapacityError for patterns
/// larger than kMaxPatternOrder.
std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& pattern);

inline bool has_induced(const Graph& g, const Graph& pattern) {
    return find_induced(g, pattern).has_value();
}

}  // namespace forcelab
