#pragma once

#include <cstddef>

#include "forcelab/graph.hpp"

// Graph families. Labelings are fixed so that witness sets in golden tests
// stay stable:
//  - path / cycle: path order 0-1-...-(n-1) (cycle adds (n-1, 0));
//  - complete_bipartite(p, q): parts {0..p-1} and {p..p+q-1};
//  - star(k) = K_{1,k}: center 0, leaves 1..k;
//  - trees: BFS order from the root/center, children of a vertex consecutive;
//  - cartesian_product(G, H): vertex (g, h) is g * |H| + h (row-major);
//  - disjoint_union(G, H): G's vertices first, then H's shifted by |G|.
namespace forcelab::gen {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph complete_bipartite(std::size_t p, std::size_t q);
Graph star(std::size_t leaves);

/// Root of degree 2, internal vertices of degree 3, leaves at depth h. n = 2^{h+1} - 1.
Graph full_binary_tree(std::size_t height);

/// T(Δ, h): center with Δ children, every other internal vertex has Δ-1
/// children, all leaves at depth h. n = (Δ(Δ-1)^h - 2) / (Δ - 2).
Graph delta_tree(std::size_t max_degree, std::size_t height);

Graph cartesian_product(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// C5 on 0..4 plus the chord 1-4.
Graph house();

/// Two diamonds (K4 minus an edge) sharing the edge 1-4:
///
///     0 --- 1 --- 2        top row    x  x' w
///     |     |     |
///     3 --- 4 --- 5        bottom row y  z' z
///
/// plus the diagonals 0-4 and 1-5. Edges: 0-1 1-2 3-4 4-5 0-3 1-4 2-5
/// 1-5 0-4. {0,1,3,4} and {1,2,4,5} are the two diamonds; alpha = 2.
Graph double_diamond();

}  // namespace forcelab::gen
