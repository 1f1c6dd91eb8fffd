#include "forcelab/generators.hpp"

#include <vector>

#include "forcelab/error.hpp"

namespace forcelab::gen {

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph empty(std::size_t n) { return Graph::from_edges(n, std::span<const Edge>{}); }

Graph complete_bipartite(std::size_t p, std::size_t q) {
    if (p == 0 || q == 0) throw ValidationError("complete bipartite parts must be nonempty");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < p; ++u)
        for (Vertex v = 0; v < q; ++v) edges.emplace_back(u, static_cast<Vertex>(p + v));
    return Graph::from_edges(p + q, edges);
}

Graph star(std::size_t leaves) {
    if (leaves == 0) throw ValidationError("star needs at least one leaf");
    return complete_bipartite(1, leaves);
}

namespace {

// BFS-ordered rooted tree where the root has `root_children` children, every
// other vertex above depth `height` has `children` children.
Graph layered_tree(std::size_t root_children, std::size_t children, std::size_t height) {
    std::vector<Edge> edges;
    std::vector<Vertex> frontier{0};
    Vertex next = 1;
    for (std::size_t depth = 0; depth < height; ++depth) {
        std::vector<Vertex> below;
        for (Vertex parent : frontier) {
            const std::size_t count = depth == 0 ? root_children : children;
            for (std::size_t c = 0; c < count; ++c) {
                if (next >= kMaxVertices) throw CapacityError("tree exceeds vertex capacity");
                edges.emplace_back(parent, next);
                below.push_back(next++);
            }
        }
        frontier = std::move(below);
    }
    return Graph::from_edges(next, edges);
}

}  // namespace

Graph full_binary_tree(std::size_t height) {
    if (height < 1) throw ValidationError("full binary tree height must be >= 1");
    return layered_tree(2, 2, height);
}

Graph delta_tree(std::size_t max_degree, std::size_t height) {
    if (max_degree < 3) throw ValidationError("T(Δ,h) needs Δ >= 3");
    if (height < 1) throw ValidationError("T(Δ,h) needs h >= 1");
    return layered_tree(max_degree, max_degree - 1, height);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const std::size_t gn = g.order(), hn = h.order();
    auto id = [hn](Vertex a, Vertex b) { return static_cast<Vertex>(a * hn + b); };
    std::vector<Edge> edges;
    for (Vertex a = 0; a < gn; ++a)
        for (Vertex b = 0; b < hn; ++b) {
            h.neighbors(b).for_each([&](Vertex b2) {
                if (b < b2) edges.emplace_back(id(a, b), id(a, b2));
            });
            g.neighbors(a).for_each([&](Vertex a2) {
                if (a < a2) edges.emplace_back(id(a, b), id(a2, b));
            });
        }
    return Graph::from_edges(gn * hn, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    const auto shift = static_cast<Vertex>(g.order());
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::from_edges(g.order() + h.order(), edges);
}

Graph house() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}}); }

Graph double_diamond() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}, {1, 5}, {0, 4}});
}

}  // namespace forcelab::gen
