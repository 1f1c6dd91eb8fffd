#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "forcelab/vertex_set.hpp"

namespace forcelab {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighborhoods are stored as VertexSet rows, so adjacency tests and
/// neighborhood intersections are word operations. Instances are cheap to
/// share between threads: nothing mutates after construction.
class Graph {
public:
    /// Builds a graph from an edge list; duplicate edges collapse.
    /// Throws ValidationError on loops, out-of-range endpoints or n == 0, and
    /// CapacityError when n exceeds kMaxVertices.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    const VertexSet& neighbors(Vertex v) const noexcept { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].contains(v); }
    std::size_t degree(Vertex v) const noexcept { return degree_[v]; }
    std::size_t max_degree() const noexcept { return max_degree_; }
    std::size_t min_degree() const noexcept { return min_degree_; }

    VertexSet vertices() const noexcept { return VertexSet::full(order()); }

    /// Union of N(v) over v in s.
    VertexSet neighborhood(const VertexSet& s) const noexcept;

    /// Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    Graph complement() const;

    /// G[mask], relabelled so that the i-th smallest member of mask becomes i.
    /// `labels`, when given, receives the original label of each new vertex.
    Graph induced(const VertexSet& mask, std::vector<Vertex>* labels = nullptr) const;

    bool is_complete() const noexcept { return edge_count_ * 2 == order() * (order() - 1); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    explicit Graph(std::vector<VertexSet> adj);

    std::vector<VertexSet> adj_;
    std::vector<std::size_t> degree_;
    std::size_t edge_count_ = 0;
    std::size_t max_degree_ = 0;
    std::size_t min_degree_ = 0;
};

}  // namespace forcelab
