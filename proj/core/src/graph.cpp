#include "forcelab/graph.hpp"

#include <algorithm>
#include <limits>

#include "forcelab/error.hpp"

namespace forcelab {

std::string VertexSet::str() const {
    std::string out = "{";
    bool first_elem = true;
    for_each([&](Vertex v) {
        if (!first_elem) out += ',';
        out += std::to_string(v);
        first_elem = false;
    });
    return out + "}";
}

Graph::Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)), degree_(adj_.size()) {
    max_degree_ = 0;
    min_degree_ = adj_.empty() ? 0 : std::numeric_limits<std::size_t>::max();
    std::size_t sum = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        degree_[v] = adj_[v].size();
        sum += degree_[v];
        max_degree_ = std::max(max_degree_, degree_[v]);
        min_degree_ = std::min(min_degree_, degree_[v]);
    }
    edge_count_ = sum / 2;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) throw ValidationError("graph must have at least one vertex");
    if (n > kMaxVertices)
        throw CapacityError("order " + std::to_string(n) + " exceeds vertex capacity " + std::to_string(kMaxVertices));
    std::vector<VertexSet> adj(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                                  std::to_string(n));
        if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return Graph(std::move(adj));
}

VertexSet Graph::neighborhood(const VertexSet& s) const noexcept {
    VertexSet out;
    s.for_each([&](Vertex v) { out |= adj_[v]; });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        adj_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::complement() const {
    const std::size_t n = order();
    std::vector<VertexSet> adj(n);
    const VertexSet all = VertexSet::full(n);
    for (Vertex v = 0; v < n; ++v) {
        adj[v] = all - adj_[v];
        adj[v].erase(v);
    }
    return Graph(std::move(adj));
}

Graph Graph::induced(const VertexSet& mask, std::vector<Vertex>* labels) const {
    const std::vector<Vertex> keep = mask.to_vector();
    if (keep.empty()) throw ValidationError("induced subgraph on an empty vertex set");
    std::vector<Vertex> position(order(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<Vertex>(i);
    std::vector<VertexSet> adj(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        (adj_[keep[i]] & mask).for_each([&](Vertex w) { adj[i].insert(position[w]); });
    if (labels) *labels = keep;
    return Graph(std::move(adj));
}

}  // namespace forcelab
