#include "forcelab/metrics.hpp"

#include <algorithm>
#include <functional>

#include "forcelab/error.hpp"

namespace forcelab {

std::vector<VertexSet> components(const Graph& g, const VertexSet& mask) {
    std::vector<VertexSet> parts;
    VertexSet rest = mask;
    while (!rest.empty()) {
        VertexSet part;
        part.insert(rest.first());
        VertexSet frontier = part;
        while (!frontier.empty()) {
            frontier = (g.neighborhood(frontier) & rest) - part;
            part |= frontier;
        }
        rest -= part;
        parts.push_back(part);
    }
    return parts;
}

bool is_connected(const Graph& g) { return components(g, g.vertices()).size() == 1; }

bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && is_connected(g); }

std::vector<ExtNat> distances_from(const Graph& g, const VertexSet& sources) {
    std::vector<ExtNat> dist(g.order());
    VertexSet seen = sources;
    VertexSet frontier = sources;
    std::uint32_t d = 0;
    while (!frontier.empty()) {
        frontier.for_each([&](Vertex v) { dist[v] = d; });
        frontier = g.neighborhood(frontier) - seen;
        seen |= frontier;
        ++d;
    }
    return dist;
}

ExtNat dist_set_to_complement(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw DomainError("dist(S -> complement) needs a nonempty S");
    VertexSet seen = s;
    VertexSet frontier = s;
    const VertexSet all = g.vertices();
    std::uint32_t d = 0;
    while (seen != all) {
        frontier = g.neighborhood(frontier) - seen;
        if (frontier.empty()) return ExtNat::infinity();
        seen |= frontier;
        ++d;
    }
    return d;
}

bool dist_set_to_complement_at_most(const Graph& g, const VertexSet& s, std::uint32_t bound) {
    VertexSet seen = s;
    VertexSet frontier = s;
    const VertexSet all = g.vertices();
    for (std::uint32_t d = 0; seen != all; ++d) {
        if (d == bound) return false;
        frontier = g.neighborhood(frontier) - seen;
        if (frontier.empty()) return false;
        seen |= frontier;
    }
    return true;
}

ExtNat diameter(const Graph& g) {
    ExtNat best = 0u;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto dist = distances_from(g, VertexSet{v});
        for (const auto& d : dist) best = std::max(best, d);
    }
    return best;
}

GraphMetrics metrics(const Graph& g) {
    GraphMetrics m;
    m.max_degree = g.max_degree();
    m.min_degree = g.min_degree();
    m.eccentricity.resize(g.order());
    m.diameter = 0u;
    for (Vertex v = 0; v < g.order(); ++v) {
        ExtNat ecc = 0u;
        for (const auto& d : distances_from(g, VertexSet{v})) ecc = std::max(ecc, d);
        m.eccentricity[v] = ecc;
        m.diameter = std::max(m.diameter, ecc);
    }
    m.component_count = components(g, g.vertices()).size();
    return m;
}

namespace {

void max_independent(const Graph& g, VertexSet chosen, VertexSet candidates, VertexSet& best) {
    // Vertices with no candidate neighbors can always be taken.
    bool changed = true;
    while (changed) {
        changed = false;
        candidates.for_each([&](Vertex v) {
            if (candidates.contains(v) && !g.neighbors(v).intersects(candidates)) {
                chosen.insert(v);
                candidates.erase(v);
                changed = true;
            }
        });
    }
    if (chosen.size() + candidates.size() <= best.size()) return;
    if (candidates.empty()) {
        best = chosen;
        return;
    }
    // Branch on the candidate with the most candidate neighbors.
    Vertex pivot = candidates.first();
    std::size_t pivot_deg = 0;
    candidates.for_each([&](Vertex v) {
        const auto d = (g.neighbors(v) & candidates).size();
        if (d > pivot_deg) {
            pivot = v;
            pivot_deg = d;
        }
    });
    VertexSet with = chosen;
    with.insert(pivot);
    max_independent(g, with, candidates - g.neighbors(pivot) - VertexSet{pivot}, best);
    VertexSet without = candidates;
    without.erase(pivot);
    max_independent(g, chosen, without, best);
}

}  // namespace

VertexSet maximum_independent_set(const Graph& g, std::size_t cap) {
    if (g.order() > cap)
        throw CapacityError("exact independence number capped at order " + std::to_string(cap));
    VertexSet best;
    max_independent(g, VertexSet{}, g.vertices(), best);
    return best;
}

std::size_t independence_number(const Graph& g, std::size_t cap) {
    if (g.order() > cap) {
        if (g.is_complete()) return 1;
        if (independence_at_most_two(g)) return 2;
        throw CapacityError("exact independence number capped at order " + std::to_string(cap) +
                            " and alpha > 2");
    }
    return maximum_independent_set(g, cap).size();
}

std::optional<std::array<Vertex, 3>> independent_triple(const Graph& g) {
    const std::size_t n = g.order();
    const VertexSet all = g.vertices();
    for (Vertex u = 0; u < n; ++u) {
        // Non-neighbors of u above u, then a non-adjacent pair among them.
        VertexSet far = all - g.neighbors(u);
        for (Vertex x = 0; x <= u; ++x) far.erase(x);
        std::optional<std::array<Vertex, 3>> found;
        far.for_each([&](Vertex v) {
            if (found) return;
            VertexSet third = far - g.neighbors(v);
            for (Vertex x = 0; x <= v; ++x) third.erase(x);
            if (!third.empty()) found = std::array<Vertex, 3>{u, v, third.first()};
        });
        if (found) return found;
    }
    return std::nullopt;
}

bool independence_at_most_two(const Graph& g) { return !independent_triple(g).has_value(); }

std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& pattern) {
    const std::size_t k = pattern.order();
    if (k > kMaxPatternOrder)
        throw CapacityError("induced-subgraph patterns are limited to " + std::to_string(kMaxPatternOrder) +
                            " vertices");
    const std::size_t n = g.order();
    if (k > n) return std::nullopt;

    std::vector<std::size_t> pattern_deg(k);
    for (Vertex i = 0; i < k; ++i) pattern_deg[i] = pattern.degree(i);
    std::vector<std::size_t> sorted_pattern_deg = pattern_deg;
    std::sort(sorted_pattern_deg.begin(), sorted_pattern_deg.end());

    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);

    std::vector<Vertex> mapping(k);
    std::vector<std::size_t> local_deg(k);
    std::vector<bool> used(k);

    // Assign pattern vertex i to one of the picked vertices, keeping
    // adjacency consistent with pattern vertices 0..i-1.
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == k) return true;
        for (std::size_t c = 0; c < k; ++c) {
            if (used[c] || local_deg[c] != pattern_deg[i]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = pattern.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == g.adjacent(pick[c], mapping[j]);
            if (!ok) continue;
            used[c] = true;
            mapping[i] = pick[c];
            if (extend(i + 1)) return true;
            used[c] = false;
        }
        return false;
    };

    while (true) {
        const VertexSet mask = VertexSet::from_range(pick);
        std::size_t edges = 0;
        for (std::size_t c = 0; c < k; ++c) {
            local_deg[c] = (g.neighbors(pick[c]) & mask).size();
            edges += local_deg[c];
        }
        if (edges == 2 * pattern.size()) {
            std::vector<std::size_t> sorted_local = local_deg;
            std::sort(sorted_local.begin(), sorted_local.end());
            if (sorted_local == sorted_pattern_deg) {
                std::fill(used.begin(), used.end(), false);
                if (extend(0)) return mapping;
            }
        }
        // Next k-combination of 0..n-1 in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return std::nullopt;
}

}  // namespace forcelab
