#pragma once

// Slow reference implementations written straight from the definitions.
// They share nothing with the library beyond reading a graph's edge list.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "forcelab/graph.hpp"

namespace oracle {

using Adj = std::vector<std::vector<int>>;
using Mask = std::vector<bool>;

inline Adj adjacency(const forcelab::Graph& g) {
    Adj adj(g.order());
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(static_cast<int>(v));
        adj[v].push_back(static_cast<int>(u));
    }
    return adj;
}

inline Adj adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
    Adj adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

inline Mask mask_of(int n, std::uint64_t bits) {
    Mask m(n);
    for (int i = 0; i < n; ++i) m[i] = (bits >> i) & 1u;
    return m;
}

/// Labels the white components: comp[w] = component id, -1 for blue.
inline std::vector<int> white_components(const Adj& adj, const Mask& blue) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> comp(n, -1);
    int id = 0;
    for (int s = 0; s < n; ++s) {
        if (blue[s] || comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!blue[y] && comp[y] < 0) {
                    comp[y] = id;
                    stack.push_back(y);
                }
        }
        ++id;
    }
    return comp;
}

/// One round; returns the newly forced vertices (psd selects the rule).
inline std::vector<int> round(const Adj& adj, const Mask& blue, bool psd) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> forced;
    Mask hit(n, false);
    const auto comp = white_components(adj, blue);
    for (int v = 0; v < n; ++v) {
        if (!blue[v]) continue;
        if (!psd) {
            int white = 0, last = -1;
            for (int w : adj[v])
                if (!blue[w]) ++white, last = w;
            if (white == 1 && !hit[last]) hit[last] = true, forced.push_back(last);
            continue;
        }
        // For every white component, count v's neighbors inside it.
        std::vector<std::pair<int, int>> seen;  // (component, neighbor)
        for (int w : adj[v])
            if (!blue[w]) seen.emplace_back(comp[w], w);
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 0; i < seen.size();) {
            std::size_t j = i;
            while (j < seen.size() && seen[j].first == seen[i].first) ++j;
            if (j - i == 1 && !hit[seen[i].second]) hit[seen[i].second] = true, forced.push_back(seen[i].second);
            i = j;
        }
    }
    std::sort(forced.begin(), forced.end());
    return forced;
}

/// Propagation time, or nullopt if the set stalls.
inline std::optional<int> pt(const Adj& adj, Mask blue, bool psd) {
    int t = 0;
    while (std::find(blue.begin(), blue.end(), false) != blue.end()) {
        const auto f = round(adj, blue, psd);
        if (f.empty()) return std::nullopt;
        for (int w : f) blue[w] = true;
        ++t;
    }
    return t;
}

struct Best {
    std::int64_t scaled = 0;  // a|S| + b pt for omega = a/b
    int size = 0;
    int pt = 0;
    std::uint64_t set = 0;
};

/// Full enumeration of all 2^n - 1 nonempty subsets, no pruning.
inline Best throttle(const Adj& adj, bool psd, std::int64_t a = 1, std::int64_t b = 1) {
    const int n = static_cast<int>(adj.size());
    Best best{INT64_MAX, 0, 0, 0};
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        const auto p = pt(adj, mask_of(n, bits), psd);
        if (!p) continue;
        const int size = __builtin_popcountll(bits);
        const std::int64_t value = a * size + b * *p;
        if (value < best.scaled || (value == best.scaled && size < best.size))
            best = {value, size, *p, bits};
    }
    return best;
}

/// Minimum forcing set size.
inline int zero_forcing(const Adj& adj, bool psd) {
    const int n = static_cast<int>(adj.size());
    int best = n;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        const int size = __builtin_popcountll(bits);
        if (size < best && pt(adj, mask_of(n, bits), psd)) best = size;
    }
    return best;
}

inline bool adjacent(const Adj& adj, int u, int v) {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

inline int alpha(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    int best = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if ((bits >> u) & 1u)
                for (int v : adj[u])
                    if ((bits >> v) & 1u) ok = false;
        if (ok) best = std::max(best, __builtin_popcountll(bits));
    }
    return best;
}

/// Induced copy of `pattern` by trying every injective map.
inline bool has_induced(const Adj& g, const Adj& pattern) {
    const int n = static_cast<int>(g.size()), k = static_cast<int>(pattern.size());
    if (k > n) return false;
    std::vector<int> map(k);
    std::vector<bool> used(n, false);
    std::function<bool(int)> place = [&](int i) {
        if (i == k) return true;
        for (int x = 0; x < n; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = adjacent(g, x, map[j]) == adjacent(pattern, i, j);
            if (!ok) continue;
            used[x] = true;
            map[i] = x;
            if (place(i + 1)) return true;
            used[x] = false;
        }
        return false;
    };
    return place(0);
}

inline bool connected(const Adj& adj) {
    if (adj.empty()) return true;
    const auto comp = white_components(adj, Mask(adj.size(), false));
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

/// BFS eccentricity-based diameter; -1 when disconnected.
inline int diameter(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> d(n, -1);
        std::vector<int> queue{s};
        d[s] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int y : adj[queue[i]])
                if (d[y] < 0) d[y] = d[queue[i]] + 1, queue.push_back(y);
        for (int x : d) {
            if (x < 0) return -1;
            best = std::max(best, x);
        }
    }
    return best;
}

/// Random graph G(n, p) as a forcelab::Graph.
inline forcelab::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<forcelab::Edge> edges;
    for (forcelab::Vertex u = 0; u < n; ++u)
        for (forcelab::Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return forcelab::Graph::from_edges(n, edges);
}

}  // namespace oracle
