#include "forcelab/forcing.hpp"

#include <algorithm>
#include <stdexcept>

#include "combinations.hpp"
#include "forcelab/error.hpp"
#include "forcelab/formulas.hpp"
#include "forcelab/metrics.hpp"

namespace forcelab {

std::string_view to_string(Rule rule) noexcept { return rule == Rule::PSD ? "psd" : "std"; }

namespace {

// One simultaneous round. When `forcer_of` is non-null it receives the
// lowest-indexed eligible forcer of every forced vertex.
VertexSet round(const Graph& g, const VertexSet& blue, Rule rule, std::vector<Vertex>* forcer_of) {
    const VertexSet white = blue.complement(g.order());
    VertexSet forced;
    auto offer = [&](Vertex v, const VertexSet& candidates) {
        if (!candidates.is_singleton()) return;
        const Vertex w = candidates.first();
        if (forced.contains(w)) return;  // an earlier (lower-indexed) forcer wins
        forced.insert(w);
        if (forcer_of) (*forcer_of)[w] = v;
    };
    if (rule == Rule::Standard) {
        blue.for_each([&](Vertex v) { offer(v, g.neighbors(v) & white); });
        return forced;
    }
    VertexSet rest = white;
    while (!rest.empty()) {
        VertexSet part;
        part.insert(rest.first());
        VertexSet frontier = part;
        VertexSet boundary;
        while (!frontier.empty()) {
            const VertexSet around = g.neighborhood(frontier);
            boundary |= around & blue;
            frontier = (around & rest) - part;
            part |= frontier;
        }
        rest -= part;
        boundary.for_each([&](Vertex v) { offer(v, g.neighbors(v) & part); });
    }
    return forced;
}

void check_growth(const Graph& g, std::size_t set_size, std::uint32_t steps) {
#ifdef FORCELAB_CHECK_INVARIANTS
    const BoundInputs b{g.order(), g.max_degree(), set_size, steps};
    if (!growth_constraint_holds(b))
        throw std::logic_error("growth constraint violated: n=" + std::to_string(b.n) + " |S|=" +
                               std::to_string(set_size) + " pt=" + std::to_string(steps));
#else
    (void)g;
    (void)set_size;
    (void)steps;
#endif
}

}  // namespace

std::vector<ForceEvent> step(const Graph& g, const VertexSet& blue, Rule rule, std::uint32_t round_number) {
    std::vector<Vertex> forcer_of(g.order());
    const VertexSet forced = round(g, blue, rule, &forcer_of);
    std::vector<ForceEvent> events;
    forced.for_each([&](Vertex w) { events.push_back({round_number, forcer_of[w], w}); });
    return events;
}

VertexSet forced_in_one_round(const Graph& g, const VertexSet& blue, Rule rule) {
    return round(g, blue, rule, nullptr);
}

PropagationOutcome propagate(const Graph& g, const VertexSet& s, Rule rule) {
    PropagationOutcome out;
    const VertexSet all = g.vertices();
    VertexSet blue = s & all;
    std::vector<Vertex> forcer_of(g.order());
    std::uint32_t t = 0;
    while (blue != all) {
        const VertexSet forced = round(g, blue, rule, &forcer_of);
        if (forced.empty()) break;
        ++t;
        forced.for_each([&](Vertex w) { out.history.push_back({t, forcer_of[w], w}); });
        out.per_step.push_back(forced);
        blue |= forced;
    }
    out.final_blue = blue;
    if (blue == all) {
        out.steps = t;
        check_growth(g, (s & all).size(), t);
    }
    return out;
}

ExtNat propagation_time(const Graph& g, const VertexSet& s, Rule rule, std::uint32_t limit) {
    const VertexSet all = g.vertices();
    VertexSet blue = s & all;
    std::uint32_t t = 0;
    while (blue != all) {
        if (t == limit) return ExtNat::infinity();
        const VertexSet forced = round(g, blue, rule, nullptr);
        if (forced.empty()) return ExtNat::infinity();
        blue |= forced;
        ++t;
    }
    check_growth(g, (s & all).size(), t);
    return t;
}

bool is_forcing_set(const Graph& g, const VertexSet& s, Rule rule) {
    return propagation_time(g, s, rule).is_finite();
}

ForcingForest forcing_forest(const Graph& g, const PropagationOutcome& outcome, const VertexSet& s) {
    if (outcome.steps.is_infinite()) throw DomainError("forcing forest of a set that does not force the graph");
    const std::size_t n = g.order();
    std::vector<Vertex> parent(n);
    std::vector<bool> has_parent(n, false);
    for (const auto& e : outcome.history) {
        parent[e.forced] = e.forcer;
        has_parent[e.forced] = true;
    }
    ForcingForest forest;
    std::vector<std::size_t> tree_of(n, 0);
    s.for_each([&](Vertex x) {
        tree_of[x] = forest.trees.size();
        forest.trees.push_back({x, VertexSet{x}, {}});
    });
    // History is in round order, so every forcer is placed before its children.
    for (const auto& e : outcome.history) {
        const std::size_t t = tree_of[e.forcer];
        tree_of[e.forced] = t;
        forest.trees[t].vertices.insert(e.forced);
        forest.trees[t].edges.emplace_back(e.forcer, e.forced);
    }
    return forest;
}

namespace {

ZeroForcingResult zero_forcing_connected(const Graph& g, Rule rule) {
    const std::size_t n = g.order();
    std::vector<Vertex> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i);
    for (std::size_t k = 1; k < n; ++k) {
        detail::Combinations combo(pool, k);
        do {
            const VertexSet s = combo.set();
            if (is_forcing_set(g, s, rule)) return {k, s};
        } while (combo.next());
    }
    return {n, g.vertices()};
}

}  // namespace

ZeroForcingResult zero_forcing_number(const Graph& g, Rule rule, std::size_t cap) {
    if (g.order() > cap)
        throw CapacityError("exact zero forcing search capped at order " + std::to_string(cap));
    const auto parts = components(g, g.vertices());
    if (parts.size() == 1) return zero_forcing_connected(g, rule);
    ZeroForcingResult total;
    for (const auto& part : parts) {
        std::vector<Vertex> labels;
        const Graph sub = g.induced(part, &labels);
        const auto r = zero_forcing_connected(sub, rule);
        total.value += r.value;
        r.witness.for_each([&](Vertex v) { total.witness.insert(labels[v]); });
    }
    return total;
}

std::uint32_t graph_propagation_time(const Graph& g, Rule rule, std::size_t cap) {
    const auto z = zero_forcing_number(g, rule, cap);
    const std::size_t n = g.order();
    std::vector<Vertex> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i);
    ExtNat best = ExtNat::infinity();
    detail::Combinations combo(pool, z.value);
    do {
        best = std::min(best, propagation_time(g, combo.set(), rule));
    } while (combo.next());
    return best.value();
}

}  // namespace forcelab
