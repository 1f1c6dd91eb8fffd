#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "forcelab/error.hpp"
#include "forcelab/extended.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/graph.hpp"
#include "forcelab/rational.hpp"

namespace forcelab {

struct ThrottleResult {
    Rational value;  // omega * witness_size + witness_pt
    VertexSet witness;
    std::uint32_t witness_pt = 0;
    std::size_t witness_size = 0;
    Rule rule = Rule::PSD;
    Rational omega{1};
    bool proven_optimal = true;
};

struct SearchBudget {
    std::size_t max_n = 20;
    std::uint64_t max_subsets = UINT64_MAX;
    std::chrono::milliseconds wall_clock = std::chrono::milliseconds::max();
    unsigned parallelism = 1;
};

/// Thrown when a search runs out of subsets or time before certifying the
/// optimum. Carries the best set found so far (proven_optimal == false).
class BudgetExhausted : public Error {
public:
    explicit BudgetExhausted(ThrottleResult incumbent)
        : Error("search budget exhausted before optimality was proven"), incumbent_(std::move(incumbent)) {}
    const ThrottleResult& incumbent() const noexcept { return incumbent_; }

private:
    ThrottleResult incumbent_;
};

/// omega * |S| + pt(G; S), or ∞ when S is not a forcing set.
Extended<Rational> throttle_of_set(const Graph& g, const VertexSet& s, Rule rule, Rational omega = 1);

/// th(G), th₊(G) or th₊^ω(G) by pruned ascending-size enumeration.
///
/// Ties on value go to the smaller set, then to the lexicographically least.
/// Throws CapacityError if n > budget.max_n, DomainError if omega <= 0,
/// BudgetExhausted if the subset or time budget runs out.
ThrottleResult throttle_exact(const Graph& g, Rule rule, Rational omega = 1, const SearchBudget& budget = {});

/// Optimum restricted to |S| = size; nullopt when no forcing set of that size exists.
std::optional<ThrottleResult> best_for_size(const Graph& g, Rule rule, std::size_t size, Rational omega = 1,
                                            const SearchBudget& budget = {});

}  // namespace forcelab
