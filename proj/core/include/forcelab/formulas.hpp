#pragma once

#include <cstddef>
#include <cstdint>

#include "forcelab/extended.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/rational.hpp"
#include "forcelab/vertex_set.hpp"

// Closed-form throttling values, bounds and witness constructions. Everything
// is exact integer arithmetic; ceilings of irrational expressions are found by
// searching for the least integer satisfying the squared/powered inequality.
namespace forcelab {

/// ⌈√(2n) − ½⌉, as the least t >= 0 with (2t+1)^2 >= 8n.
std::uint64_t ceil_sqrt2n_half(std::uint64_t n);

/// k = largest even k with k²/2 <= n, r = n − k²/2.
struct SnakeParams {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t r = 0;
};
SnakeParams snake_params(std::uint64_t n);

/// The three-case value: k if r < k/2+1, k+1 if r < 3k/2+2, else k+2.
std::uint64_t snake_piecewise(std::uint64_t n);

/// m = ⌊√n⌋, r = n − m².
struct StdCycleParams {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t r = 0;
};
StdCycleParams std_cycle_params(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n) noexcept;

// --- paths and cycles, PSD --------------------------------------------------

std::uint64_t thp_path(std::uint64_t n);
/// 3 for n = 3, ⌈√(2n) − ½⌉ for n >= 4. DomainError for n < 3.
std::uint64_t thp_cycle(std::uint64_t n);

/// Snake witness on gen::path(n). DomainError for n == 0 or n > kMaxVertices.
VertexSet witness_path(std::size_t n);
/// Evenly spaced witness on gen::cycle(n). DomainError for n < 4.
VertexSet witness_cycle(std::size_t n);

// --- lower bounds -------------------------------------------------------------

std::uint64_t lb_delta2(std::uint64_t n);
/// ⌈√(2ωn) − ½⌉ as the least t >= 0 with den·(2t+1)^2 >= 8·num·n.
std::uint64_t lb_delta2_weighted(std::uint64_t n, Rational omega);

/// ⌈s₀ + log_{Δ−1}(((Δ−2)n + 2s₀)/(Δs₀))⌉ = s₀ + least p with
/// Δ·s₀·(Δ−1)^p >= (Δ−2)n + 2s₀. DomainError for Δ < 3 or s₀ == 0.
std::uint64_t lb_delta_ge3(std::uint64_t n, std::uint64_t max_degree, std::uint64_t s0 = 1);

struct BoundInputs {
    std::uint64_t n = 0;
    std::uint64_t max_degree = 0;
    std::uint64_t set_size = 0;
    std::uint64_t prop_time = 0;
};

/// Most vertices a PSD set of size s can have colored after p rounds on a
/// graph of maximum degree Δ: s(1 + Δ Σ_{t<p} (Δ−1)^t), saturating.
std::uint64_t growth_capacity(std::uint64_t set_size, std::uint64_t max_degree, std::uint64_t prop_time);

/// n <= s(1 + 2p) for Δ = 2, n <= s(1 + (Δ(Δ−1)^p − Δ)/(Δ−2)) for Δ > 2
/// (and the same count s(1 + Δ Σ(Δ−1)^t) for Δ <= 1).
bool growth_constraint_holds(const BoundInputs& b);

/// Least p compatible with the growth constraint for a set of size s, and
/// for the standard rule also with s(p+1) >= n. ∞ when no p works.
ExtNat min_possible_propagation_time(std::uint64_t n, std::uint64_t max_degree, std::uint64_t set_size,
                                     Rule rule);

/// th₊ for Δ = 0 (n) and Δ = 1 ((n−k)/2 + k + 1, k isolated vertices).
std::uint64_t thp_low_degree(std::uint64_t n, std::uint64_t isolated, std::uint64_t max_degree);

// --- trees --------------------------------------------------------------------

struct TreeBounds {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
};
/// ⌈√(2(d+1)) − ½⌉ <= th₊(T) <= ⌈d/2⌉ + 1.
TreeBounds tree_bounds(std::uint64_t diameter);

std::uint64_t thp_binary_tree(std::uint64_t height);
std::uint64_t delta_tree_order(std::uint64_t max_degree, std::uint64_t height);
/// h + 1; throws std::logic_error if it disagrees with lb_delta_ge3 on T(Δ,h).
std::uint64_t thp_tdh(std::uint64_t max_degree, std::uint64_t height);

// --- standard throttling ------------------------------------------------------

/// ⌈2√n − 1⌉ as the least t with (t+1)^2 >= 4n.
std::uint64_t th_std_path(std::uint64_t n);
std::uint64_t th_std_cycle(std::uint64_t n);
/// Re-snaked right-column witness on gen::cycle(n) under the standard rule.
VertexSet witness_std_cycle(std::size_t n);

// --- weighted -----------------------------------------------------------------

enum class WeightedBranch { LargeOmega, SmallOmega };

struct WeightedLowerBound {
    WeightedBranch branch = WeightedBranch::LargeOmega;
    /// min over the branch's s-range of ωs + log_{Δ−1}(((Δ−2)n + 2s)/(Δs)).
    long double real = 0;
    /// ⌈real⌉, resolved exactly at integer boundaries.
    std::int64_t ceiling = 0;
    /// s attaining the minimum.
    std::uint64_t set_size = 0;
};

/// (1/ln(Δ−1)) · (Δ−2)n / (s₀(Δ−2)n + 2s₀²).
long double weighted_threshold(std::uint64_t n, std::uint64_t max_degree, std::uint64_t s0);

/// Large branch (ω >= threshold): s = s₀ only. Small branch: minimum over
/// s = s₀ .. max(s₀, ⌈1/(ω ln(Δ−1))⌉). DomainError for Δ < 3, s₀ == 0, ω <= 0.
WeightedLowerBound weighted_lb(std::uint64_t n, std::uint64_t max_degree, std::uint64_t s0, Rational omega);

}  // namespace forcelab
