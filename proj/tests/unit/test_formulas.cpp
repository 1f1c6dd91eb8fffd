#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "forcelab/error.hpp"
#include "forcelab//formulas.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/throttle.hpp"
#include "oracles.hpp"

using namespace forcelab;

namespace {

// Least t >= 0 with (2t+1)^2 >= 8n, by scanning.
std::uint64_t scan_half_ceiling(std::uint64_t n) {
    std::uint64_t t = 0;
    while ((2 * t + 1) * (2 * t + 1) < 8 * n) ++t;
    return t;
}

std::uint64_t search(const Graph& g, Rule rule = Rule::PSD, Rational omega = 1) {
    SearchBudget b;
    b.max_n = 24;
    const Rational v = throttle_exact(g, rule, omega, b).value;
    EXPECT_TRUE(v.is_integer());
    return static_cast<std::uint64_t>(v.num());
}

std::uint64_t value_of(const Graph& g, const VertexSet& s, Rule rule) {
    const auto v = throttle_of_set(g, s, rule);
    EXPECT_TRUE(v.is_finite());
    return v.is_finite() ? static_cast<std::uint64_t>(v.value().num()) : 0;
}

}  // namespace

TEST(Formulas, HalfCeilingMatchesScan) {
    for (std::uint64_t n = 0; n <= 20000; ++n) ASSERT_EQ(ceil_sqrt2n_half(n), scan_half_ceiling(n)) << n;
    // Far out, compare to floating point where it is unambiguous.
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20000; ++i) {
        const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 1ull << 40)(rng);
        const long double x = std::sqrt(2.0L * n) - 0.5L;
        if (std::fabs(x - std::round(x)) < 1e-6L) continue;
        ASSERT_EQ(ceil_sqrt2n_half(n), static_cast<std::uint64_t>(std::ceil(x))) << n;
    }
    EXPECT_EQ(isqrt(0), 0u);
    EXPECT_EQ(isqrt(99), 9u);
    EXPECT_EQ(isqrt(100), 10u);
    EXPECT_EQ(isqrt(UINT64_MAX), 4294967295u);
}

TEST(Formulas, SnakeParameters) {
    EXPECT_EQ(snake_params(22).k, 6u);
    EXPECT_EQ(snake_params(22).r, 4u);
    EXPECT_EQ(snake_params(1).k, 0u);
    EXPECT_EQ(snake_params(8).k, 4u);
    for (std::uint64_t n = 1; n <= 100000; ++n) ASSERT_EQ(snake_piecewise(n), scan_half_ceiling(n)) << n;
}

TEST(Formulas, PathAndCycleValues) {
    EXPECT_EQ(thp_path(22), 7u);
    EXPECT_EQ(thp_path(1), 1u);
    EXPECT_EQ(thp_cycle(3), 3u);
    EXPECT_EQ(thp_cycle(4), 3u);
    EXPECT_THROW(thp_cycle(2), DomainError);
    EXPECT_THROW(thp_path(0), DomainError);
}

TEST(Formulas, PathWitnessExamples) {
    EXPECT_EQ(witness_path(1), VertexSet{0});
    EXPECT_EQ(witness_path(22), (VertexSet{3, 10, 17, 21}));  // v4, v11, v18, v22 in 1-based labels
    EXPECT_THROW(witness_path(0), DomainError);
    EXPECT_THROW(witness_cycle(3), DomainError);
}

TEST(Formulas, WitnessesAttainTheFormulaUpToCapacity) {
    for (std::size_t n = 1; n <= kMaxVertices; ++n) {
        ASSERT_EQ(value_of(gen::path(n), witness_path(n), Rule::PSD), thp_path(n)) << n;
        if (n >= 4) ASSERT_EQ(value_of(gen::cycle(n), witness_cycle(n), Rule::PSD), thp_cycle(n)) << n;
        if (n >= 3) ASSERT_EQ(value_of(gen::cycle(n), witness_std_cycle(n), Rule::Standard), th_std_cycle(n)) << n;
    }
}

TEST(Formulas, StandardPathAndCycleAgainstSearch) {
    for (std::size_t n = 1; n <= 16; ++n) EXPECT_EQ(th_std_path(n), search(gen::path(n), Rule::Standard)) << n;
    for (std::size_t n = 3; n <= 14; ++n) EXPECT_EQ(th_std_cycle(n), search(gen::cycle(n), Rule::Standard)) << n;
    EXPECT_EQ(th_std_cycle(8), 5u);
    EXPECT_EQ(th_std_cycle(9), 6u);
    EXPECT_EQ(th_std_cycle(16), 7u);
    // ⌈2√n − 1⌉ at perfect squares and just past them.
    EXPECT_EQ(th_std_path(16), 7u);
    EXPECT_EQ(th_std_path(17), 8u);
}

TEST(Formulas, DeltaAtLeastThreeBound) {
    EXPECT_EQ(lb_delta_ge3(22, 4, 1), 4u);
    EXPECT_EQ(lb_delta_ge3(10, 3, 1), 3u);
    EXPECT_THROW(lb_delta_ge3(10, 2, 1), DomainError);
    EXPECT_THROW(lb_delta_ge3(10, 3, 0), DomainError);
    // s + least p whose growth capacity s(1 + Δ Σ_{t<p} (Δ−1)^t) reaches n.
    for (std::uint64_t delta = 3; delta <= 6; ++delta)
        for (std::uint64_t s = 1; s <= 4; ++s)
            for (std::uint64_t n = 1; n <= 3000; n += 7) {
                std::uint64_t p = 0, reach = s, layer = s * delta;
                while (reach < n) {
                    reach += layer;
                    layer *= delta - 1;
                    ++p;
                }
                ASSERT_EQ(lb_delta_ge3(n, delta, s), s + p) << n << " " << delta << " " << s;
            }
}

TEST(Formulas, GrowthCapacity) {
    EXPECT_EQ(growth_capacity(1, 2, 3), 7u);
    EXPECT_EQ(growth_capacity(2, 3, 2), 20u);
    EXPECT_EQ(growth_capacity(3, 0, 5), 3u);
    EXPECT_EQ(growth_capacity(3, 1, 5), 6u);
    EXPECT_EQ(growth_capacity(1, 100, 60), UINT64_MAX);
    EXPECT_TRUE(growth_constraint_holds({7, 2, 1, 3}));
    EXPECT_FALSE(growth_constraint_holds({8, 2, 1, 3}));
    EXPECT_EQ(min_possible_propagation_time(20, 3, 1, Rule::PSD), ExtNat(3u));
    EXPECT_EQ(min_possible_propagation_time(20, 3, 20, Rule::PSD), ExtNat(0u));
    EXPECT_TRUE(min_possible_propagation_time(20, 3, 0, Rule::PSD).is_infinite());
    EXPECT_TRUE(min_possible_propagation_time(5, 1, 2, Rule::PSD).is_infinite());
    EXPECT_EQ(min_possible_propagation_time(20, 2, 2, Rule::Standard), ExtNat(9u));
}

TEST(Formulas, MinimumPropagationTimeIsALowerBound) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 3000; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + trial % 11, 0.3);
        std::bernoulli_distribution coin(0.4);
        VertexSet s;
        for (Vertex v = 0; v < g.order(); ++v)
            if (coin(rng)) s.insert(v);
        for (Rule rule : {Rule::PSD, Rule::Standard}) {
            const ExtNat pt = propagation_time(g, s, rule);
            if (pt.is_infinite()) continue;
            EXPECT_LE(min_possible_propagation_time(g.order(), g.max_degree(), s.size(), rule), pt);
        }
    }
}

TEST(Formulas, LowDegreeValues) {
    EXPECT_EQ(thp_low_degree(3, 3, 0), 3u);
    EXPECT_THROW(thp_low_degree(3, 2, 0), DomainError);
    EXPECT_THROW(thp_low_degree(5, 0, 1), DomainError);
    // 2K2 + 2K1
    const Graph g = gen::disjoint_union(gen::disjoint_union(gen::path(2), gen::path(2)), gen::empty(2));
    EXPECT_EQ(thp_low_degree(6, 2, 1), search(g));
    EXPECT_EQ(thp_low_degree(2, 0, 1), search(gen::path(2)));
}

TEST(Formulas, TreeFamilies) {
    EXPECT_EQ(tree_bounds(4).lower, 3u);
    EXPECT_EQ(tree_bounds(4).upper, 3u);
    EXPECT_EQ(delta_tree_order(3, 2), 10u);
    EXPECT_EQ(delta_tree_order(4, 3), 53u);
    for (std::size_t h = 1; h <= 7; ++h) EXPECT_EQ(delta_tree_order(3, h), gen::delta_tree(3, h).order());
    EXPECT_EQ(thp_tdh(3, 2), 3u);
    EXPECT_EQ(thp_tdh(3, 3), 4u);
    EXPECT_EQ(thp_tdh(3, 4), 5u);
    EXPECT_EQ(thp_tdh(3, 2), search(gen::delta_tree(3, 2)));
    EXPECT_EQ(thp_tdh(4, 2), search(gen::delta_tree(4, 2)));
    EXPECT_EQ(thp_tdh(3, 3), search(gen::delta_tree(3, 3)));
    EXPECT_THROW(thp_tdh(3, 1), DomainError);
    for (std::size_t h = 1; h <= 3; ++h) EXPECT_EQ(thp_binary_tree(h), search(gen::full_binary_tree(h)));
}

TEST(Formulas, WeightedDegreeTwoBound) {
    for (const Rational& w : {Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(7, 3)}) {
        for (std::uint64_t n = 1; n <= 500; ++n) {
            std::uint64_t t = 0;
            const Rational target = Rational(8) * w * Rational(static_cast<std::int64_t>(n));
            while (Rational(static_cast<std::int64_t>((2 * t + 1) * (2 * t + 1))) < target) ++t;
            ASSERT_EQ(lb_delta2_weighted(n, w), t) << n << " " << w;
        }
    }
    EXPECT_EQ(lb_delta2_weighted(10, 1), lb_delta2(10));
    EXPECT_THROW(lb_delta2_weighted(10, Rational(0)), DomainError);
}

TEST(Formulas, WeightedGeneralBound) {
    const auto one = weighted_lb(10, 3, 1, 1);
    EXPECT_EQ(one.branch, WeightedBranch::SmallOmega);
    EXPECT_EQ(one.ceiling, 3);
    EXPECT_EQ(one.set_size, 1u);
    EXPECT_NEAR(static_cast<double>(one.real), 3.0, 1e-12);
    const auto two = weighted_lb(10, 3, 1, 2);
    EXPECT_EQ(two.branch, WeightedBranch::LargeOmega);
    EXPECT_EQ(two.ceiling, 4);
    EXPECT_NEAR(static_cast<double>(weighted_threshold(10, 3, 1)), 10.0 / (12.0 * std::log(2.0)), 1e-12);
    EXPECT_THROW(weighted_lb(10, 2, 1, 1), DomainError);
    EXPECT_THROW(weighted_lb(10, 3, 1, Rational(0)), DomainError);

    // Against the real-valued objective minimized over a generous range of s.
    for (std::uint64_t delta = 3; delta <= 5; ++delta)
        for (std::uint64_t n = 4; n <= 400; n += 13)
            for (const Rational& w : {Rational(1, 10), Rational(1, 3), Rational(1), Rational(5, 2)}) {
                const long double wd = w.to_double();
                long double best = 1e300L;
                for (std::uint64_t s = 1; s <= n + 200; ++s) {
                    const long double f = wd * s + std::log(((delta - 2.0L) * n + 2.0L * s) / (delta * 1.0L * s)) /
                                                       std::log(delta - 1.0L);
                    best = std::min(best, f);
                }
                const auto lb = weighted_lb(n, delta, 1, w);
                EXPECT_NEAR(static_cast<double>(lb.real), static_cast<double>(best), 1e-9) << n << " " << delta;
                if (std::fabs(best - std::round(best)) > 1e-9L) {
                    EXPECT_EQ(lb.ceiling, static_cast<std::int64_t>(std::ceil(best)));
                }
            }
}

TEST(Formulas, WeightedCeilingIsExactAtIntegers) {
    // n = 10, Δ = 3, s = 1, ω = 1: 1 + log2(12/3) = 3 exactly.
    EXPECT_EQ(weighted_lb(10, 3, 1, 1).ceiling, 3);
    // n = 22, Δ = 3, s = 1: log2(24/3) = 3, so 2 + 3 = 5 at ω = 2.
    EXPECT_EQ(weighted_lb(22, 3, 1, 2).ceiling, 5);
}
