#include <gtest/gtest.h>

#include <random>

#include "forcelab/error.hpp"
#include "forcelab//generators.hpp"
#include "forcelab/graph_io.hpp"
#include "forcelab/throttle.hpp"
#include "forcelab/verify.hpp"
#include "oracles.hpp"

using namespace forcelab;

namespace {

SearchBudget wide(std::size_t max_n = 24, unsigned threads = 1) {
    SearchBudget b;
    b.max_n = max_n;
    b.parallelism = threads;
    return b;
}

void expect_consistent(const Graph& g, const ThrottleResult& r) {
    const ExtNat pt = propagation_time(g, r.witness, r.rule);
    ASSERT_TRUE(pt.is_finite());
    EXPECT_EQ(pt.value(), r.witness_pt);
    EXPECT_EQ(r.witness.size(), r.witness_size);
    EXPECT_EQ(r.value, r.omega * Rational(static_cast<std::int64_t>(r.witness_size)) +
                           Rational(static_cast<std::int64_t>(r.witness_pt)));
}

}  // namespace

TEST(ThrottleOfSet, Examples) {
    EXPECT_EQ(throttle_of_set(gen::star(3), VertexSet{0}, Rule::PSD).value(), Rational(2));
    const Graph c = gen::cycle(7);
    EXPECT_EQ(throttle_of_set(c, c.vertices(), Rule::PSD).value(), Rational(7));
    const Graph ladder = gen::cartesian_product(gen::path(10), gen::path(2));
    EXPECT_EQ(throttle_of_set(ladder, VertexSet{4, 5, 14, 15}, Rule::PSD).value(), Rational(6));
    EXPECT_TRUE(throttle_of_set(gen::complete(3), VertexSet{0}, Rule::PSD).is_infinite());
    EXPECT_EQ(throttle_of_set(gen::path(4), VertexSet{1}, Rule::PSD, Rational(2)).value(), Rational(4));
    EXPECT_THROW(throttle_of_set(gen::path(4), VertexSet{1}, Rule::PSD, Rational(0)), DomainError);
}

TEST(ThrottleExact, Examples) {
    EXPECT_EQ(throttle_exact(gen::path(22), Rule::PSD, 1, wide()).value, Rational(7));
    EXPECT_EQ(throttle_exact(gen::complete(4), Rule::PSD).value, Rational(4));
    const auto p4 = throttle_exact(gen::path(4), Rule::PSD, Rational(2));
    EXPECT_EQ(p4.value, Rational(4));
    EXPECT_EQ(p4.witness_size, 1u);
    EXPECT_EQ(p4.witness_pt, 2u);
    EXPECT_EQ(throttle_exact(gen::complete(1), Rule::PSD).value, Rational(1));
    EXPECT_EQ(throttle_exact(gen::empty(3), Rule::PSD).value, Rational(3));
    EXPECT_TRUE(throttle_exact(gen::empty(3), Rule::PSD).proven_optimal);
}

TEST(ThrottleExact, TieBreaksToSmallerThenLexLeast) {
    // P2: {0} and {1} both give 2.
    EXPECT_EQ(throttle_exact(gen::path(2), Rule::PSD).witness, VertexSet{0});
    // C4: no single vertex forces; {0,1} and {0,2} both give 3.
    const auto c4 = throttle_exact(gen::cycle(4), Rule::PSD);
    EXPECT_EQ(c4.value, Rational(3));
    EXPECT_EQ(c4.witness, (VertexSet{0, 1}));
    // P22: value 7 is reached with 2 vertices (pt 5) as well as by the
    // 4-vertex snake set (pt 3); the smaller set is reported.
    const auto p22 = throttle_exact(gen::path(22), Rule::PSD, 1, wide());
    EXPECT_EQ(p22.value, Rational(7));
    EXPECT_EQ(p22.witness_size, 2u);
}

TEST(ThrottleExact, MatchesUnprunedEnumeration) {
    std::mt19937_64 rng(31);
    const std::pair<std::int64_t, std::int64_t> omegas[] = {{1, 1}, {1, 2}, {2, 1}, {3, 2}};
    for (int trial = 0; trial < 240; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + trial % 8, 0.25 + 0.05 * (trial % 8));
        const auto adj = oracle::adjacency(g);
        for (Rule rule : {Rule::PSD, Rule::Standard}) {
            const auto [a, b] = omegas[trial % 4];
            const auto expected = oracle::throttle(adj, rule == Rule::PSD, a, b);
            const auto got = throttle_exact(g, rule, Rational(a, b));
            EXPECT_EQ(got.value, Rational(expected.scaled, b)) << to_graph6(g);
            EXPECT_EQ(got.witness_size, static_cast<std::size_t>(expected.size)) << to_graph6(g);
            expect_consistent(g, got);
        }
    }
}

TEST(ThrottleExact, DeterministicAcrossThreadCounts) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 12; ++trial) {
        const Graph g = oracle::random_graph(rng, 14 + trial % 4, 0.2);
        for (Rule rule : {Rule::PSD, Rule::Standard}) {
            const auto one = throttle_exact(g, rule, 1, wide(24, 1));
            const auto four = throttle_exact(g, rule, 1, wide(24, 4));
            EXPECT_EQ(one.value, four.value);
            EXPECT_EQ(one.witness, four.witness);
            EXPECT_EQ(one.witness_pt, four.witness_pt);
        }
    }
    const Graph p = gen::path(20);
    EXPECT_EQ(throttle_exact(p, Rule::PSD, 1, wide(24, 3)).witness, throttle_exact(p, Rule::PSD).witness);
}

TEST(ThrottleExact, ErrorsAndBudgets) {
    EXPECT_THROW(throttle_exact(gen::path(21), Rule::PSD), CapacityError);
    EXPECT_THROW(throttle_exact(gen::path(4), Rule::PSD, Rational(-1)), DomainError);
    SearchBudget tiny = wide();
    tiny.max_subsets = 5;
    try {
        throttle_exact(gen::cycle(18), Rule::PSD, 1, tiny);
        FAIL() << "expected BudgetExhausted";
    } catch (const BudgetExhausted& e) {
        EXPECT_FALSE(e.incumbent().proven_optimal);
        expect_consistent(gen::cycle(18), e.incumbent());
    }
    SearchBudget instant = wide();
    instant.wall_clock = std::chrono::milliseconds(0);
    EXPECT_THROW(throttle_exact(gen::cycle(18), Rule::Standard, 1, instant), BudgetExhausted);
}

TEST(BestForSize, Examples) {
    const Graph ladder = gen::cartesian_product(gen::path(10), gen::path(2));
    const auto two = best_for_size(ladder, Rule::PSD, 2, 1, wide());
    ASSERT_TRUE(two.has_value());
    EXPECT_GE(two->value, Rational(7));
    const auto k5 = best_for_size(gen::complete(5), Rule::PSD, 4);
    ASSERT_TRUE(k5.has_value());
    EXPECT_EQ(k5->value, Rational(5));
    const auto c5 = best_for_size(gen::cycle(5), Rule::PSD, 2);
    ASSERT_TRUE(c5.has_value());
    EXPECT_EQ(c5->value, Rational(3));
    EXPECT_EQ(c5->witness_pt, 1u);
    EXPECT_FALSE(best_for_size(gen::complete(5), Rule::PSD, 3).has_value());
    EXPECT_FALSE(best_for_size(gen::empty(3), Rule::PSD, 2).has_value());
}

TEST(BestForSize, MatchesEnumerationPerSize) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(rng, 2 + trial % 7, 0.4);
        const auto adj = oracle::adjacency(g);
        const int n = static_cast<int>(g.order());
        for (int size = 1; size <= n; ++size) {
            int best = -1;
            for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
                if (__builtin_popcountll(bits) != size) continue;
                const auto p = oracle::pt(adj, oracle::mask_of(n, bits), true);
                if (p && (best < 0 || *p < best)) best = *p;
            }
            const auto got = best_for_size(g, Rule::PSD, static_cast<std::size_t>(size));
            ASSERT_EQ(got.has_value(), best >= 0);
            if (got) EXPECT_EQ(got->witness_pt, static_cast<std::uint32_t>(best));
        }
    }
}

TEST(ThrottleProperties, WeightedMonotoneAndBoundedByZeroForcing) {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + trial % 9, 0.4);
        Rational previous(0);
        for (const Rational& w : {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
            const Rational value = throttle_exact(g, Rule::PSD, w).value;
            EXPECT_LE(previous, value);
            previous = value;
            if (w >= Rational(1)) {
                const auto z = zero_forcing_number(g, Rule::PSD);
                const Rational bound = w * Rational(static_cast<std::int64_t>(z.value)) +
                                       Rational(static_cast<std::int64_t>(graph_propagation_time(g, Rule::PSD)));
                EXPECT_LE(value, bound);
            }
        }
    }
}

TEST(ThrottleProperties, InducedSubgraphBound) {
    // th+(G) <= n - k + th+(H) for an induced subgraph H of order k.
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(rng, 2 + trial % 8, 0.45);
        const std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(1, (1u << g.order()) - 1)(rng);
        const VertexSet part = VertexSet::from_mask(mask);
        const Rational whole = throttle_exact(g, Rule::PSD).value;
        const Rational sub = throttle_exact(g.induced(part), Rule::PSD).value;
        EXPECT_LE(whole, Rational(static_cast<std::int64_t>(g.order() - part.size())) + sub) << to_graph6(g);
    }
}
