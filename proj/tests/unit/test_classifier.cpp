#include <gtest/gtest.h>

#include <fstream>
#include <string>

#include "forcelab/classifier.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/graph_io.hpp"
#include "oracles.hpp"

using namespace forcelab;

namespace {

Graph edges(std::size_t n, std::vector<Edge> e) { return Graph::from_edges(n, e); }

std::vector<Graph> load(const std::string& name) {
    std::ifstream in(std::string(FORCELAB_TEST_DATA) + "/" + name);
    std::vector<Graph> out;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(parse_graph6(line));
    return out;
}

}  // namespace

TEST(Classifier, LowEndExamples) {
    EXPECT_TRUE(is_thp_one(gen::empty(1)));
    EXPECT_FALSE(is_thp_one(gen::path(2)));
    EXPECT_TRUE(is_thp_two(gen::star(5)));
    EXPECT_TRUE(is_thp_two(gen::path(2)));
    EXPECT_TRUE(is_thp_two(gen::empty(2)));
    EXPECT_FALSE(is_thp_two(gen::path(4)));
    EXPECT_FALSE(is_thp_two(gen::empty(3)));

    EXPECT_TRUE(is_thp_three(gen::empty(3)));
    EXPECT_TRUE(is_thp_three(gen::path(4)));
    EXPECT_TRUE(is_thp_three(gen::path(5)));
    EXPECT_TRUE(is_thp_three(gen::path(6)));
    EXPECT_FALSE(is_thp_three(gen::path(7)));
    EXPECT_TRUE(is_thp_three(gen::cycle(4)));
    EXPECT_TRUE(is_thp_three(gen::disjoint_union(gen::path(2), gen::star(3))));
    EXPECT_FALSE(is_thp_three(gen::disjoint_union(gen::path(3), gen::cycle(3))));
    EXPECT_FALSE(is_thp_three(gen::star(3)));
}

TEST(Classifier, PairReadings) {
    for (const Graph& g : {gen::complete(3), gen::complete_bipartite(2, 3)}) {
        EXPECT_TRUE(is_thp_three(g, PairReading::Closed));
        EXPECT_FALSE(is_thp_three(g, PairReading::Literal));
    }
    const auto ev = thp_three_evidence(gen::cycle(4));
    ASSERT_TRUE(ev);
    ASSERT_EQ(ev->reason, ThreeReason::Pair);
    const auto [u, v] = *ev->pair;
    VertexSet pair;
    pair.insert(u);
    pair.insert(v);
    EXPECT_EQ(propagation_time(gen::cycle(4), pair, Rule::PSD), ExtNat(1u));
}

TEST(Classifier, FamilyMembership) {
    EXPECT_TRUE(in_family_g(gen::cycle(4)).member);
    EXPECT_TRUE(in_family_g(edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})).member);  // K4 − e
    EXPECT_EQ(in_family_g(gen::complete(6)).reason, FamilyRejection::AlphaOne);
    EXPECT_EQ(in_family_g(gen::path(5)).reason, FamilyRejection::AlphaAtLeastThree);
    EXPECT_EQ(in_family_g(gen::cycle(5)).reason, FamilyRejection::InducedC5);
    EXPECT_EQ(in_family_g(gen::house()).reason, FamilyRejection::InducedHouse);
    EXPECT_EQ(in_family_g(gen::double_diamond()).reason, FamilyRejection::InducedDoubleDiamond);

    const auto triple = in_family_g(gen::empty(3));
    ASSERT_EQ(triple.witness.size(), 3u);
    const auto adj = oracle::adjacency(gen::empty(3));
    EXPECT_FALSE(oracle::adjacent(adj, static_cast<int>(triple.witness[0]), static_cast<int>(triple.witness[1])));
    EXPECT_EQ(to_string(FamilyRejection::InducedHouse), "induced house");
}

TEST(Classifier, ForbiddenGraphsHaveTheExpectedShape) {
    for (const Graph& g : {gen::cycle(5), gen::house(), gen::double_diamond()}) {
        const auto adj = oracle::adjacency(g);
        EXPECT_EQ(oracle::alpha(adj), 2);
        EXPECT_TRUE(oracle::connected(adj));
        EXPECT_EQ(oracle::throttle(adj, true).scaled, static_cast<std::int64_t>(g.order()) - 2);
    }
}

TEST(Classifier, ClassifyExamples) {
    const auto k5 = classify(gen::complete(5));
    EXPECT_TRUE(k5.has(ExtremeClass::ThpEqualsN));
    EXPECT_TRUE(k5.has(ExtremeClass::ThpAtLeastNMinus1));
    const auto p5 = classify(gen::path(5));
    EXPECT_TRUE(p5.has(ExtremeClass::ThpThree));
    EXPECT_FALSE(p5.has(ExtremeClass::ThpAtLeastNMinus1));
    const auto split = classify(gen::disjoint_union(gen::complete(3), gen::complete(3)));
    EXPECT_FALSE(split.high_end_asserted);
    EXPECT_TRUE(split.classes.empty());
    EXPECT_EQ(to_string(ExtremeClass::ThpOne), "thp=1");
}

// Every class claim against full enumeration on all graphs up to 7 vertices.
TEST(Classifier, AgreesWithEnumerationOnCensus) {
    const auto graphs = load("graphs_n1-7.g6");
    ASSERT_EQ(graphs.size(), 1252u);
    for (const Graph& g : graphs) {
        const auto adj = oracle::adjacency(g);
        const auto n = static_cast<std::int64_t>(g.order());
        const std::int64_t thp = oracle::throttle(adj, true).scaled;
        const auto c = classify(g);
        const std::string id = to_graph6(g);
        EXPECT_EQ(c.has(ExtremeClass::ThpOne), thp == 1) << id;
        EXPECT_EQ(c.has(ExtremeClass::ThpTwo), thp == 2) << id;
        EXPECT_EQ(c.has(ExtremeClass::ThpThree), thp == 3) << id;
        if (oracle::connected(adj)) {
            ASSERT_TRUE(c.high_end_asserted);
            EXPECT_EQ(c.has(ExtremeClass::ThpEqualsN), thp == n) << id;
            EXPECT_EQ(c.has(ExtremeClass::ThpAtLeastNMinus1), thp >= n - 1) << id;
            EXPECT_EQ(in_family_g(g).member, thp == n - 1) << id;
        }
    }
}
