#include <gtest/gtest.h>

#include <map>

#include "g2maps/components.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace g2maps;
using F = ComponentFamily;

namespace {

// Golden dimensions at (r, d) = (2, 4), one per family.
const std::vector<std::pair<std::string, int>> kGolden24{
    {"main", 13},         {"D(4)", 16},          {"D(3,1)", 15},      {"D(2,2)", 15},        {"D(2,1,1)", 14},
    {"D(1,1,1,1)", 13},   {"hypD(2)", 13},       {"hypD(1,1)", 12},   {"E(4)", 14},          {"E(3;1)", 13},
    {"E(2;2)", 13},       {"E(2;1,1)", 12},      {"EE(|4|)", 15},     {"EE(|3|1)", 14},      {"EE(|2|2)", 14},
    {"EE(|2|1,1)", 13},   {"EE(1|2|1)", 13},     {"EE(|1|3)", 14},    {"EE(|1|2,1)", 13},    {"EE(|1|1,1,1)", 12},
    {"EE(1|1|2)", 13},    {"EE(1|1|1,1)", 12},   {"brE(4)", 13},      {"brE(3;1)", 12},      {"brE(2;2)", 12},
    {"brE(2;1,1)", 11},   {"brE(1;3)", 12},      {"brE(1;2,1)", 11},  {"brE(1;1,1,1)", 10},
};

}  // namespace

TEST(Partitions, CountsAndOrder) {
    const std::vector<std::size_t> p{1, 2, 3, 5, 7, 11, 15, 22};
    for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(partitions(n).size(), p[n - 1]) << n;
    const auto four = partitions(4);
    std::vector<std::string> text;
    for (const auto& x : four) text.push_back(x.to_string());
    EXPECT_EQ(text, (std::vector<std::string>{"4", "3,1", "2,2", "2,1,1", "1,1,1,1"}));
    EXPECT_EQ(Partition({1, 3}).parts(), (std::vector<unsigned>{3, 1}));
    EXPECT_THROW(Partition({2, 0}), DomainError);
    EXPECT_EQ(Partition({2}).merged(Partition({3, 1})).to_string(), "3,2,1");
}

TEST(Families, GoldenTableAtTwoFour) {
    const auto fams = enumerate_families(2, 4);
    ASSERT_EQ(fams.size(), kGolden24.size());
    ASSERT_EQ(fams.size(), 29u);
    for (std::size_t i = 0; i < fams.size(); ++i) {
        EXPECT_EQ(fams[i].to_spec(), kGolden24[i].first);
        EXPECT_EQ(dimension(fams[i], 2, 4), kGolden24[i].second) << kGolden24[i].first;
    }
    // The cubic family with one elliptic tail takes the formula value.
    EXPECT_EQ(dimension(parse_family_spec("E(3;1)"), 2, 4), 13);
}

TEST(Families, EnumerationAtTwoThree) {
    std::vector<std::string> specs;
    for (const auto& f : enumerate_families(2, 3)) specs.push_back(f.to_spec());
    EXPECT_EQ(specs, (std::vector<std::string>{"main", "D(3)", "D(2,1)", "D(1,1,1)", "hypD(1)", "E(3)", "E(2;1)",
                                               "EE(|3|)", "EE(|2|1)", "EE(|1|2)", "EE(|1|1,1)", "EE(1|1|1)", "brE(3)",
                                               "brE(2;1)", "brE(1;2)", "brE(1;1,1)"}));
}

TEST(Families, RegimeErrors) {
    EXPECT_THROW(enumerate_families(2, 2), OutOfRegime);
    EXPECT_THROW(enumerate_families(0, 4), DomainError);
    EXPECT_THROW(dimension(parse_family_spec("D(4)"), 2, 5), DomainError);
    EXPECT_THROW(F::main().degree(), DomainError);
    EXPECT_THROW(F::E(1, Partition({3})), DomainError);
}

TEST(Families, VirtualDimensionAndHyperellipticCover) {
    EXPECT_EQ(virtual_dimension(2, 4), 13);
    EXPECT_EQ(virtual_dimension(3, 5), 20);
    EXPECT_EQ(hyperelliptic_cover_dimension(2, 1), 9);
}

// Twenty randomized (r, d, k) tuples: one family of every applicable kind with k
// tails, checked against the clutching-sum oracle.
TEST(Families, FormulasAgreeWithClutchingOracle) {
    g2maps::testing::Gen g(31);
    int tuples = 0;
    while (tuples < 20) {
        const int r = g.integer(1, 6), d = g.integer(3, 9), k = g.integer(1, 4);
        if (k > d) continue;
        ++tuples;
        EXPECT_EQ(dimension(F::main(), r, d), oracle::clutching_dimension(F::main(), r, d));
        for (const auto& f : enumerate_families(r, d)) {
            if (f.kind() == F::Kind::Main || static_cast<int>(f.tail_count()) != k) continue;
            EXPECT_EQ(dimension(f, r, d), oracle::clutching_dimension(f, r, d))
                << f.to_spec() << " at r=" << r << " d=" << d;
        }
    }
}

TEST(Families, SpecRoundTripEverywhere) {
    for (int d = 3; d <= 7; ++d)
        for (const auto& f : enumerate_families(2, d)) {
            EXPECT_EQ(parse_family_spec(f.to_spec()), f) << f.to_spec();
            if (f.kind() != F::Kind::Main) {
                EXPECT_EQ(static_cast<int>(f.degree()), d);
            }
        }
}

TEST(Families, SpecParsing) {
    EXPECT_EQ(parse_family_spec("EE(3|1|)"), F::EE(Partition(), 1, Partition({3})));
    EXPECT_EQ(parse_family_spec("EE(3|1|)").to_spec(), "EE(|1|3)");
    EXPECT_EQ(parse_family_spec("D(1,3)").to_spec(), "D(3,1)");
    EXPECT_EQ(parse_family_spec(" D( 2 , 2 ) ").to_spec(), "D(2,2)");
    try {
        parse_family_spec("D(4,)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    for (const char* bad : {"", "X(4)", "D(4", "D()", "E(1;3)", "brE(0;4)", "EE(|0|)", "main("})
        EXPECT_THROW(parse_family_spec(bad), Error) << bad;
}

TEST(Families, Reductions) {
    EXPECT_EQ(reduction_target(parse_family_spec("EE(1|1|2)")).to_spec(), "D(2,1,1)");
    EXPECT_EQ(reduction_target(parse_family_spec("brE(1;3)")).to_spec(), "D(3,1)");
    EXPECT_TRUE(is_reducing(parse_family_spec("EE(|1|1,1,1)")));
    EXPECT_FALSE(is_reducing(parse_family_spec("EE(1|2|1)")));
    EXPECT_THROW(reduction_target(parse_family_spec("D(4)")), DomainError);
}

TEST(DualGraphs, GenusTwoAndWeightD) {
    for (int d = 3; d <= 6; ++d)
        for (const auto& f : enumerate_families(2, d)) {
            const DualGraph g = generic_dual_graph(f, d);
            EXPECT_EQ(g.total_genus(), 2u) << f.to_spec();
            EXPECT_EQ(g.total_weight(), static_cast<unsigned>(d)) << f.to_spec();
        }
    const DualGraph bre = generic_dual_graph(parse_family_spec("brE(4)"), 4);
    EXPECT_EQ(bre.edges.size(), 2u);  // the non-separating bridge meets the elliptic curve twice
    EXPECT_EQ(bre.vertices.size(), 2u);
}
