#include "support/dot_checker.hpp"
#include "support/oracles.hpp"

#include <pcacrypt/affine.hpp>
#include <pcacrypt/transition_graph.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

using namespace pcacrypt;
using ca::Boundary;
using ca::Configuration;
using graph::BigInt;
using pca::RuleVector;

namespace {

const RuleVector kCanonicalVector{51, 51, 195, 153};

RuleVector from_ints(const std::vector<int>& v) { return RuleVector(std::span<const int>(v)); }

std::uint64_t max_distance(const graph::CycleDecomposition& d) {
    std::uint64_t m = 0;
    for (auto x : d.distance) m = std::max<std::uint64_t>(m, x);
    return m;
}

} // namespace

TEST(BuildGraph, CanonicalSuccessors) {
    const auto g = graph::build_graph(kCanonicalVector, Boundary::Null, 4);
    EXPECT_EQ(g.successor(0), 15u);
    EXPECT_EQ(g.successor(15), 2u);
    EXPECT_EQ(g.successor(2), 13u);
    EXPECT_EQ(g.successor(13), 0u);
    EXPECT_EQ(g.successor(5), 8u);
}

TEST(BuildGraph, IdentityRule) {
    const auto g = graph::build_graph(RuleVector::uniform(204, 6), Boundary::Periodic, 6);
    for (graph::State s = 0; s < 64; ++s) EXPECT_EQ(g.successor(s), s);
}

TEST(BuildGraph, RejectsOversizedAndMismatchedWidths) {
    EXPECT_THROW(graph::build_graph(RuleVector::uniform(51, 25), Boundary::Null, 25), std::length_error);
    EXPECT_THROW(graph::build_graph(kCanonicalVector, Boundary::Null, 5), std::invalid_argument);
    try {
        graph::build_graph(RuleVector::uniform(51, 30), Boundary::Null, 30);
    } catch (const std::length_error& e) {
        EXPECT_NE(std::string(e.what()).find("affine_order"), std::string::npos);
    }
}

TEST(BuildGraph, DeterministicAndWorkerIndependent) {
    const RuleVector rv{30, 90, 150, 51, 195, 153, 110, 204, 60, 102, 30, 45, 86, 153, 195, 51};
    const auto a = graph::build_graph(rv, Boundary::Periodic, 16, 1);
    const auto b = graph::build_graph(rv, Boundary::Periodic, 16, 1);
    const auto c = graph::build_graph(rv, Boundary::Periodic, 16, 4);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    for (std::uint64_t s = 0; s < a.state_count(); s += 97)
        EXPECT_EQ(a.successor(static_cast<graph::State>(s)),
                  pca::pca_step(Configuration::from_decimal(s, 16), rv, Boundary::Periodic).to_decimal());
}

TEST(FindCycles, CanonicalCycles) {
    const auto d = graph::find_cycles(graph::build_graph(kCanonicalVector, Boundary::Null, 4));
    const std::vector<std::vector<graph::State>> expect = {{0, 15, 2, 13}, {1, 14, 3, 12}, {4, 9, 6, 11}, {5, 8, 7, 10}};
    EXPECT_EQ(d.cycles, expect);
    EXPECT_EQ(d.transient_count(), 0u);
}

TEST(FindCycles, IdentityAndZeroRules) {
    const auto id = graph::find_cycles(graph::build_graph(RuleVector::uniform(204, 4), Boundary::Null, 4));
    EXPECT_EQ(id.cycles.size(), 16u);
    EXPECT_EQ(id.transient_count(), 0u);

    const auto zero = graph::find_cycles(graph::build_graph(RuleVector::uniform(0, 4), Boundary::Null, 4));
    ASSERT_EQ(zero.cycles.size(), 1u);
    EXPECT_EQ(zero.cycles[0], std::vector<graph::State>{0});
    EXPECT_EQ(zero.transient_count(), 15u);
    for (graph::State s = 1; s < 16; ++s) EXPECT_EQ(zero.distance[s], 1u);
}

TEST(FindCycles, PartitionsStateSpaceAndMatchesWalks) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t width = 1 + rng() % 10;
        std::vector<int> rules(width);
        for (auto& r : rules) r = static_cast<int>(rng() % 256);
        const auto b = (trial & 1) ? Boundary::Periodic : Boundary::Null;
        const auto g = graph::build_graph(from_ints(rules), b, width);
        const auto d = graph::find_cycles(g);

        std::size_t on_cycles = 0;
        std::set<graph::State> seen;
        for (std::size_t id = 0; id < d.cycles.size(); ++id) {
            const auto& c = d.cycles[id];
            on_cycles += c.size();
            EXPECT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
            if (id > 0) { EXPECT_LT(d.cycles[id - 1].front(), c.front()); }
            for (std::size_t i = 0; i < c.size(); ++i) {
                EXPECT_TRUE(seen.insert(c[i]).second);
                EXPECT_EQ(g.successor(c[i]), c[(i + 1) % c.size()]);
            }
        }
        EXPECT_EQ(on_cycles + d.transient_count(), g.state_count());

        for (graph::State s = 0; s < g.state_count(); ++s) {
            const auto orbit = graph::cycle_length_of(g, s);
            EXPECT_EQ(orbit.distance, d.distance[s]);
            EXPECT_EQ(orbit.cycle_length, d.cycles[d.cycle_id[s]].size());
        }
        if (graph::is_group_ca(g)) { EXPECT_EQ(d.transient_count(), 0u); }
    }
}

TEST(CycleLengthOf, Examples) {
    const auto canon = graph::build_graph(kCanonicalVector, Boundary::Null, 4);
    EXPECT_EQ(graph::cycle_length_of(canon, 0).cycle_length, 4u);
    EXPECT_FALSE(graph::cycle_length_of(canon, 0).transient());

    const auto id = graph::build_graph(RuleVector::uniform(204, 4), Boundary::Null, 4);
    EXPECT_EQ(graph::cycle_length_of(id, 7).cycle_length, 1u);

    const auto zero = graph::build_graph(RuleVector::uniform(0, 4), Boundary::Null, 4);
    const auto o = graph::cycle_length_of(zero, 7);
    EXPECT_TRUE(o.transient());
    EXPECT_EQ(o.distance, 1u);
    EXPECT_THROW(graph::cycle_length_of(zero, 16), std::out_of_range);
}

TEST(IsGroupCa, Examples) {
    EXPECT_TRUE(graph::is_group_ca(graph::build_graph(kCanonicalVector, Boundary::Null, 4)));
    EXPECT_FALSE(graph::is_group_ca(graph::build_graph(RuleVector::uniform(0, 4), Boundary::Null, 4)));
    EXPECT_TRUE(graph::is_group_ca(graph::build_graph(RuleVector::uniform(51, 4), Boundary::Null, 4)));
}

TEST(ExportDot, CanonicalGraphParsesWithFourColoredCycles) {
    const auto g = graph::build_graph(kCanonicalVector, Boundary::Null, 4);
    const auto d = graph::find_cycles(g);
    const auto parsed = dotcheck::parse(graph::export_dot(g, d));
    EXPECT_TRUE(parsed.directed);
    EXPECT_EQ(parsed.nodes.size(), 16u);
    EXPECT_EQ(parsed.edges.size(), 16u);
    std::set<std::string> colors;
    for (const auto& [name, attrs] : parsed.nodes) {
        ASSERT_TRUE(attrs.count("color")) << name;
        colors.insert(attrs.at("color"));
        EXPECT_EQ(attrs.at("on_cycle"), "true");
    }
    EXPECT_EQ(colors.size(), 4u);
    EXPECT_EQ(parsed.nodes.at("s0").at("cycle"), "0");
    EXPECT_EQ(parsed.nodes.at("s10").at("cycle"), "3");
}

TEST(ExportDot, SingleStateSelfLoop) {
    const auto g = graph::build_graph(RuleVector{204}, Boundary::Null, 1);
    // Width 1 has two states; both are fixed points.
    const auto parsed = dotcheck::parse(graph::export_dot(g, graph::find_cycles(g)));
    for (const auto& [from, to] : parsed.edges) EXPECT_EQ(from, to);

    const auto zero = graph::build_graph(RuleVector{0}, Boundary::Null, 1);
    const auto pz = dotcheck::parse(graph::export_dot(zero, graph::find_cycles(zero)));
    EXPECT_EQ(pz.edges.size(), 2u);
    EXPECT_EQ(pz.nodes.at("s1").at("on_cycle"), "false");
}

TEST(ExportDot, CheckerRejectsMalformedInput) {
    EXPECT_THROW(dotcheck::parse("digraph { a -> }"), std::runtime_error);
    EXPECT_THROW(dotcheck::parse("digraph { a -- b }"), std::runtime_error);
    EXPECT_THROW(dotcheck::parse("digraph { a [x=] }"), std::runtime_error);
    EXPECT_NO_THROW(dotcheck::parse("digraph g { a -> b -> c; b [label=\"x\\\"y\"]; }"));
}

TEST(ExportCsv, ColumnsAndRows) {
    const auto g = graph::build_graph(RuleVector::uniform(0, 3), Boundary::Null, 3);
    const auto d = graph::find_cycles(g);
    std::istringstream in(graph::export_csv(g, d));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "state,successor,cycle_id,cycle_length,distance_to_cycle");
    std::getline(in, line);
    EXPECT_EQ(line, "0,0,0,1,0");
    std::getline(in, line);
    EXPECT_EQ(line, "1,0,0,1,1");
}

TEST(SummaryLine, Formats) {
    auto summary = [](const RuleVector& rv) {
        return graph::summary_line(graph::find_cycles(graph::build_graph(rv, Boundary::Null, rv.size())));
    };
    EXPECT_EQ(summary(kCanonicalVector), "cycles=4 lengths=[4,4,4,4] transients=0");
    EXPECT_EQ(summary(RuleVector::uniform(204, 4)), "cycles=16 lengths=[1×16] transients=0");
    EXPECT_EQ(summary(RuleVector::uniform(0, 4)), "cycles=1 lengths=[1] transients=15");
}

TEST(AffineMapOf, Uniform51IsIdentityPlusOnes) {
    const auto m = graph::affine_map_of(RuleVector::uniform(51, 6), Boundary::Null, 6);
    EXPECT_EQ(m.matrix, graph::BitMatrix::identity(6));
    for (std::size_t i = 0; i < 6; ++i) EXPECT_TRUE(m.offset.get(i));
}

TEST(AffineMapOf, CanonicalVectorOffsetIsAllOnes) {
    const auto m = graph::affine_map_of(kCanonicalVector, Boundary::Null, 4);
    EXPECT_EQ(m.apply(Configuration::from_decimal(0, 4)).to_decimal(), 15u);
    // Tridiagonal.
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (r > c + 1 || c > r + 1) { EXPECT_FALSE(m.matrix.get(r, c)); }
}

TEST(AffineMapOf, RejectsNonlinearRules) {
    EXPECT_THROW(graph::affine_map_of(RuleVector{51, 30, 153}, Boundary::Null, 3), std::domain_error);
}

TEST(AffineMapOf, AgreesWithStepOnAllStates) {
    std::mt19937_64 rng(37);
    const std::vector<int> affine_rules = {0, 60, 90, 102, 150, 170, 204, 240, 15, 51, 85, 105, 153, 165, 195, 255};
    for (std::size_t width = 1; width <= 10; ++width)
        for (auto b : {Boundary::Null, Boundary::Periodic}) {
            const auto rules = oracle::random_rules(rng, static_cast<int>(width), affine_rules);
            const auto rv = from_ints(rules);
            const auto m = graph::affine_map_of(rv, b, width);
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << width); ++s) {
                const auto c = Configuration::from_decimal(s, width);
                ASSERT_EQ(m.apply(c), pca::pca_step(c, rv, b)) << rv.to_string() << " state " << s;
            }
        }
}

TEST(AffineMapOf, RandomComplementVectorWidth8) {
    std::mt19937_64 rng(41);
    const auto rv = from_ints(oracle::random_rules(rng, 8, {51, 195, 153}));
    const auto m = graph::affine_map_of(rv, Boundary::Null, 8);
    for (int i = 0; i < 100; ++i) {
        const auto c = Configuration::from_decimal(rng() & 0xff, 8);
        EXPECT_EQ(m.apply(c), pca::pca_step(c, rv, Boundary::Null));
    }
}

TEST(AffineOrder, Examples) {
    const auto canon = graph::affine_order(kCanonicalVector, Boundary::Null, 4);
    EXPECT_EQ(canon.period, 4);
    EXPECT_TRUE(canon.bijective);
    EXPECT_TRUE(canon.uniform_orbits);
    EXPECT_EQ(canon.zero_orbit_length, BigInt(4));

    const auto id = graph::affine_order(RuleVector::uniform(204, 7), Boundary::Null, 7);
    EXPECT_EQ(id.period, 1);
    EXPECT_TRUE(id.uniform_orbits);

    EXPECT_THROW(graph::affine_order(RuleVector{30, 51}, Boundary::Null, 2), std::domain_error);
}

TEST(AffineOrder, DoubledCanonicalVectorMatchesEnumeration) {
    const RuleVector rv{51, 51, 195, 153, 51, 51, 195, 153};
    const auto ord = graph::affine_order(rv, Boundary::Null, 8);
    const auto d = graph::find_cycles(graph::build_graph(rv, Boundary::Null, 8));
    std::uint64_t l = 1;
    for (auto len : d.cycle_lengths()) l = std::lcm<std::uint64_t>(l, len);
    EXPECT_EQ(ord.period, l);
    EXPECT_EQ(ord.bijective, d.transient_count() == 0);
    const auto lens = d.cycle_lengths();
    EXPECT_EQ(ord.uniform_orbits, std::all_of(lens.begin(), lens.end(), [&](auto x) { return x == l; }));
    EXPECT_EQ(*ord.zero_orbit_length, d.cycles[d.cycle_id[0]].size());
}

TEST(AffineOrder, MatchesEnumerationForAffineVectors) {
    std::mt19937_64 rng(43);
    const std::vector<int> affine_rules = {0, 60, 90, 102, 150, 170, 204, 240, 15, 51, 85, 105, 153, 165, 195, 255};
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t width = 1 + rng() % 11;
        const auto rules = oracle::random_rules(rng, static_cast<int>(width),
                                                trial % 2 ? affine_rules : std::vector<int>{51, 195, 153});
        const auto b = (trial % 4 < 2) ? Boundary::Null : Boundary::Periodic;
        const auto rv = from_ints(rules);
        const auto d = graph::find_cycles(graph::build_graph(rv, b, width));
        const auto ord = graph::affine_order(rv, b, width);
        std::uint64_t l = 1;
        for (auto len : d.cycle_lengths()) l = std::lcm<std::uint64_t>(l, len);
        EXPECT_EQ(ord.period, l) << rv.to_string();
        EXPECT_EQ(ord.preperiod, max_distance(d)) << rv.to_string();
        EXPECT_EQ(ord.bijective, d.transient_count() == 0);
        if (ord.bijective) {
            const auto lens = d.cycle_lengths();
            EXPECT_EQ(ord.uniform_orbits, std::all_of(lens.begin(), lens.end(), [&](auto x) { return x == l; }));
            EXPECT_EQ(*ord.zero_orbit_length, d.cycles[d.cycle_id[0]].size());
        }
    }
}

TEST(AffineOrder, FullBlockWidth) {
    std::vector<int> rules;
    for (int i = 0; i < 32; ++i) rules.insert(rules.end(), {51, 51, 195, 153});
    const auto rv = from_ints(rules);
    const auto f = graph::affine_map_of(rv, Boundary::Null, 128);
    const auto ord = graph::affine_order(f);
    ASSERT_TRUE(ord.bijective);
    // F^order is the identity; F^(order/p) is not, for each prime p.
    const auto full = f.power(ord.period);
    EXPECT_EQ(full.matrix, graph::BitMatrix::identity(128));
    EXPECT_FALSE(full.offset.any());
    std::mt19937_64 rng(47);
    Configuration c(128);
    for (std::size_t i = 0; i < 128; ++i) c.set(i, rng() & 1);
    const auto stepped = pca::pca_evolve(c, rv, Boundary::Null, 5);
    EXPECT_EQ(f.power(5).apply(c), stepped);
}
