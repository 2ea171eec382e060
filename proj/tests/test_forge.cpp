#include <gtest/gtest.h>

#include "helpers.hpp"
#include "snc/gates.hpp"

using namespace snc;
using test::set;

TEST(Rng, Reproducible) {
    rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.below(1000), b.below(1000));
    std::vector<int> x{1, 2, 3, 4, 5}, y = x;
    rng(7).shuffle(x);
    rng(7).shuffle(y);
    EXPECT_EQ(x, y);
    double u = c.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
}

TEST(Fixtures, Shapes) {
    EXPECT_EQ(fixture("C3").arcs(), (std::vector<arc>{{0, 1}, {1, 2}, {2, 0}}));
    EXPECT_TRUE(fixture("TT3").is_tournament());
    EXPECT_EQ(missing_graph(fixture("C4X")).edges, (std::vector<missing_edge>{{0, 2}, {1, 3}}));
    EXPECT_EQ(missing_graph(fixture("ST1")).edges, (std::vector<missing_edge>{{0, 1}, {0, 2}}));
    EXPECT_EQ(fixture("LC3").arc_count(), 12u);
    EXPECT_TRUE(all_kings(fixture("C3")));
    auto delta = build_dependency(fixture("LC3"));
    EXPECT_EQ(delta.arcs.size(), 3u);
    EXPECT_EQ(delta.min_degree(), 1u);
    EXPECT_THROW(fixture("K5"), invalid_argument);
}

TEST(Generators, Examples) {
    EXPECT_EQ(random_tournament(3, 9).arc_count(), 3u);
    EXPECT_TRUE(random_digraph(5, 9, 1.0).is_tournament());
    EXPECT_EQ(random_digraph(5, 9, 0.0).arc_count(), 0u);
    EXPECT_THROW(random_digraph(5, 9, 1.5), invalid_argument);
    EXPECT_EQ(random_tournament(9, 5), random_tournament(9, 5));
    EXPECT_EQ(random_digraph(9, 5, 0.4), random_digraph(9, 5, 0.4));
    EXPECT_EQ(tournament_from_code(3, 0b011), digraph(3, {{0, 1}, {0, 2}, {2, 1}}));
    EXPECT_EQ(digraph_from_code(3, 1 + 2 * 3), digraph(3, {{0, 1}, {2, 0}}));
}

TEST(AllKings, Examples) {
    EXPECT_EQ(all_kings_tournament(3), rotational_tournament(3));
    EXPECT_TRUE(all_kings(all_kings_tournament(7)));
    EXPECT_TRUE(all_kings(all_kings_tournament(6)));
    EXPECT_TRUE(all_kings(all_kings_tournament(8)));
    EXPECT_THROW(all_kings_tournament(4), unrealizable);
    EXPECT_THROW(all_kings_tournament(2), unrealizable);
    EXPECT_EQ(all_kings_tournament(1).size(), 1u);
}

TEST(DeleteDisjointStars, Examples) {
    digraph t = random_tournament(6, 3);
    EXPECT_EQ(delete_disjoint_stars(t, {}), t);
    auto dec = decompose(delete_disjoint_stars(t, {{0, set({1})}, {2, set({3})}}));
    EXPECT_TRUE(dec.stars.empty());
    EXPECT_EQ(dec.matching.size(), 2u);

    orientation_plan back;
    back.orient(1, 0);
    back.orient(2, 0);
    digraph completed = complete(fixture("ST1"), back);
    EXPECT_EQ(delete_disjoint_stars(completed, {{0, set({1, 2})}}), fixture("ST1"));
    EXPECT_THROW(delete_disjoint_stars(t, {{0, set({1})}, {1, set({2})}}), invalid_argument);
}

TEST(Gadgets, ThreeIsLC3) { EXPECT_EQ(losing_cycle_gadget(3), fixture("LC3")); }

// checked from first principles, without the constructor's own assertions
TEST(Gadgets, DependencyCycleAndDegrees) {
    for (std::size_t k = 2; k <= 8; ++k) {
        digraph g = losing_cycle_gadget(k);
        EXPECT_TRUE(gadget_failures(g, k).empty());
        auto delta = build_dependency(g);
        ASSERT_EQ(delta.size(), k);
        EXPECT_EQ(delta.arcs.size(), k == 2 ? 2u : k);
        for (std::size_t i = 1; i <= k; ++i) {
            std::size_t from = delta.index_of({gadget_a(i), gadget_b(i)});
            std::size_t to = delta.index_of({gadget_a(i % k + 1), gadget_b(i % k + 1)});
            EXPECT_TRUE(delta.has_arc(from, to)) << "k=" << k << " i=" << i;
        }
        for (vertex v = 0; v < g.size(); ++v) {
            EXPECT_EQ(g.out(v).size(), k - 1);
            EXPECT_EQ(g.in(v).size(), k - 1);
            EXPECT_EQ(second_neighborhood(g, v).size(), k - 1);
        }
        vertex ak = gadget_a(k), a1 = gadget_a(1), b1 = gadget_b(1);
        if (k % 2 == 0) {
            EXPECT_TRUE(g.has_arc(ak, b1));
        } else {
            EXPECT_TRUE(g.has_arc(ak, a1));
            EXPECT_FALSE(second_neighborhood(g, ak).contains(b1));
        }
    }
    EXPECT_THROW(losing_cycle_gadget(1), invalid_argument);
}

TEST(Gadgets, FailuresAreReported) {
    EXPECT_FALSE(gadget_failures(fixture("C4X"), 3).empty());
    EXPECT_FALSE(gadget_failures(reverse_arc(losing_cycle_gadget(5), gadget_a(1), gadget_a(2)), 5).empty());
}

TEST(InstanceSpec, ParseAndRealize) {
    auto s = parse_instance_spec("star-deleted:n=9,seed=4,shape=2.1.1");
    EXPECT_EQ(s.kind, "star-deleted");
    EXPECT_EQ(s.number("n"), 9u);
    EXPECT_EQ(parse_shape(s.get("shape")), (std::vector<std::size_t>{2, 1, 1}));
    EXPECT_EQ(to_string(s), "star-deleted:n=9,seed=4,shape=2.1.1");
    EXPECT_EQ(realize(s), realize("star-deleted:n=9,seed=4,shape=2.1.1"));
    EXPECT_EQ(realize("fixture:name=LC3"), fixture("LC3"));
    EXPECT_EQ(realize("losing-cycle-gadget:k=4"), losing_cycle_gadget(4));
    EXPECT_EQ(realize("random-digraph:n=6,seed=2,density=0.3"), random_digraph(6, 2, 0.3));
    EXPECT_THROW(realize("moebius:n=3"), invalid_argument);
    EXPECT_THROW(realize("random-tournament:n=x,seed=1"), invalid_argument);
    EXPECT_THROW(realize("random-tournament:seed=1"), invalid_argument);
    EXPECT_THROW(parse_shape("2..1"), invalid_argument);
    EXPECT_THROW(realize("all-kings:n=4"), unrealizable);
}

TEST(StarDeleted, ShapeAndDeterminism) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        digraph d = star_deleted(10, seed, {3, 2, 1});
        EXPECT_EQ(d, star_deleted(10, seed, {3, 2, 1}));
        auto dec = decompose(d);
        ASSERT_EQ(dec.stars.size(), 2u);
        EXPECT_EQ(dec.matching.size(), 1u);
        EXPECT_EQ(dec.edges().size(), 6u);
    }
    EXPECT_THROW(star_deleted(4, 1, {2, 2}), invalid_argument);
    EXPECT_THROW(star_deleted(4, 1, {0}), invalid_argument);
}

TEST(FilteredSearch, ResultsPassTheGate) {
    auto single = filtered_search(theorem_id::single_star, 8, 3, 1000);
    EXPECT_FALSE(single.instances.empty());
    for (const auto& d : single.instances) EXPECT_TRUE(evaluate_gate(d, theorem_id::single_star).applicable);

    auto two = filtered_search(theorem_id::two_stars, 10, 3, 10000, 20);
    EXPECT_FALSE(two.instances.empty());
    for (const auto& d : two.instances) {
        auto delta = build_dependency(d);
        EXPECT_GT(delta.size(), 0u);
        EXPECT_GT(delta.min_degree(), 0u);
    }

    auto three = filtered_search(theorem_id::three_stars, 10, 3, 10000, 20);
    for (const auto& d : three.instances) {
        auto g = evaluate_gate(d, theorem_id::three_stars);
        ASSERT_TRUE(g.applicable);
        ASSERT_EQ(g.stars.size(), 3u);
        const auto& s = g.stars;
        EXPECT_TRUE(d.has_arc(s[0].center, s[1].center));
        EXPECT_TRUE(d.has_arc(s[1].center, s[2].center));
        EXPECT_TRUE(d.has_arc(s[2].center, s[0].center));
    }
    EXPECT_EQ(filtered_search(theorem_id::matching_two, 9, 5, 3000, 4).instances,
              filtered_search(theorem_id::matching_two, 9, 5, 3000, 4).instances);
    EXPECT_THROW(filtered_search(theorem_id::tournament, 8, 1, 10), invalid_argument);
}
