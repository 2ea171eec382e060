#include <gtest/gtest.h>

#include "helpers.hpp"
#include "snc/io.hpp"

using namespace snc;
using test::set;

TEST(Digraph, RejectsLoopsDigonsDuplicatesAndRange) {
    EXPECT_THROW(digraph(3, {{0, 0}}), invalid_digraph);
    EXPECT_THROW(digraph(3, {{0, 1}, {1, 0}}), invalid_digraph);
    EXPECT_THROW(digraph(3, {{0, 1}, {0, 1}}), invalid_digraph);
    EXPECT_THROW(digraph(3, {{0, 3}}), invalid_digraph);
    EXPECT_THROW(digraph(65, {}), invalid_digraph);
    EXPECT_NO_THROW(digraph(64, {}));
}

TEST(Digraph, Neighbors) {
    EXPECT_EQ(neighbors(fixture("C3"), 0), set({1}));
    EXPECT_EQ(neighbors(fixture("LC3"), 0), set({2, 5}));
    EXPECT_TRUE(neighbors(fixture("TT3"), 2).empty());
    EXPECT_EQ(neighbors(fixture("C3"), 0, direction::in), set({2}));
}

TEST(Digraph, SecondNeighborhood) {
    EXPECT_EQ(second_neighborhood(fixture("C3"), 0), set({2}));
    EXPECT_EQ(second_neighborhood(fixture("LC3"), 0), set({1, 4}));
    EXPECT_EQ(second_neighborhood(fixture("C4X"), 0), set({2}));
    EXPECT_EQ(second_neighborhood(fixture("C3"), 0, direction::in), set({1}));
}

// N++(v) by explicit enumeration of directed 2-paths, against the set-algebra version
TEST(Digraph, SecondNeighborhoodMatchesPathEnumeration) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        digraph d = random_digraph(3 + seed % 8, seed, 0.2 + 0.1 * (seed % 8));
        for (vertex v = 0; v < d.size(); ++v) {
            vertex_set expect;
            for (vertex u = 0; u < d.size(); ++u)
                for (vertex w = 0; w < d.size(); ++w)
                    if (d.has_arc(v, u) && d.has_arc(u, w) && w != v && !d.has_arc(v, w)) expect.insert(w);
            ASSERT_EQ(second_neighborhood(d, v), expect) << "seed " << seed << " vertex " << v;
        }
    }
}

TEST(Digraph, MissingGraph) {
    auto c3 = missing_graph(fixture("C3"));
    EXPECT_TRUE(c3.edges.empty());
    EXPECT_TRUE(c3.non_whole.empty());
    auto c4 = missing_graph(fixture("C4X"));
    EXPECT_EQ(c4.edges, (std::vector<missing_edge>{{0, 2}, {1, 3}}));
    EXPECT_EQ(c4.non_whole, set({0, 1, 2, 3}));
    EXPECT_EQ(missing_graph(fixture("LC3")).edges, (std::vector<missing_edge>{{0, 1}, {2, 3}, {4, 5}}));
    EXPECT_TRUE(is_whole(fixture("C3"), 1));
    EXPECT_FALSE(is_whole(fixture("ST1"), 0));
}

TEST(Digraph, Complete) {
    orientation_plan p;
    p.orient(0, 2);
    p.orient(1, 3);
    digraph t = complete(fixture("C4X"), p);
    EXPECT_TRUE(t.is_tournament());
    EXPECT_EQ(t.arc_count(), 6u);
    EXPECT_EQ(complete(fixture("C3"), {}), fixture("C3"));

    orientation_plan star;
    star.orient(1, 0, provenance::toward_center);
    star.orient(2, 0, provenance::toward_center);
    EXPECT_EQ(complete(fixture("ST1"), star).out(0), set({3}));

    orientation_plan partial;
    partial.orient(0, 2);
    EXPECT_THROW(complete(fixture("C4X"), partial), invalid_argument);
    EXPECT_THROW(partial.orient(2, 0), invalid_argument);
}

TEST(Digraph, IsInterval) {
    digraph c4 = fixture("C4X");
    for (vertex v = 0; v < 4; ++v) EXPECT_TRUE(is_interval(c4, vertex_set::single(v)));
    EXPECT_FALSE(is_interval(c4, set({0, 2})));
    EXPECT_TRUE(is_interval(c4, set({0, 1, 2, 3})));
}

TEST(Digraph, Induced) {
    auto whole = induced(fixture("LC3"), vertex_set::range(6));
    EXPECT_EQ(whole.graph, fixture("LC3"));
    auto c4 = induced(fixture("C4X"), set({0, 1}));
    EXPECT_EQ(c4.graph.arcs(), (std::vector<arc>{{0, 1}}));
    auto tt = induced(fixture("TT3"), set({0, 2}));
    EXPECT_EQ(tt.graph.arcs(), (std::vector<arc>{{0, 1}}));
    EXPECT_EQ(tt.original, (std::vector<vertex>{0, 2}));
    EXPECT_EQ(tt.to_local(2), 1u);
}

TEST(Digraph, WeightingRejectsNegatives) {
    EXPECT_THROW(weighting({rational(1), rational(-1)}), invalid_argument);
    EXPECT_EQ(weighting::unit(3).sum(vertex_set::range(3)), rational(3));
}

TEST(InstanceText, ParsesAndRejects) {
    EXPECT_EQ(parse_instance("3 3\n0 1\n1 2\n2 0\n").graph, fixture("C3"));
    try {
        parse_instance("3 2\n0 1\n1 0\n");
        FAIL() << "digon accepted";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("digon"), std::string::npos);
    }
    EXPECT_THROW(parse_instance("2 1\n0 0\n"), parse_error);
    EXPECT_THROW(parse_instance("2 1\n0 2\n"), parse_error);
    EXPECT_THROW(parse_instance("2 2\n0 1\n"), parse_error);
    EXPECT_THROW(parse_instance("x y\n"), parse_error);
    EXPECT_THROW(parse_instance("2 0\nw 0 -1\n"), parse_error);

    auto w = parse_instance("# weighted\n2 1\n0 1  # arc\nw 0 3/2\n");
    ASSERT_TRUE(w.weights.has_value());
    EXPECT_EQ((*w.weights)[0], rational(3, 2));
    EXPECT_EQ((*w.weights)[1], rational(1));
}

TEST(InstanceText, RoundTrips) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        digraph d = random_digraph(1 + seed % 12, seed, 0.5);
        std::optional<weighting> w;
        if (seed % 2) {
            std::vector<rational> ws;
            for (vertex v = 0; v < d.size(); ++v) ws.emplace_back(static_cast<long>(v % 3), 1 + static_cast<long>(seed % 4));
            w = weighting(ws);
        }
        instance in{d, w};
        std::string text = emit_instance(in);
        instance back = parse_instance(text);
        EXPECT_EQ(back, in);
        EXPECT_EQ(emit_instance(back), text);
    }
}
