#include <gtest/gtest.h>

#include "helpers.hpp"
#include "snc/median.hpp"
#include "snc/sedimentation.hpp"

using namespace snc;
using test::set;

namespace {

linear_order order(std::initializer_list<vertex> vs) { return linear_order(std::vector<vertex>(vs)); }

weighting from_pairs(const std::vector<std::pair<long, long>>& ws) {
    std::vector<rational> w;
    for (auto [p, q] : ws) w.emplace_back(p, q);
    return weighting(w);
}

// max forward weight over all permutations, by enumeration
rational brute_weighted(const digraph& d, const weighting& w) {
    std::vector<vertex> p(d.size());
    std::iota(p.begin(), p.end(), 0);
    rational best(-1);
    do best = std::max(best, forward_weight(d, w, linear_order(p)));
    while (std::next_permutation(p.begin(), p.end()));
    return best;
}

}  // namespace

TEST(LinearOrder, RejectsNonPermutations) {
    EXPECT_THROW(linear_order({0, 0}), invalid_argument);
    EXPECT_THROW(linear_order({1, 2}), invalid_argument);
    EXPECT_EQ(order({2, 0, 1}).position(1), 2u);
    EXPECT_THROW(forward_weight(fixture("C3"), order({0, 1})), invalid_argument);
}

TEST(ForwardWeight, Examples) {
    EXPECT_EQ(forward_weight(fixture("TT3"), order({0, 1, 2})), rational(3));
    EXPECT_EQ(forward_weight(fixture("C3"), order({0, 1, 2})), rational(2));
    weighting w({rational(1), rational(1), rational(5)});
    EXPECT_EQ(forward_weight(fixture("TT3"), w, order({0, 1, 2})), rational(11));
}

TEST(ExactMedian, Examples) {
    auto tt = exact_median_order(fixture("TT3"));
    EXPECT_EQ(tt.order, order({0, 1, 2}));
    EXPECT_EQ(tt.value, rational(3));
    auto c3 = exact_median_order(fixture("C3"));
    EXPECT_EQ(c3.value, rational(2));
    EXPECT_EQ(c3.order, order({0, 1, 2}));
    EXPECT_EQ(exact_median_order(fixture("C4X")).value, rational(3));
    EXPECT_THROW(exact_median_order(random_tournament(16, 1)), size_cap_exceeded);
    solver_options wide;
    wide.cap_exact = 16;
    EXPECT_NO_THROW(exact_median_order(random_tournament(16, 1), tiebreak::none(), wide));
}

TEST(ExactMedian, TiebreakPushesTargetLate) {
    auto r = exact_median_order(fixture("C3"), tiebreak::max_index(0));
    EXPECT_EQ(r.value, rational(2));
    EXPECT_EQ(r.order.feed(), 0u);
}

TEST(ExactMedian, MatchesFrozenUnitOptimum) {
    for (const auto& c : frozen::digraph_cases) {
        digraph d = test::build(c.n, c.arcs);
        auto r = exact_median_order(d);
        EXPECT_EQ(r.value, rational(c.optimum));
        EXPECT_EQ(forward_weight(d, r.order), r.value);
        EXPECT_EQ(branch_and_bound_median_order(d, weighting::unit(d.size())).value, r.value);
    }
}

TEST(ExactMedian, MatchesFrozenWeightedOptimum) {
    for (const auto& c : frozen::weighted_cases) {
        digraph d = test::build(c.n, c.arcs);
        weighting w = from_pairs(c.weights);
        auto r = exact_median_order(d, w);
        EXPECT_EQ(r.value, rational(c.optimum.first, c.optimum.second));
        EXPECT_EQ(branch_and_bound_median_order(d, w).value, r.value);
        EXPECT_TRUE(satisfies_feedback(d, w, r.order));
    }
}

TEST(ExactMedian, DpBranchAndBoundAndEnumerationAgree) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        digraph d = random_digraph(2 + seed % 7, seed, 0.7);
        std::vector<rational> ws;
        rng g(seed);
        for (vertex v = 0; v < d.size(); ++v) ws.emplace_back(static_cast<long>(g.below(4)), 1 + static_cast<long>(g.below(3)));
        weighting w(ws);
        rational dp = exact_median_order(d, w).value;
        EXPECT_EQ(dp, brute_weighted(d, w)) << "seed " << seed;
        EXPECT_EQ(branch_and_bound_median_order(d, w).value, dp) << "seed " << seed;
        auto tb = tiebreak::max_index(static_cast<vertex>(seed % d.size()));
        EXPECT_EQ(exact_median_order(d, w, tb).tiebreak_score, branch_and_bound_median_order(d, w, tb).tiebreak_score);
    }
}

TEST(Feedback, Examples) {
    EXPECT_TRUE(satisfies_feedback(fixture("TT3"), order({0, 1, 2})));
    auto v = find_feedback_violation(fixture("TT3"), weighting::unit(3), order({2, 1, 0}));
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->i, 1u);
    EXPECT_EQ(v->j, 3u);
    EXPECT_TRUE(satisfies_feedback(fixture("C3"), order({0, 1, 2})));
}

TEST(Feedback, MatchesFrozenIdentityVerdict) {
    for (const auto& c : frozen::digraph_cases) {
        digraph d = test::build(c.n, c.arcs);
        EXPECT_EQ(satisfies_feedback(d, linear_order::identity(c.n)), c.identity_feedback);
    }
}

TEST(LocalMedian, Examples) {
    EXPECT_EQ(local_median_order(fixture("TT3"), order({0, 1, 2})), order({0, 1, 2}));
    EXPECT_EQ(local_median_order(fixture("TT3"), order({2, 1, 0})), order({0, 1, 2}));
    for (auto init : {order({0, 1, 2, 3}), order({3, 2, 1, 0}), order({2, 0, 3, 1})}) {
        auto l = local_median_order(fixture("C4X"), init);
        EXPECT_TRUE(satisfies_feedback(fixture("C4X"), l));
        EXPECT_GE(forward_weight(fixture("C4X"), l), rational(3));
    }
}

TEST(LocalMedian, FixedPointsAndZeroWeights) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        digraph d = random_digraph(3 + seed % 9, seed, 0.8);
        std::vector<rational> ws;
        for (vertex v = 0; v < d.size(); ++v) ws.emplace_back(static_cast<long>((v + seed) % 3));
        weighting w(ws);
        auto l = local_median_order(d, w, linear_order::identity(d.size()));
        ASSERT_TRUE(satisfies_feedback(d, w, l));
        EXPECT_GE(forward_weight(d, w, l), forward_weight(d, w, linear_order::identity(d.size())));
        EXPECT_EQ(local_median_order(d, w, l), l);
    }
}

TEST(Analyze, Examples) {
    auto a = analyze(fixture("C3"), order({0, 1, 2}));
    EXPECT_EQ(a.feed, 2u);
    EXPECT_EQ(a.out_of_feed, set({0}));
    EXPECT_EQ(a.good, set({1}));
    EXPECT_TRUE(a.bad.empty());
}

TEST(Analyze, MatchesFrozenGoodAndBad) {
    for (const auto& c : frozen::digraph_cases) {
        auto a = analyze(test::build(c.n, c.arcs), linear_order::identity(c.n));
        EXPECT_EQ(a.good, test::mask(c.identity_good));
        EXPECT_EQ(a.bad, test::mask(c.identity_bad));
    }
}

TEST(Sed, Examples) {
    auto w = weighting::unit(3);
    auto c3 = sed_detail(fixture("C3"), w, singleton_blocks(3), order({0, 1, 2}));
    EXPECT_EQ(c3.kind, sed_case::equal);
    EXPECT_EQ(c3.next, order({2, 0, 1}));
    EXPECT_EQ(forward_weight(fixture("C3"), c3.next), rational(2));

    auto tt = sed_detail(fixture("TT3"), w, singleton_blocks(3), order({0, 1, 2}));
    EXPECT_EQ(tt.kind, sed_case::equal);
    EXPECT_EQ(tt.analysis.bad, set({0, 1}));
    EXPECT_EQ(tt.next, order({0, 1, 2}));

}

TEST(Sediment, Examples) {
    auto w = weighting::unit(3);
    auto c3 = sediment(fixture("C3"), w, order({0, 1, 2}));
    EXPECT_EQ(c3.outcome, sed_outcome::periodic);
    EXPECT_EQ(c3.cycle_length, 3u);
    auto tt = sediment(fixture("TT3"), w, order({0, 1, 2}));
    EXPECT_EQ(tt.outcome, sed_outcome::periodic);
    EXPECT_EQ(tt.cycle_length, 1u);

    // feed 3 sends one arc to 0, which reaches both 1 and 2
    digraph d(4, {{3, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto t = sediment(d, weighting::unit(4), order({0, 1, 2, 3}));
    EXPECT_EQ(t.outcome, sed_outcome::stable);
    EXPECT_EQ(t.rank, 0u);
    EXPECT_EQ(sed(d, weighting::unit(4), order({0, 1, 2, 3})), order({0, 1, 2, 3}));
    EXPECT_EQ(sediment(fixture("C3"), w, order({0, 1, 2}), 1).outcome, sed_outcome::budget_exceeded);
}

TEST(Sediment, KeepsOptimalityAndGoodness) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        digraph d = star_deleted(7, seed, {1, 1});
        if (!is_good_digraph(d)) continue;
        std::vector<rational> ws;
        for (vertex v = 0; v < d.size(); ++v) ws.emplace_back(1 + static_cast<long>((v * seed) % 3));
        weighting w(ws);
        auto l = good_median_order(d, w);
        rational best = forward_weight(d, w, l);
        auto t = sediment(d, w, l);
        auto ci = index_components(d);
        for (const auto& o : t.orders) {
            EXPECT_EQ(forward_weight(d, w, o), best);
            for (vertex_set k : ci.k_of_xi) EXPECT_TRUE(o.contiguous(k));
        }
    }
}

TEST(DefaultBudget, Caps) {
    EXPECT_EQ(default_sed_budget(3), 60u);
    EXPECT_EQ(default_sed_budget(12), 1000000u);
}
