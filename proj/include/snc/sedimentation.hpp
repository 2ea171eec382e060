#ifndef SNC_SEDIMENTATION_HPP
#define SNC_SEDIMENTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "dependency.hpp"
#include "order.hpp"

namespace snc {

/**
 * @brief J(v) for every vertex: a partition of V into intervals of D that
 * contains every missing edge inside one block
 */
using block_map = std::vector<vertex_set>;

inline block_map singleton_blocks(std::size_t n) {
    block_map j(n);
    for (vertex v = 0; v < n; ++v) j[v] = vertex_set::single(v);
    return j;
}

/// The J-map of D restricted to an induced subdigraph.
inline block_map restrict_blocks(const block_map& j, const induced_digraph& sub) {
    block_map r(sub.original.size());
    vertex_set kept = vertex_set::from(sub.original);
    for (std::size_t i = 0; i < sub.original.size(); ++i) r[i] = sub.to_local(j[sub.original[i]] & kept);
    return r;
}

enum class sed_case {
    strict,    ///< w(N+(f)\J(f)) < w(G\J(f)): Sed(L) = L
    equal,     ///< equality: bad vertices are moved in front of J(f)
    violated,  ///< w(N+(f)\J(f)) > w(G\J(f)): L is not a good (local) median order
};

inline const char* to_string(sed_case c) {
    switch (c) {
        case sed_case::strict:
            return "strict";
        case sed_case::equal:
            return "equal";
        case sed_case::violated:
            return "violated";
    }
    return "?";
}

struct sed_step {
    linear_order next;
    sed_case kind = sed_case::strict;
    order_analysis analysis;
    rational out_weight;   ///< w(N+(f) \ J(f))
    rational good_weight;  ///< w(G_L \ J(f))
};

/**
 * @brief one sedimentation step
 *
 * In the equality case the result lists the bad vertices outside J(f),
 * then J(f), then the remaining vertices outside J(f), each group in
 * L-order. Otherwise the order is returned unchanged.
 */
inline sed_step sed_detail(const digraph& d, const weighting& w, const block_map& j, const linear_order& l) {
    sed_step s;
    s.analysis = analyze(d, w, l);
    vertex_set jf = j.at(s.analysis.feed);
    s.out_weight = w.sum(s.analysis.out_of_feed - jf);
    s.good_weight = w.sum(s.analysis.good - jf);
    if (s.out_weight < s.good_weight) {
        s.kind = sed_case::strict;
        s.next = l;
    } else if (s.out_weight > s.good_weight) {
        s.kind = sed_case::violated;
        s.next = l;
    } else {
        s.kind = sed_case::equal;
        std::vector<vertex> front, block, back;
        for (vertex v : l) {
            if (jf.contains(v))
                block.push_back(v);
            else if (s.analysis.bad.contains(v))
                front.push_back(v);
            else
                back.push_back(v);
        }
        front.insert(front.end(), block.begin(), block.end());
        front.insert(front.end(), back.begin(), back.end());
        s.next = linear_order(std::move(front));
    }
    return s;
}

inline linear_order sed(const digraph& d, const weighting& w, const block_map& j, const linear_order& l) {
    return sed_detail(d, w, j, l).next;
}

/// Uses the J-map of D itself.
inline linear_order sed(const digraph& d, const weighting& w, const linear_order& l) {
    return sed(d, w, index_components(d).j, l);
}

enum class sed_outcome { stable, periodic, budget_exceeded };

inline const char* to_string(sed_outcome o) {
    switch (o) {
        case sed_outcome::stable:
            return "stable";
        case sed_outcome::periodic:
            return "periodic";
        case sed_outcome::budget_exceeded:
            return "budget-exceeded";
    }
    return "?";
}

/**
 * @brief Sed^0(L), Sed^1(L), ... until the strict inequality holds, an
 * order repeats, or the budget runs out
 *
 * For `stable`, `rank` is the q at which the strict inequality first holds
 * and `orders.back()` is Sed^q(L). For `periodic`, Sed^{cycle_start}(L) is
 * the first repeated order and the period is `cycle_length`.
 */
struct sedimentation_trace {
    std::vector<linear_order> orders;
    sed_outcome outcome = sed_outcome::budget_exceeded;
    std::size_t rank = 0;
    std::size_t cycle_start = 0;
    std::size_t cycle_length = 0;
};

/// min(10 * n!, 10^6)
inline std::size_t default_sed_budget(std::size_t n) {
    std::size_t f = 10;
    for (std::size_t i = 2; i <= n && f < 1000000; ++i) f *= i;
    return std::min<std::size_t>(f, 1000000);
}

inline sedimentation_trace sediment(const digraph& d, const weighting& w, const block_map& j, const linear_order& l,
                                    std::size_t budget) {
    sedimentation_trace t;
    std::map<std::vector<vertex>, std::size_t> seen;
    t.orders.push_back(l);
    seen.emplace(l.vertices(), 0);
    for (std::size_t q = 0; q <= budget; ++q) {
        sed_step s = sed_detail(d, w, j, t.orders[q]);
        if (s.kind == sed_case::strict) {
            t.outcome = sed_outcome::stable;
            t.rank = q;
            return t;
        }
        if (s.kind == sed_case::violated)
            throw consistency_violation("Sed^" + std::to_string(q) + "(L) = " + to_string(t.orders[q]) +
                                        " breaks w(N+(f)\\J(f)) <= w(G\\J(f)); L is not a good median order");
        if (q == budget) break;
        auto [it, inserted] = seen.emplace(s.next.vertices(), q + 1);
        if (!inserted) {
            t.outcome = sed_outcome::periodic;
            t.cycle_start = it->second;
            t.cycle_length = q + 1 - it->second;
            return t;
        }
        t.orders.push_back(std::move(s.next));
    }
    t.outcome = sed_outcome::budget_exceeded;
    return t;
}

inline sedimentation_trace sediment(const digraph& d, const weighting& w, const linear_order& l, std::size_t budget) {
    return sediment(d, w, index_components(d).j, l, budget);
}

inline sedimentation_trace sediment(const digraph& d, const weighting& w, const linear_order& l) {
    return sediment(d, w, l, default_sed_budget(d.size()));
}

}  // namespace snc

#endif
