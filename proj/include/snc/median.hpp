#ifndef SNC_MEDIAN_HPP
#define SNC_MEDIAN_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "dependency.hpp"
#include "order.hpp"

namespace snc {

/**
 * @brief secondary objective among orders of maximum forward weight
 *
 * The score is the sum of the 1-based positions of `targets`; the solver
 * maximizes it. An empty target set means no tiebreak.
 */
struct tiebreak {
    vertex_set targets;

    static tiebreak none() { return {}; }
    static tiebreak max_index(vertex v) { return {vertex_set::single(v)}; }
    static tiebreak max_index_sum(vertex_set s) { return {s}; }
};

struct median_result {
    linear_order order;
    rational value;               ///< forward weight
    std::int64_t tiebreak_score = 0;
};

/// Solver limits. Subset DP runs up to `dp_limit` vertices, branch and bound beyond.
struct solver_options {
    std::size_t cap_exact = 15;
    std::size_t dp_limit = 22;
};

inline std::int64_t tiebreak_score(const linear_order& l, const tiebreak& t) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < l.size(); ++i)
        if (t.targets.contains(l[i])) s += static_cast<std::int64_t>(i + 1);
    return s;
}

namespace detail {

struct lex_value {
    std::int64_t weight = std::numeric_limits<std::int64_t>::min();
    std::int64_t score = 0;
    auto operator<=>(const lex_value&) const = default;
};

/// weight of arcs from v to the members of s, scaled
inline std::int64_t out_gain(const digraph& d, const integer_weights& iw, vertex v, vertex_set s) {
    return iw.w[v] * iw.sum(d.out(v) & s);
}

/**
 * Suffix DP: best[R] is the best (weight, score) for ordering R after its
 * complement. The reconstruction always takes the smallest vertex that
 * attains the optimum, so the result is the lexicographically smallest
 * optimal permutation.
 */
inline std::vector<vertex> solve_dp(const digraph& d, const integer_weights& iw, const tiebreak& t) {
    const std::size_t n = d.size();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<lex_value> best(full + 1);
    best[0] = {0, 0};
    for (std::uint64_t r = 1; r <= full; ++r) {
        vertex_set rs(r);
        std::int64_t position = static_cast<std::int64_t>(n - rs.size() + 1);
        lex_value b;
        for (vertex v : rs) {
            vertex_set rest = rs - vertex_set::single(v);
            const lex_value& tail = best[rest.bits()];
            lex_value cand{tail.weight + out_gain(d, iw, v, rest), tail.score + (t.targets.contains(v) ? position : 0)};
            if (cand > b) b = cand;
        }
        best[r] = b;
    }
    std::vector<vertex> perm;
    vertex_set rs(full);
    while (!rs.empty()) {
        std::int64_t position = static_cast<std::int64_t>(n - rs.size() + 1);
        for (vertex v : rs) {
            vertex_set rest = rs - vertex_set::single(v);
            const lex_value& tail = best[rest.bits()];
            lex_value cand{tail.weight + out_gain(d, iw, v, rest), tail.score + (t.targets.contains(v) ? position : 0)};
            if (cand == best[rs.bits()]) {
                perm.push_back(v);
                rs = rest;
                break;
            }
        }
    }
    return perm;
}

/**
 * Depth-first branch and bound over prefixes, visiting vertices in
 * increasing order and pruning only strictly dominated branches; it returns
 * the same permutation as solve_dp.
 */
class branch_and_bound {
   public:
    branch_and_bound(const digraph& d, const integer_weights& iw, const tiebreak& t)
        : d_(d), iw_(iw), t_(t), n_(d.size()) {}

    std::vector<vertex> solve(lex_value incumbent) {
        incumbent_ = incumbent;
        prefix_.clear();
        best_.clear();
        dfs(vertex_set::range(n_), {0, 0});
        return best_;
    }

   private:
    lex_value bound(vertex_set rest, lex_value now) const {
        std::int64_t w = 0;
        for (vertex u : rest) w += iw_.w[u] * iw_.sum((d_.out(u) | d_.in(u)) & rest);
        w /= 2;
        std::int64_t k = static_cast<std::int64_t>((t_.targets & rest).size());
        std::int64_t nn = static_cast<std::int64_t>(n_);
        std::int64_t s = k * nn - k * (k - 1) / 2;  // the last k positions
        return {now.weight + w, now.score + s};
    }

    void dfs(vertex_set rest, lex_value now) {
        if (rest.empty()) {
            if (best_.empty() ? now >= incumbent_ : now > incumbent_) {
                incumbent_ = now;
                best_ = prefix_;
            }
            return;
        }
        if (bound(rest, now) < incumbent_) return;
        std::int64_t position = static_cast<std::int64_t>(n_ - rest.size() + 1);
        for (vertex v : rest) {
            vertex_set after = rest - vertex_set::single(v);
            lex_value next{now.weight + out_gain(d_, iw_, v, after),
                           now.score + (t_.targets.contains(v) ? position : 0)};
            prefix_.push_back(v);
            dfs(after, next);
            prefix_.pop_back();
        }
    }

    const digraph& d_;
    const integer_weights& iw_;
    const tiebreak& t_;
    std::size_t n_;
    lex_value incumbent_;
    std::vector<vertex> prefix_, best_;
};

inline median_result finish(const digraph& d, const weighting& w, std::vector<vertex> perm, const tiebreak& t) {
    linear_order l(std::move(perm));
    // Zero-weight vertices can sit where an optimal order breaks the
    // feedback inequalities; repair moves never lower the forward weight.
    if (!satisfies_feedback(d, w, l)) l = local_median_order(d, w, l);
    return {l, forward_weight(d, w, l), tiebreak_score(l, t)};
}

}  // namespace detail

/**
 * @brief an order of maximum forward weight, maximizing the tiebreak score
 * among those, lexicographically smallest among the rest
 *
 * Throws size_cap_exceeded when n exceeds `opts.cap_exact`.
 */
inline median_result exact_median_order(const digraph& d, const weighting& w, const tiebreak& t = tiebreak::none(),
                                        const solver_options& opts = {}) {
    detail::check_weighting(d, w);
    if (d.size() > opts.cap_exact)
        throw size_cap_exceeded("exact median order limited to " + std::to_string(opts.cap_exact) +
                                " vertices, got " + std::to_string(d.size()));
    if (d.size() == 0) return {linear_order{}, rational(0), 0};
    detail::integer_weights iw(w);
    if (d.size() <= opts.dp_limit) return detail::finish(d, w, detail::solve_dp(d, iw, t), t);
    linear_order start = local_median_order(d, w, linear_order::identity(d.size()));
    rational start_value = forward_weight(d, w, start) * iw.scale * iw.scale;
    detail::branch_and_bound bb(d, iw, t);
    return detail::finish(d, w, bb.solve({start_value.numerator(), tiebreak_score(start, t)}), t);
}

inline median_result exact_median_order(const digraph& d, const tiebreak& t = tiebreak::none(),
                                        const solver_options& opts = {}) {
    return exact_median_order(d, weighting::unit(d.size()), t, opts);
}

/// Branch and bound regardless of size; used to cross-check the DP.
inline median_result branch_and_bound_median_order(const digraph& d, const weighting& w,
                                                   const tiebreak& t = tiebreak::none()) {
    detail::check_weighting(d, w);
    if (d.size() == 0) return {linear_order{}, rational(0), 0};
    detail::integer_weights iw(w);
    detail::branch_and_bound bb(d, iw, t);
    return detail::finish(d, w, bb.solve({std::numeric_limits<std::int64_t>::min(), 0}), t);
}

enum class exactness { exact, local };

/**
 * @brief the blocks of a good digraph: each K(xi) and every whole vertex
 * on its own, listed by smallest member
 */
inline std::vector<vertex_set> good_blocks(const component_index& ci, const digraph& d) {
    std::vector<vertex_set> blocks;
    vertex_set covered;
    for (vertex v = 0; v < d.size(); ++v) {
        if (covered.contains(v)) continue;
        blocks.push_back(ci.j[v]);
        covered |= ci.j[v];
    }
    return blocks;
}

/**
 * @brief a (local) median order in which every K(xi) is contiguous
 *
 * Each block is an interval of D, so blocks relate uniformly to each other
 * and the quotient on blocks (block weight = sum of member weights) is a
 * tournament. The order of the quotient and the orders inside blocks are
 * solved separately and concatenated; with product arc weights this is
 * optimal over all orders.
 */
inline linear_order good_median_order(const digraph& d, const weighting& w, exactness mode = exactness::exact,
                                      const solver_options& opts = {}) {
    detail::check_weighting(d, w);
    auto ci = index_components(d);
    if (!check_good(ci, d).good) throw not_good("digraph is not good: some K(xi) is not an interval");
    if (d.size() == 0) return {};
    auto blocks = good_blocks(ci, d);

    std::vector<arc> qarcs;
    std::vector<rational> qweights;
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        qweights.push_back(w.sum(blocks[a]));
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (a != b && d.has_arc(blocks[a].front(), blocks[b].front()))
                qarcs.push_back({static_cast<vertex>(a), static_cast<vertex>(b)});
    }
    digraph quotient(blocks.size(), qarcs);
    weighting qw(qweights);

    auto solve = [&](const digraph& g, const weighting& gw) {
        if (mode == exactness::exact) return exact_median_order(g, gw, tiebreak::none(), opts).order;
        return local_median_order(g, gw, linear_order::identity(g.size()));
    };

    std::vector<vertex> perm;
    for (vertex b : solve(quotient, qw)) {
        auto sub = induced(d, blocks[b]);
        for (vertex v : solve(sub.graph, restrict_weighting(w, sub.original))) perm.push_back(sub.original[v]);
    }
    return linear_order(std::move(perm));
}

inline linear_order good_median_order(const digraph& d, exactness mode = exactness::exact,
                                      const solver_options& opts = {}) {
    return good_median_order(d, weighting::unit(d.size()), mode, opts);
}

}  // namespace snc

#endif
