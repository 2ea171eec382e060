#ifndef SNC_ORDER_HPP
#define SNC_ORDER_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "digraph.hpp"

namespace snc {

/// A permutation of 0..n-1; position 0 holds v_1.
class linear_order {
   public:
    linear_order() = default;
    explicit linear_order(std::vector<vertex> perm) : perm_(std::move(perm)) {
        std::vector<bool> seen(perm_.size(), false);
        for (vertex v : perm_) {
            if (v >= perm_.size() || seen[v]) throw invalid_argument("order is not a permutation of 0..n-1");
            seen[v] = true;
        }
    }
    static linear_order identity(std::size_t n) {
        std::vector<vertex> p(n);
        std::iota(p.begin(), p.end(), vertex{0});
        return linear_order(std::move(p));
    }

    std::size_t size() const noexcept { return perm_.size(); }
    vertex operator[](std::size_t i) const { return perm_.at(i); }
    /// last vertex
    vertex feed() const { return perm_.back(); }
    /// 0-based position of v
    std::size_t position(vertex v) const {
        auto it = std::find(perm_.begin(), perm_.end(), v);
        if (it == perm_.end()) throw invalid_argument("vertex not in order");
        return static_cast<std::size_t>(it - perm_.begin());
    }
    const std::vector<vertex>& vertices() const noexcept { return perm_; }
    /// vertices at 0-based positions first..last
    vertex_set span(std::size_t first, std::size_t last) const {
        vertex_set s;
        for (std::size_t i = first; i <= last; ++i) s.insert(perm_[i]);
        return s;
    }
    /// true when the members of k occupy consecutive positions
    bool contiguous(vertex_set k) const {
        if (k.empty()) return true;
        std::size_t lo = perm_.size(), hi = 0;
        for (std::size_t i = 0; i < perm_.size(); ++i)
            if (k.contains(perm_[i])) {
                lo = std::min(lo, i);
                hi = i;
            }
        return hi - lo + 1 == k.size();
    }

    auto begin() const { return perm_.begin(); }
    auto end() const { return perm_.end(); }
    bool operator==(const linear_order&) const = default;
    auto operator<=>(const linear_order&) const = default;

   private:
    std::vector<vertex> perm_;
};

inline std::string to_string(const linear_order& l) {
    std::string s;
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    return s;
}

namespace detail {

inline void check_order(const digraph& d, const linear_order& l) {
    if (l.size() != d.size())
        throw invalid_argument("order has " + std::to_string(l.size()) + " vertices, digraph has " +
                               std::to_string(d.size()));
}

inline void check_weighting(const digraph& d, const weighting& w) {
    if (w.size() != d.size()) throw invalid_argument("weighting does not cover every vertex");
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw invalid_argument("weight arithmetic overflows 64 bits");
    return r;
}

/// Weights scaled by the lcm of their denominators.
struct integer_weights {
    std::vector<std::int64_t> w;
    std::int64_t scale = 1;

    explicit integer_weights(const weighting& weights) {
        for (const auto& x : weights.values()) scale = std::lcm(scale, x.denominator());
        for (const auto& x : weights.values()) w.push_back(checked_mul(x.numerator(), scale / x.denominator()));
        for (std::int64_t x : w) checked_mul(x, x);
    }
    std::int64_t sum(vertex_set s) const {
        std::int64_t t = 0;
        for (vertex v : s) t += w[v];
        return t;
    }
};

}  // namespace detail

/**
 * @brief total weight of the forward arcs of L
 *
 * An arc (u,v) weighs w(u)*w(v); with unit weights this counts forward
 * arcs.
 */
inline rational forward_weight(const digraph& d, const weighting& w, const linear_order& l) {
    detail::check_order(d, l);
    detail::check_weighting(d, w);
    rational total(0);
    vertex_set before;
    for (vertex v : l) {
        total += w[v] * w.sum(d.in(v) & before);
        before.insert(v);
    }
    return total;
}

inline rational forward_weight(const digraph& d, const linear_order& l) {
    return forward_weight(d, weighting::unit(d.size()), l);
}

struct feedback_violation {
    std::size_t i = 0;  ///< 1-based interval start
    std::size_t j = 0;  ///< 1-based interval end
    bool at_start = true;  ///< v_i has more in- than out-weight in [i,j]; otherwise v_j has more out-weight
};

/**
 * @brief first interval [i,j] whose endpoints break the feedback
 * inequalities, scanning i upwards and j downwards from n
 */
inline std::optional<feedback_violation> find_feedback_violation(const digraph& d, const weighting& w,
                                                                 const linear_order& l) {
    detail::check_order(d, l);
    detail::check_weighting(d, w);
    detail::integer_weights iw(w);
    const std::size_t n = l.size();
    for (std::size_t i = 0; i < n; ++i) {
        vertex_set span = l.span(i, n - 1);
        for (std::size_t j = n; j-- > i;) {
            vertex vi = l[i], vj = l[j];
            if (iw.sum(d.out(vi) & span) < iw.sum(d.in(vi) & span)) return feedback_violation{i + 1, j + 1, true};
            if (iw.sum(d.in(vj) & span) < iw.sum(d.out(vj) & span)) return feedback_violation{i + 1, j + 1, false};
            span.erase(vj);
        }
    }
    return std::nullopt;
}

inline bool satisfies_feedback(const digraph& d, const weighting& w, const linear_order& l) {
    return !find_feedback_violation(d, w, l).has_value();
}

inline bool satisfies_feedback(const digraph& d, const linear_order& l) {
    return satisfies_feedback(d, weighting::unit(d.size()), l);
}

/**
 * @brief repairs `init` into an order with the feedback property
 *
 * While some interval [i,j] is violated, the offending endpoint moves to
 * the other end of the interval. A move of a positive-weight vertex
 * strictly raises the forward weight; a zero-weight vertex's move leaves it
 * unchanged but strictly raises that vertex's signed in-minus-out prefix
 * sum, so the loop terminates.
 */
inline linear_order local_median_order(const digraph& d, const weighting& w, const linear_order& init) {
    detail::check_order(d, init);
    std::vector<vertex> perm = init.vertices();
    while (auto v = find_feedback_violation(d, w, linear_order(perm))) {
        auto first = perm.begin() + static_cast<std::ptrdiff_t>(v->i - 1);
        auto last = perm.begin() + static_cast<std::ptrdiff_t>(v->j);
        if (v->at_start)
            std::rotate(first, first + 1, last);
        else
            std::rotate(first, last - 1, last);
    }
    return linear_order(std::move(perm));
}

inline linear_order local_median_order(const digraph& d, const linear_order& init) {
    return local_median_order(d, weighting::unit(d.size()), init);
}

/**
 * @brief classification of the vertices of an order relative to its feed
 *
 * `good` are the non-out-neighbours v_j of the feed reached through some
 * out-neighbour v_i with i < j; the other non-out-neighbours are `bad`.
 */
struct order_analysis {
    rational forward_weight;
    vertex feed = 0;
    vertex_set out_of_feed;
    vertex_set good;
    vertex_set bad;
};

inline order_analysis analyze(const digraph& d, const weighting& w, const linear_order& l) {
    detail::check_order(d, l);
    if (l.size() == 0) throw invalid_argument("cannot analyze an empty order");
    order_analysis a;
    a.forward_weight = forward_weight(d, w, l);
    a.feed = l.feed();
    a.out_of_feed = d.out(a.feed);
    vertex_set reached_out;
    for (vertex v : l) {
        if (v != a.feed && !a.out_of_feed.contains(v)) {
            if ((d.in(v) & reached_out).empty())
                a.bad.insert(v);
            else
                a.good.insert(v);
        }
        if (a.out_of_feed.contains(v)) reached_out.insert(v);
    }
    return a;
}

inline order_analysis analyze(const digraph& d, const linear_order& l) {
    return analyze(d, weighting::unit(d.size()), l);
}

}  // namespace snc

#endif
