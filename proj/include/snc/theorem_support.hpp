#ifndef SNC_THEOREM_SUPPORT_HPP
#define SNC_THEOREM_SUPPORT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "dependency.hpp"
#include "median.hpp"
#include "sedimentation.hpp"

namespace snc {

/// Everything the hypothesis gates look at, computed once per digraph.
struct instance_facts {
    explicit instance_facts(const digraph& g) : d(g), ci(index_components(g)) {
        try {
            dec = decompose(g);
        } catch (const not_disjoint_stars& e) {
            decomposition_error = e.what();
        }
    }

    const digraph& d;
    component_index ci;
    std::optional<star_decomposition> dec;
    std::string decomposition_error;

    const dependency_digraph& delta() const { return ci.delta; }
    bool tournament() const { return d.is_tournament(); }
    bool has_sink() const { return !d.sinks().empty(); }
};

/**
 * @brief every way to name the stars' centers
 *
 * Stars with two or more leaves have a forced center; a single missing
 * edge may be centred at either endpoint. The first assignment centres
 * single edges at their smaller endpoint.
 */
inline std::vector<std::vector<star>> center_assignments(const star_decomposition& dec) {
    std::vector<std::vector<star>> result;
    const std::size_t m = dec.matching.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<star> stars = dec.stars;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& e = dec.matching[i];
            bool flip = (mask >> i) & 1U;
            stars.push_back({flip ? e.v : e.u, vertex_set::single(flip ? e.u : e.v)});
        }
        result.push_back(std::move(stars));
    }
    return result;
}

inline vertex_set centers_of(const std::vector<star>& stars) {
    vertex_set c;
    for (const auto& s : stars) c.insert(s.center);
    return c;
}

/// the star containing v
inline const star& star_of(const std::vector<star>& stars, vertex v) {
    for (const auto& s : stars)
        if (s.vertices().contains(v)) return s;
    throw invalid_argument("vertex " + std::to_string(v) + " is in no star");
}

/**
 * @brief completion of D: good edges get their first convenient
 * orientation when `use_convenient`, all other edges point at their center
 */
inline orientation_plan star_completion_plan(const digraph& d, const std::vector<star>& stars, bool use_convenient) {
    orientation_plan plan;
    for (const auto& s : stars)
        for (vertex a : s.leaves) {
            if (use_convenient) {
                auto conv = convenient_orientations(d, missing_edge(a, s.center));
                if (!conv.empty()) {
                    plan.orient(conv.front().tail, conv.front().head, provenance::convenient);
                    continue;
                }
            }
            plan.orient(a, s.center, provenance::toward_center);
        }
    return plan;
}

/// Completion with every missing edge at v pointing at v.
inline digraph orient_toward(const digraph& t, const digraph& d, vertex v) {
    digraph r = t;
    for (vertex u = 0; u < d.size(); ++u)
        if (u != v && !d.adjacent(u, v) && r.has_arc(v, u)) r = reverse_arc(r, v, u);
    return r;
}

inline std::string describe(const snp_verdict& v) {
    return "v=" + std::to_string(v.v) + " d+=" + std::to_string(v.out_degree) +
           " d++=" + std::to_string(v.second_out_degree);
}

/**
 * @brief a second SNP vertex next to the whole feed x_n of a good median
 * order L, found by sedimenting L' = x_1..x_{n-1}
 *
 * Stable: the feed of the stable order. Periodic: the feed of the first
 * Sed^q(L') in which some out-neighbour of x_n is bad. `pick` maps the
 * block J(y) of that feed (as vertices of D) to the vertex to return.
 */
struct second_witness {
    vertex y = 0;
    std::vector<std::string> trace;
};

inline second_witness sediment_second_witness(const digraph& d, const block_map& j, const linear_order& l,
                                              const std::function<vertex(vertex feed, vertex_set block)>& pick) {
    const vertex last = l.feed();
    const std::size_t n = d.size();
    if (n < 2) throw consistency_violation("sedimentation needs at least two vertices");
    auto sub = induced(d, d.vertices() - vertex_set::single(last));
    block_map local_j = restrict_blocks(j, sub);
    std::vector<vertex> prefix;
    for (std::size_t i = 0; i + 1 < n; ++i) prefix.push_back(sub.to_local(l[i]));
    linear_order lp(prefix);
    weighting unit = weighting::unit(sub.graph.size());
    auto trace = sediment(sub.graph, unit, local_j, lp, default_sed_budget(sub.graph.size()));

    second_witness out;
    out.trace.push_back("L' = " + to_string(l) + " minus " + std::to_string(last) + ": " + to_string(trace.outcome));
    auto finish = [&](const linear_order& order, std::size_t q) {
        vertex feed = sub.original[order.feed()];
        out.y = pick(feed, j[feed]);
        out.trace.push_back("Sed^" + std::to_string(q) + "(L') feed " + std::to_string(feed) + ", chosen " +
                            std::to_string(out.y));
        return out;
    };
    if (trace.outcome == sed_outcome::stable) return finish(trace.orders.back(), trace.rank);
    if (trace.outcome == sed_outcome::periodic) {
        vertex_set targets = sub.to_local(d.out(last));
        for (std::size_t q = 0; q < trace.orders.size(); ++q) {
            auto a = analyze(sub.graph, unit, trace.orders[q]);
            vertex_set hit = a.bad & targets;
            if (!hit.empty()) {
                out.trace.push_back("out-neighbour " + std::to_string(sub.original[hit.front()]) + " of " +
                                    std::to_string(last) + " is bad in Sed^" + std::to_string(q) + "(L')");
                return finish(trace.orders[q], q);
            }
        }
        throw consistency_violation("periodic sedimentation: no out-neighbour of the feed is ever bad");
    }
    throw consistency_violation("sedimentation budget exceeded");
}

}  // namespace snc

#endif
