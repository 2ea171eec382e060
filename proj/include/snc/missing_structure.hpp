#ifndef SNC_MISSING_STRUCTURE_HPP
#define SNC_MISSING_STRUCTURE_HPP

#include <algorithm>
#include <vector>

#include "digraph.hpp"

namespace snc {

struct star {
    vertex center = 0;
    vertex_set leaves;

    vertex_set vertices() const { return leaves | vertex_set::single(center); }
    std::vector<missing_edge> edges() const {
        std::vector<missing_edge> es;
        for (vertex a : leaves) es.emplace_back(a, center);
        return es;
    }
};

/**
 * @brief the missing graph as vertex-disjoint stars
 *
 * Components with two or more leaves are `stars` (their center is
 * forced). Single-edge components go to `matching`; when such an edge has
 * to act as a star its center is the smaller endpoint.
 */
struct star_decomposition {
    std::vector<star> stars;             ///< sorted by center
    std::vector<missing_edge> matching;  ///< sorted

    /// every component as a star, single edges centred at their smaller endpoint
    std::vector<star> all_stars() const {
        std::vector<star> all = stars;
        for (const auto& e : matching) all.push_back({e.u, vertex_set::single(e.v)});
        std::sort(all.begin(), all.end(), [](const star& a, const star& b) { return a.center < b.center; });
        return all;
    }
    std::size_t component_count() const { return stars.size() + matching.size(); }
    vertex_set covered() const {
        vertex_set k;
        for (const auto& s : stars) k |= s.vertices();
        for (const auto& e : matching) k |= e.endpoints();
        return k;
    }
    vertex_set centers() const {
        vertex_set c;
        for (const auto& s : all_stars()) c.insert(s.center);
        return c;
    }
    /// star component containing v, if any
    const star* find_star(vertex v) const {
        for (const auto& s : stars)
            if (s.vertices().contains(v)) return &s;
        return nullptr;
    }
    std::vector<missing_edge> edges() const {
        std::vector<missing_edge> es = matching;
        for (const auto& s : stars) {
            auto se = s.edges();
            es.insert(es.end(), se.begin(), se.end());
        }
        std::sort(es.begin(), es.end());
        return es;
    }
};

/// Throws not_disjoint_stars when a missing component is not a star.
inline star_decomposition decompose(const digraph& d) {
    auto mg = missing_graph(d);
    std::vector<vertex_set> adj(d.size());
    for (const auto& e : mg.edges) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    star_decomposition dec;
    vertex_set seen;
    for (vertex start : mg.non_whole) {
        if (seen.contains(start)) continue;
        vertex_set comp = vertex_set::single(start), frontier = comp;
        while (!frontier.empty()) {
            vertex_set next;
            for (vertex v : frontier) next |= adj[v];
            frontier = next - comp;
            comp |= next;
        }
        seen |= comp;
        std::size_t degree_sum = 0;
        for (vertex v : comp) degree_sum += adj[v].size();
        std::size_t m = degree_sum / 2;
        const vertex* center = nullptr;
        std::vector<vertex> members = comp.to_vector();
        for (const vertex& v : members)
            if (adj[v].size() == m) {
                center = &v;
                break;
            }
        if (m + 1 != comp.size() || center == nullptr)
            throw not_disjoint_stars("missing component " + to_string(comp) + " is not a star");
        if (m == 1)
            dec.matching.emplace_back(members[0], members[1]);
        else
            dec.stars.push_back({*center, adj[*center]});
    }
    std::sort(dec.matching.begin(), dec.matching.end());
    std::sort(dec.stars.begin(), dec.stars.end(), [](const star& a, const star& b) { return a.center < b.center; });
    return dec;
}

/// Every missing edge points at the center of its star.
inline orientation_plan orient_toward_centers(const star_decomposition& dec) {
    orientation_plan plan;
    for (const auto& s : dec.all_stars())
        for (vertex a : s.leaves) plan.orient(a, s.center, provenance::toward_center);
    return plan;
}

/// N+(v) together with N++(v)
inline vertex_set reach_two(const digraph& d, vertex v) { return d.out(v) | second_neighborhood(d, v); }

/**
 * @brief orientations (a,b) of the missing edge ab such that every
 * in-neighbour of a reaches b within two steps
 *
 * Result lists (u,v) before (v,u) for e = {u,v}. Empty means the edge is
 * not good.
 */
inline std::vector<arc> convenient_orientations(const digraph& d, const missing_edge& e) {
    detail::check_vertex(d, e.v);
    if (d.adjacent(e.u, e.v)) throw invalid_argument(to_string(e) + " is not a missing edge");
    auto convenient = [&](vertex a, vertex b) {
        for (vertex v : d.in(a) - e.endpoints())
            if (!reach_two(d, v).contains(b)) return false;
        return true;
    };
    std::vector<arc> result;
    if (convenient(e.u, e.v)) result.push_back({e.u, e.v});
    if (convenient(e.v, e.u)) result.push_back({e.v, e.u});
    return result;
}

}  // namespace snc

#endif
