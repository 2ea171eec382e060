#ifndef SNC_DEPENDENCY_HPP
#define SNC_DEPENDENCY_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "missing_structure.hpp"

namespace snc {

/// Endpoint roles under which x1y1 loses to x2y2.
struct losing_roles {
    vertex x1 = 0, y1 = 0, x2 = 0, y2 = 0;
    bool operator==(const losing_roles&) const = default;
};

namespace detail {

struct reach_table {
    std::vector<vertex_set> reach;  // N+(v) | N++(v)
    explicit reach_table(const digraph& d) : reach(d.size()) {
        for (vertex v = 0; v < d.size(); ++v) reach[v] = reach_two(d, v);
    }
};

inline bool roles_hold(const digraph& d, const reach_table& t, const losing_roles& r) {
    return d.has_arc(r.x1, r.x2) && !t.reach[r.x1].contains(r.y2) && d.has_arc(r.y1, r.y2) &&
           !t.reach[r.y1].contains(r.x2);
}

inline std::optional<losing_roles> loses_to(const digraph& d, const reach_table& t, const missing_edge& e1,
                                            const missing_edge& e2) {
    for (int first = 0; first < 2; ++first)
        for (int second = 0; second < 2; ++second) {
            losing_roles r{first ? e1.v : e1.u, first ? e1.u : e1.v, second ? e2.v : e2.u, second ? e2.u : e2.v};
            if (roles_hold(d, t, r)) return r;
        }
    return std::nullopt;
}

inline void check_missing(const digraph& d, const missing_edge& e) {
    detail::check_vertex(d, e.v);
    if (d.adjacent(e.u, e.v)) throw invalid_argument(to_string(e) + " is not a missing edge");
}

}  // namespace detail

/// Re-evaluates the four losing conditions for explicit roles.
inline bool losing_roles_hold(const digraph& d, const losing_roles& r) {
    return detail::roles_hold(d, detail::reach_table(d), r);
}

/**
 * @brief does e1 lose to e2?
 *
 * Both endpoint assignments of each edge are tried; the first assignment
 * that satisfies x1->x2, y2 outside N+[x1]uN++(x1), y1->y2 and x2 outside
 * N+(y1)uN++(y1) is returned.
 */
inline std::optional<losing_roles> loses_to(const digraph& d, const missing_edge& e1, const missing_edge& e2) {
    if (e1 == e2) throw invalid_argument("an edge cannot be compared with itself");
    detail::check_missing(d, e1);
    detail::check_missing(d, e2);
    return detail::loses_to(d, detail::reach_table(d), e1, e2);
}

struct dependency_arc {
    std::size_t from = 0;  ///< index into dependency_digraph::edges
    std::size_t to = 0;
    losing_roles roles;
    bool shares_vertex = false;  ///< the two missing edges have a common endpoint
};

/**
 * @brief the dependency digraph: missing edges as vertices, an arc when one
 * edge loses to another
 *
 * Digons are allowed. Minimum degrees of an empty dependency digraph are 0.
 */
struct dependency_digraph {
    std::vector<missing_edge> edges;  ///< sorted; vertex i of the digraph
    std::vector<dependency_arc> arcs;
    std::vector<std::vector<std::size_t>> out, in;

    std::size_t size() const noexcept { return edges.size(); }
    std::size_t index_of(const missing_edge& e) const {
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e) throw invalid_argument(to_string(e) + " is not a missing edge");
        return static_cast<std::size_t>(it - edges.begin());
    }
    bool has_arc(std::size_t a, std::size_t b) const {
        return std::find(out[a].begin(), out[a].end(), b) != out[a].end();
    }
    const dependency_arc* find_arc(std::size_t a, std::size_t b) const {
        for (const auto& x : arcs)
            if (x.from == a && x.to == b) return &x;
        return nullptr;
    }
    std::size_t min_out_degree() const {
        std::size_t m = edges.empty() ? 0 : SIZE_MAX;
        for (const auto& o : out) m = std::min(m, o.size());
        return m;
    }
    std::size_t min_in_degree() const {
        std::size_t m = edges.empty() ? 0 : SIZE_MAX;
        for (const auto& i : in) m = std::min(m, i.size());
        return m;
    }
    /// min of the minimum out- and in-degree
    std::size_t min_degree() const { return std::min(min_out_degree(), min_in_degree()); }
};

inline dependency_digraph build_dependency(const digraph& d) {
    dependency_digraph g;
    g.edges = missing_graph(d).edges;
    g.out.assign(g.size(), {});
    g.in.assign(g.size(), {});
    detail::reach_table t(d);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            if (auto r = detail::loses_to(d, t, g.edges[i], g.edges[j])) {
                bool shared = g.edges[i].has(g.edges[j].u) || g.edges[i].has(g.edges[j].v);
                g.arcs.push_back({i, j, *r, shared});
                g.out[i].push_back(j);
                g.in[j].push_back(i);
            }
        }
    return g;
}

/// Missing edges with in-degree zero in the dependency digraph.
inline std::vector<missing_edge> good_edges(const dependency_digraph& g) {
    std::vector<missing_edge> result;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.in[i].empty()) result.push_back(g.edges[i]);
    return result;
}

inline std::vector<missing_edge> good_edges(const digraph& d) { return good_edges(build_dependency(d)); }

/**
 * @brief weak and strong components of the dependency digraph, their
 * K-sets, the interval graph and its components
 */
struct component_index {
    dependency_digraph delta;
    std::vector<std::vector<std::size_t>> components;  ///< weak components, as edge indices
    std::vector<std::size_t> component_of;             ///< edge index -> weak component
    std::vector<std::vector<std::size_t>> sccs;        ///< strongly connected components
    std::vector<std::size_t> scc_of;
    std::vector<vertex_set> k_of_component;            ///< K(C)
    std::vector<std::pair<std::size_t, std::size_t>> interval_edges;  ///< C1 < C2, K-sets meet
    std::vector<std::vector<std::size_t>> xis;         ///< interval-graph components, as component ids
    std::vector<vertex_set> k_of_xi;                   ///< K(xi), pairwise disjoint
    std::vector<vertex_set> j;                         ///< J(f) for each vertex f

    /// a weak component is one non-trivial strongly connected component
    bool component_strongly_connected(std::size_t c) const {
        const auto& members = components[c];
        return members.size() >= 2 &&
               std::all_of(members.begin(), members.end(),
                           [&](std::size_t e) { return scc_of[e] == scc_of[members.front()]; });
    }
    /// index of the xi whose K-set contains v, if v is not whole
    std::optional<std::size_t> xi_of(vertex v) const {
        for (std::size_t x = 0; x < k_of_xi.size(); ++x)
            if (k_of_xi[x].contains(v)) return x;
        return std::nullopt;
    }
};

namespace detail {

inline std::vector<std::size_t> tarjan(const std::vector<std::vector<std::size_t>>& out,
                                       std::vector<std::vector<std::size_t>>& sccs) {
    std::size_t n = out.size(), counter = 0;
    std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), scc_of(n, SIZE_MAX), stack;
    std::vector<bool> on_stack(n, false);
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w : out[v]) {
            if (index[w] == SIZE_MAX) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                scc_of[w] = sccs.size();
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            sccs.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] == SIZE_MAX) visit(v);
    return scc_of;
}

struct union_find {
    std::vector<std::size_t> parent;
    explicit union_find(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    /// groups in order of their smallest member
    std::vector<std::vector<std::size_t>> groups() {
        std::vector<std::vector<std::size_t>> result;
        std::vector<std::size_t> slot(parent.size(), SIZE_MAX);
        for (std::size_t i = 0; i < parent.size(); ++i) {
            std::size_t r = find(i);
            if (slot[r] == SIZE_MAX) {
                slot[r] = result.size();
                result.emplace_back();
            }
            result[slot[r]].push_back(i);
        }
        return result;
    }
};

}  // namespace detail

inline component_index index_components(const digraph& d) {
    component_index ci;
    ci.delta = build_dependency(d);
    const auto& g = ci.delta;

    detail::union_find weak(g.size());
    for (const auto& a : g.arcs) weak.unite(a.from, a.to);
    ci.components = weak.groups();
    ci.component_of.assign(g.size(), 0);
    for (std::size_t c = 0; c < ci.components.size(); ++c)
        for (std::size_t e : ci.components[c]) ci.component_of[e] = c;

    ci.scc_of = detail::tarjan(g.out, ci.sccs);

    for (const auto& comp : ci.components) {
        vertex_set k;
        for (std::size_t e : comp) k |= g.edges[e].endpoints();
        ci.k_of_component.push_back(k);
    }

    detail::union_find interval(ci.components.size());
    for (std::size_t a = 0; a < ci.components.size(); ++a)
        for (std::size_t b = a + 1; b < ci.components.size(); ++b)
            if (ci.k_of_component[a].intersects(ci.k_of_component[b])) {
                ci.interval_edges.emplace_back(a, b);
                interval.unite(a, b);
            }
    ci.xis = interval.groups();
    for (const auto& xi : ci.xis) {
        vertex_set k;
        for (std::size_t c : xi) k |= ci.k_of_component[c];
        ci.k_of_xi.push_back(k);
    }

    ci.j.assign(d.size(), vertex_set{});
    for (vertex f = 0; f < d.size(); ++f) {
        auto xi = ci.xi_of(f);
        ci.j[f] = xi ? ci.k_of_xi[*xi] : vertex_set::single(f);
    }
    return ci;
}

/// J(f): {f} for a whole vertex, otherwise the K(xi) containing f.
inline vertex_set j_of(const digraph& d, vertex f) {
    detail::check_vertex(d, f);
    return index_components(d).j[f];
}

struct goodness_report {
    bool good = true;
    std::vector<std::pair<vertex_set, bool>> xi_intervals;  ///< K(xi) and whether it is an interval
};

inline goodness_report check_good(const component_index& ci, const digraph& d) {
    goodness_report r;
    for (vertex_set k : ci.k_of_xi) {
        bool ok = is_interval(d, k);
        r.xi_intervals.emplace_back(k, ok);
        r.good = r.good && ok;
    }
    return r;
}

/// Every K(xi) is an interval of D.
inline bool is_good_digraph(const digraph& d) { return check_good(index_components(d), d).good; }

struct lemma3_result {
    bool hypothesis = false;  ///< every weak component is one non-trivial strong component
    bool good = false;
    std::optional<std::string> finding;  ///< set when the hypothesis holds but D is not good
};

/**
 * @brief if every component of the dependency digraph is non-trivial and
 * strongly connected, D must be good; a counterexample is returned as a
 * finding
 *
 * Requires the missing graph to be a disjoint union of stars.
 */
inline lemma3_result lemma3_check(const digraph& d) {
    decompose(d);
    auto ci = index_components(d);
    lemma3_result r;
    r.hypothesis = true;
    for (std::size_t c = 0; c < ci.components.size(); ++c)
        r.hypothesis = r.hypothesis && ci.component_strongly_connected(c);
    r.good = check_good(ci, d).good;
    if (r.hypothesis && !r.good)
        r.finding = "dependency components are non-trivial strongly connected but D is not good";
    return r;
}

}  // namespace snc

#endif
