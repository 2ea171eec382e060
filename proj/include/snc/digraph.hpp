#ifndef SNC_DIGRAPH_HPP
#define SNC_DIGRAPH_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "missing_edge.hpp"
#include "rational.hpp"
#include "vertex_set.hpp"

namespace snc {

struct arc {
    vertex tail = 0;
    vertex head = 0;
    auto operator<=>(const arc&) const = default;
};

enum class direction { out, in };

/**
 * @brief immutable loop-free, digon-free digraph on vertices 0..n-1
 *
 * Out- and in-neighbourhoods are stored as vertex masks. All
 * transformations return new values.
 */
class digraph {
   public:
    digraph() = default;

    /// Throws invalid_digraph on loops, digons, duplicates or ids >= n.
    digraph(std::size_t n, const std::vector<arc>& arcs) : n_(n), out_(n), in_(n) {
        if (n > max_vertices)
            throw invalid_digraph("at most " + std::to_string(max_vertices) + " vertices supported");
        for (const arc& a : arcs) {
            if (a.tail >= n || a.head >= n)
                throw invalid_digraph("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                      ") has a vertex out of range");
            if (a.tail == a.head) throw invalid_digraph("loop at vertex " + std::to_string(a.tail));
            if (out_[a.tail].contains(a.head))
                throw invalid_digraph("duplicate arc (" + std::to_string(a.tail) + "," +
                                      std::to_string(a.head) + ")");
            if (out_[a.head].contains(a.tail))
                throw invalid_digraph("digon between " + std::to_string(a.tail) + " and " +
                                      std::to_string(a.head));
            out_[a.tail].insert(a.head);
            in_[a.head].insert(a.tail);
        }
    }

    std::size_t size() const noexcept { return n_; }
    vertex_set vertices() const { return vertex_set::range(n_); }

    vertex_set out(vertex v) const { return out_.at(v); }
    vertex_set in(vertex v) const { return in_.at(v); }
    bool has_arc(vertex u, vertex v) const { return out_.at(u).contains(v); }
    bool adjacent(vertex u, vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    std::size_t arc_count() const {
        std::size_t m = 0;
        for (auto s : out_) m += s.size();
        return m;
    }

    /// arcs in lexicographic (tail, head) order
    std::vector<arc> arcs() const {
        std::vector<arc> result;
        for (vertex u = 0; u < n_; ++u)
            for (vertex v : out_[u]) result.push_back({u, v});
        return result;
    }

    bool is_tournament() const { return arc_count() == n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }

    /// vertices of out-degree zero
    vertex_set sinks() const {
        vertex_set s;
        for (vertex v = 0; v < n_; ++v)
            if (out_[v].empty()) s.insert(v);
        return s;
    }

    bool operator==(const digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

   private:
    std::size_t n_ = 0;
    std::vector<vertex_set> out_;
    std::vector<vertex_set> in_;
};

/**
 * @brief non-negative exact vertex weights
 */
class weighting {
   public:
    weighting() = default;
    explicit weighting(std::vector<rational> w) : w_(std::move(w)) {
        for (const auto& x : w_)
            if (x < rational(0)) throw invalid_argument("weights must be non-negative");
    }

    static weighting unit(std::size_t n) { return weighting(std::vector<rational>(n, rational(1))); }

    std::size_t size() const noexcept { return w_.size(); }
    const rational& operator[](vertex v) const { return w_.at(v); }
    rational sum(vertex_set s) const {
        rational total(0);
        for (vertex v : s) total += w_.at(v);
        return total;
    }
    bool is_unit() const {
        return std::all_of(w_.begin(), w_.end(), [](const rational& x) { return x == rational(1); });
    }
    const std::vector<rational>& values() const noexcept { return w_; }

    bool operator==(const weighting&) const = default;

   private:
    std::vector<rational> w_;
};

namespace detail {
inline void check_vertex(const digraph& d, vertex v) {
    if (v >= d.size())
        throw invalid_argument("vertex " + std::to_string(v) + " out of range for a digraph on " +
                               std::to_string(d.size()) + " vertices");
}
inline void check_subset(const digraph& d, vertex_set k) {
    if (!k.subset_of(d.vertices())) throw invalid_argument("vertex set " + to_string(k) + " is not a subset of V(D)");
}
}  // namespace detail

inline vertex_set neighbors(const digraph& d, vertex v, direction dir = direction::out) {
    detail::check_vertex(d, v);
    return dir == direction::out ? d.out(v) : d.in(v);
}

/// vertices at directed distance exactly two from v (dir=out) or to v (dir=in)
inline vertex_set second_neighborhood(const digraph& d, vertex v, direction dir = direction::out) {
    vertex_set first = neighbors(d, v, dir);
    vertex_set reach;
    for (vertex u : first) reach |= dir == direction::out ? d.out(u) : d.in(u);
    return reach - first - vertex_set::single(v);
}

struct missing_graph_t {
    std::vector<missing_edge> edges;  ///< sorted
    vertex_set non_whole;
};

inline missing_graph_t missing_graph(const digraph& d) {
    missing_graph_t g;
    vertex_set all = d.vertices();
    for (vertex u = 0; u < d.size(); ++u) {
        vertex_set absent = all - d.out(u) - d.in(u) - vertex_set::single(u);
        if (!absent.empty()) g.non_whole.insert(u);
        for (vertex v : absent)
            if (u < v) g.edges.emplace_back(u, v);
    }
    return g;
}

inline bool is_whole(const digraph& d, vertex v) {
    detail::check_vertex(d, v);
    return (d.out(v) | d.in(v)).size() + 1 == d.size();
}

/// Adds the planned arcs. The plan must orient exactly the missing edges of d.
inline digraph complete(const digraph& d, const orientation_plan& plan) {
    std::vector<arc> arcs = d.arcs();
    for (const auto& [e, o] : plan) {
        if (e.v >= d.size()) throw invalid_argument("plan edge " + to_string(e) + " out of range");
        if (d.adjacent(e.u, e.v)) throw invalid_argument("plan orients non-missing pair " + to_string(e));
        arcs.push_back({o.tail, o.head});
    }
    for (const auto& e : missing_graph(d).edges)
        if (!plan.contains(e)) throw invalid_argument("plan misses edge " + to_string(e));
    return digraph(d.size(), arcs);
}

/// Adds the planned arcs without requiring the plan to cover every missing edge.
inline digraph add_arcs(const digraph& d, const orientation_plan& plan) {
    std::vector<arc> arcs = d.arcs();
    for (const auto& [e, o] : plan) {
        if (e.v >= d.size() || d.adjacent(e.u, e.v))
            throw invalid_argument("plan orients non-missing pair " + to_string(e));
        arcs.push_back({o.tail, o.head});
    }
    return digraph(d.size(), arcs);
}

/// Removes the arcs joining the endpoints of each edge (in either direction).
inline digraph remove_edges(const digraph& d, const std::vector<missing_edge>& edges) {
    std::vector<arc> arcs = d.arcs();
    std::erase_if(arcs, [&](const arc& a) {
        return std::find(edges.begin(), edges.end(), missing_edge(a.tail, a.head)) != edges.end();
    });
    return digraph(d.size(), arcs);
}

/// Same vertex set with the single arc between u and v flipped.
inline digraph reverse_arc(const digraph& d, vertex u, vertex v) {
    std::vector<arc> arcs = d.arcs();
    for (arc& a : arcs)
        if ((a.tail == u && a.head == v) || (a.tail == v && a.head == u)) std::swap(a.tail, a.head);
    return digraph(d.size(), arcs);
}

/**
 * @brief K is an interval of D if all its members share their out- and
 * in-neighbourhoods outside K
 *
 * Only members of K are compared; a vertex outside K that misses some
 * member of K therefore makes the test fail.
 */
inline bool is_interval(const digraph& d, vertex_set k) {
    detail::check_subset(d, k);
    if (k.empty()) return true;
    vertex first = k.front();
    vertex_set out0 = d.out(first) - k, in0 = d.in(first) - k;
    for (vertex v : k)
        if (d.out(v) - k != out0 || d.in(v) - k != in0) return false;
    return true;
}

struct induced_digraph {
    digraph graph;
    std::vector<vertex> original;  ///< new id -> id in the parent digraph
    /// parent id -> new id, for members of the induced set
    vertex to_local(vertex parent) const {
        auto it = std::find(original.begin(), original.end(), parent);
        if (it == original.end()) throw invalid_argument("vertex not in the induced set");
        return static_cast<vertex>(it - original.begin());
    }
    vertex_set to_parent(vertex_set local) const {
        vertex_set s;
        for (vertex v : local) s.insert(original.at(v));
        return s;
    }
    vertex_set to_local(vertex_set parent) const {
        vertex_set s;
        for (vertex v : parent) s.insert(to_local(v));
        return s;
    }
};

/// D[K], relabelled to 0..|K|-1 in increasing order of parent ids.
inline induced_digraph induced(const digraph& d, vertex_set k) {
    if (k.empty()) throw invalid_argument("induced subdigraph needs a nonempty vertex set");
    detail::check_subset(d, k);
    induced_digraph r;
    r.original = k.to_vector();
    std::vector<vertex> local(d.size(), 0);
    for (std::size_t i = 0; i < r.original.size(); ++i) local[r.original[i]] = static_cast<vertex>(i);
    std::vector<arc> arcs;
    for (vertex u : k)
        for (vertex v : d.out(u) & k) arcs.push_back({local[u], local[v]});
    r.graph = digraph(k.size(), arcs);
    return r;
}

inline weighting restrict_weighting(const weighting& w, const std::vector<vertex>& original) {
    std::vector<rational> values;
    values.reserve(original.size());
    for (vertex v : original) values.push_back(w[v]);
    return weighting(std::move(values));
}

}  // namespace snc

#endif
