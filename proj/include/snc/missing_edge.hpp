#ifndef SNC_MISSING_EDGE_HPP
#define SNC_MISSING_EDGE_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "error.hpp"
#include "vertex_set.hpp"

namespace snc {

/// Unordered pair of distinct vertices, stored with u < v.
struct missing_edge {
    vertex u = 0;
    vertex v = 0;

    missing_edge() = default;
    missing_edge(vertex a, vertex b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw invalid_argument("missing edge needs two distinct endpoints");
    }

    bool has(vertex x) const noexcept { return x == u || x == v; }
    /// the endpoint that is not x; x must be an endpoint
    vertex other(vertex x) const noexcept { return x == u ? v : u; }
    vertex_set endpoints() const { return vertex_set{u, v}; }

    auto operator<=>(const missing_edge&) const = default;
};

inline std::string to_string(const missing_edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

/// Why a missing edge received its orientation.
enum class provenance { toward_center, convenient, path_f, explicit_choice };

inline const char* to_string(provenance p) {
    switch (p) {
        case provenance::toward_center:
            return "toward-center";
        case provenance::convenient:
            return "convenient";
        case provenance::path_f:
            return "path-F";
        case provenance::explicit_choice:
            return "explicit";
    }
    return "?";
}

struct oriented_edge {
    vertex tail = 0;
    vertex head = 0;
    provenance source = provenance::explicit_choice;
};

/**
 * @brief an orientation chosen for some missing edges
 *
 * Each edge is oriented at most once through `orient`; proof steps that
 * flip an edge go through `reorient`.
 */
class orientation_plan {
   public:
    void orient(vertex tail, vertex head, provenance p = provenance::explicit_choice) {
        missing_edge e(tail, head);
        if (!arcs_.emplace(e, oriented_edge{tail, head, p}).second)
            throw invalid_argument("edge " + to_string(e) + " oriented twice");
    }

    /// Points an already planned edge at `head`.
    void reorient(const missing_edge& e, vertex head) {
        auto it = arcs_.find(e);
        if (it == arcs_.end()) throw invalid_argument("edge " + to_string(e) + " is not in the plan");
        if (!e.has(head)) throw invalid_argument("vertex is not an endpoint of " + to_string(e));
        it->second.head = head;
        it->second.tail = e.other(head);
    }

    bool contains(const missing_edge& e) const { return arcs_.count(e) != 0; }
    const oriented_edge& at(const missing_edge& e) const {
        auto it = arcs_.find(e);
        if (it == arcs_.end()) throw invalid_argument("edge " + to_string(e) + " is not in the plan");
        return it->second;
    }
    std::size_t size() const noexcept { return arcs_.size(); }
    bool empty() const noexcept { return arcs_.empty(); }

    auto begin() const { return arcs_.begin(); }
    auto end() const { return arcs_.end(); }

   private:
    std::map<missing_edge, oriented_edge> arcs_;
};

}  // namespace snc

#endif
