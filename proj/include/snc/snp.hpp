#ifndef SNC_SNP_HPP
#define SNC_SNP_HPP

#include "digraph.hpp"

namespace snc {

/// d+(v) and d++(v), and whether d+(v) <= d++(v)
struct snp_verdict {
    vertex v = 0;
    std::size_t out_degree = 0;
    std::size_t second_out_degree = 0;
    bool holds = false;
};

inline snp_verdict snp_check(const digraph& d, vertex v) {
    snp_verdict r{v, neighbors(d, v).size(), second_neighborhood(d, v).size(), false};
    r.holds = r.out_degree <= r.second_out_degree;
    return r;
}

inline bool has_snp(const digraph& d, vertex v) { return snp_check(d, v).holds; }

inline bool has_snp(const digraph& d, const weighting& w, vertex v) {
    return w.sum(neighbors(d, v)) <= w.sum(second_neighborhood(d, v));
}

inline vertex_set snp_set(const digraph& d) {
    vertex_set s;
    for (vertex v = 0; v < d.size(); ++v)
        if (has_snp(d, v)) s.insert(v);
    return s;
}

inline vertex_set snp_set(const digraph& d, const weighting& w) {
    vertex_set s;
    for (vertex v = 0; v < d.size(); ++v)
        if (has_snp(d, w, v)) s.insert(v);
    return s;
}

/// v reaches every vertex within two steps. T must be a tournament.
inline bool is_king(const digraph& t, vertex v) {
    if (!t.is_tournament()) throw invalid_argument("king test needs a tournament");
    return (vertex_set::single(v) | t.out(v) | second_neighborhood(t, v)) == t.vertices();
}

inline bool all_kings(const digraph& t) {
    if (!t.is_tournament()) throw invalid_argument("king test needs a tournament");
    for (vertex v = 0; v < t.size(); ++v)
        if (!is_king(t, v)) return false;
    return true;
}

}  // namespace snc

#endif
