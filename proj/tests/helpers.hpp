#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "frozen_values.hpp"
#include "snc/forge.hpp"

namespace test {

inline snc::digraph build(unsigned n, const frozen::arc_list& arcs) {
    std::vector<snc::arc> a;
    for (auto [u, v] : arcs) a.push_back({u, v});
    return snc::digraph(n, a);
}

inline snc::vertex_set mask(std::uint64_t bits) {
    snc::vertex_set s;
    for (snc::vertex v = 0; v < 64; ++v)
        if ((bits >> v) & 1U) s.insert(v);
    return s;
}

inline snc::vertex_set set(std::initializer_list<snc::vertex> vs) { return snc::vertex_set::from(std::vector(vs)); }

/// Forward arc count maximized over all permutations.
inline long brute_optimum(const snc::digraph& d) {
    std::vector<snc::vertex> p(d.size());
    std::iota(p.begin(), p.end(), 0);
    long best = -1;
    do {
        long val = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) val += d.has_arc(p[i], p[j]);
        best = std::max(best, val);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

}  // namespace test
