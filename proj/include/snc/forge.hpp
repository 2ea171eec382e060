#ifndef SNC_FORGE_HPP
#define SNC_FORGE_HPP

#include <cstdint>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gates.hpp"

namespace snc {

/// mt19937_64 with platform-independent draws (std distributions are not).
class rng {
   public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    bool coin() { return (engine_() >> 63) != 0; }
    /// uniform in [0, 1)
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

   private:
    std::mt19937_64 engine_;
};

inline digraph fixture(std::string_view name) {
    if (name == "C3") return digraph(3, {{0, 1}, {1, 2}, {2, 0}});
    if (name == "TT3") return digraph(3, {{0, 1}, {0, 2}, {1, 2}});
    if (name == "C4X") return digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    if (name == "LC3")
        return digraph(6, {{0, 2}, {0, 5}, {1, 3}, {1, 4}, {2, 4}, {2, 1}, {3, 5}, {3, 0}, {4, 0}, {4, 3}, {5, 1}, {5, 2}});
    if (name == "ST1") return digraph(4, {{1, 2}, {2, 3}, {3, 1}, {0, 3}});
    throw invalid_argument("unknown fixture '" + std::string(name) + "'");
}

inline constexpr std::array<std::string_view, 5> fixture_names{"C3", "TT3", "C4X", "LC3", "ST1"};

inline digraph random_tournament(std::size_t n, std::uint64_t seed) {
    rng r(seed);
    std::vector<arc> arcs;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v) arcs.push_back(r.coin() ? arc{u, v} : arc{v, u});
    return digraph(n, arcs);
}

/// Each pair is an arc with probability `density`, then gets a random direction.
inline digraph random_digraph(std::size_t n, std::uint64_t seed, double density) {
    if (!(density >= 0.0 && density <= 1.0)) throw invalid_argument("density must lie in [0, 1]");
    rng r(seed);
    std::vector<arc> arcs;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v) {
            bool present = r.unit() < density;
            bool forward = r.coin();
            if (present) arcs.push_back(forward ? arc{u, v} : arc{v, u});
        }
    return digraph(n, arcs);
}

/// vertex i beats i+1, ..., i+(n-1)/2 modulo n
inline digraph rotational_tournament(std::size_t n) {
    if (n % 2 == 0) throw invalid_argument("rotational tournaments need odd n");
    std::vector<arc> arcs;
    for (vertex i = 0; i < n; ++i)
        for (vertex s = 1; s <= (n - 1) / 2; ++s) arcs.push_back({i, static_cast<vertex>((i + s) % n)});
    return digraph(n, arcs);
}

/// Labelled tournament number `code`: bit i of the code orients the i-th pair u<v (lexicographic) as u->v when set.
inline digraph tournament_from_code(std::size_t n, std::uint64_t code) {
    std::vector<arc> arcs;
    std::size_t bit = 0;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v, ++bit) arcs.push_back((code >> bit) & 1U ? arc{u, v} : arc{v, u});
    return digraph(n, arcs);
}

/// Labelled digon-free digraph number `code`: base-3 digit i is 0 (no arc), 1 (u->v) or 2 (v->u) for the i-th pair.
inline digraph digraph_from_code(std::size_t n, std::uint64_t code) {
    std::vector<arc> arcs;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v, code /= 3) {
            if (code % 3 == 1) arcs.push_back({u, v});
            if (code % 3 == 2) arcs.push_back({v, u});
        }
    return digraph(n, arcs);
}

/// A tournament in which every vertex is a king. Even orders come from a seeded search.
inline digraph all_kings_tournament(std::size_t n) {
    if (n == 0) throw invalid_argument("n must be positive");
    if (n == 2 || n == 4) throw unrealizable("no tournament on " + std::to_string(n) + " vertices has all vertices kings");
    if (n % 2 == 1) return rotational_tournament(n);
    for (std::uint64_t seed = 0; seed < 1000000; ++seed) {
        digraph t = random_tournament(n, seed);
        if (all_kings(t)) return t;
    }
    throw unrealizable("search budget exhausted for n=" + std::to_string(n));
}

/// T minus the edges of the given stars.
inline digraph delete_disjoint_stars(const digraph& t, const std::vector<star>& stars) {
    vertex_set used;
    std::vector<missing_edge> edges;
    for (const auto& s : stars) {
        if (s.leaves.empty()) throw invalid_argument("star without leaves");
        if (used.intersects(s.vertices())) throw invalid_argument("stars are not disjoint");
        used |= s.vertices();
        for (const auto& e : s.edges()) {
            if (!t.adjacent(e.u, e.v)) throw invalid_argument("edge " + to_string(e) + " is not in the digraph");
            edges.push_back(e);
        }
    }
    return remove_edges(t, edges);
}

/// Vertices a_i = 2(i-1), b_i = 2(i-1)+1 of the losing-cycle gadget.
inline vertex gadget_a(std::size_t i) { return static_cast<vertex>(2 * (i - 1)); }
inline vertex gadget_b(std::size_t i) { return static_cast<vertex>(2 * (i - 1) + 1); }

/// Every failed losing-cycle identity on a k-gadget; empty when all hold.
inline std::vector<std::string> gadget_failures(const digraph& d, std::size_t k) {
    std::vector<std::string> bad;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) bad.push_back(what);
    };
    if (k < 2 || d.size() != 2 * k) {
        bad.push_back("a k-gadget has 2k vertices");
        return bad;
    }
    auto a = [&](std::size_t i) { return gadget_a((i - 1) % k + 1); };
    auto b = [&](std::size_t i) { return gadget_b((i - 1) % k + 1); };

    // dependency digraph is the k-cycle a1b1 -> a2b2 -> ... -> akbk -> a1b1
    auto delta = build_dependency(d);
    std::set<std::pair<std::size_t, std::size_t>> want, have;
    std::vector<missing_edge> want_edges;
    for (std::size_t i = 1; i <= k; ++i) want_edges.emplace_back(a(i), b(i));
    std::sort(want_edges.begin(), want_edges.end());
    expect(delta.edges == want_edges, "missing edges are not exactly the pairs a_i b_i");
    if (delta.edges == want_edges) {
        for (std::size_t i = 1; i <= k; ++i)
            want.insert({delta.index_of(missing_edge(a(i), b(i))), delta.index_of(missing_edge(a(i + 1), b(i + 1)))});
        for (const auto& arc : delta.arcs) have.insert({arc.from, arc.to});
        expect(want == have, "dependency digraph is not the k-cycle");
    }

    // closing arc shape
    auto reach = [&](vertex v) { return second_neighborhood(d, v); };
    if (k % 2 == 1) {
        expect(d.has_arc(a(k), a(1)) && !reach(a(k)).contains(b(1)), "odd closing: a_k->a_1, b_1 outside N++(a_k)");
        expect(d.has_arc(b(k), b(1)) && !reach(b(k)).contains(a(1)), "odd closing: b_k->b_1, a_1 outside N++(b_k)");
    } else {
        expect(d.has_arc(a(k), b(1)) && !reach(a(k)).contains(a(1)), "even closing: a_k->b_1, a_1 outside N++(a_k)");
        expect(d.has_arc(b(k), a(1)) && !reach(b(k)).contains(b(1)), "even closing: b_k->a_1, b_1 outside N++(b_k)");
    }

    // neighbourhoods of a_1 and b_1, verbatim
    vertex_set plus, minus;
    for (std::size_t j = 2; j <= k; ++j) {
        bool even = j % 2 == 0;
        plus.insert(even ? a(j) : b(j));
        minus.insert(even ? b(j) : a(j));
    }
    expect(d.out(a(1)) == plus && d.in(b(1)) == plus, "N+(a_1) = N-(b_1) = " + to_string(plus));
    expect(d.in(a(1)) == minus && d.out(b(1)) == minus, "N-(a_1) = N+(b_1) = " + to_string(minus));

    // second neighbourhoods and degree identities at every i
    for (std::size_t i = 1; i <= k; ++i) {
        vertex ai = a(i), bi = b(i);
        vertex an = i < k ? a(i + 1) : (k % 2 == 1 ? a(1) : b(1));
        vertex bn = i < k ? b(i + 1) : (k % 2 == 1 ? b(1) : a(1));
        std::string at = " at i=" + std::to_string(i);
        expect(d.out(ai) == d.in(bi) && d.in(ai) == d.out(bi), "N+(a_i) = N-(b_i), N-(a_i) = N+(b_i)" + at);
        expect(reach(ai) == ((d.in(ai) | vertex_set::single(bi)) - vertex_set::single(bn)),
               "N++(a_i) = N-(a_i) + b_i - b_{i+1}" + at);
        expect(reach(bi) == ((d.in(bi) | vertex_set::single(ai)) - vertex_set::single(an)),
               "N++(b_i) = N-(b_i) + a_i - a_{i+1}" + at);
        for (vertex v : {ai, bi})
            expect(d.out(v).size() == k - 1 && d.in(v).size() == k - 1 && reach(v).size() == k - 1,
                   "d+ = d- = d++ = k-1 at vertex " + std::to_string(v));
    }
    return bad;
}

/**
 * @brief a digraph on a_1, b_1, ..., a_k, b_k missing exactly the pairs
 * a_i b_i whose dependency digraph is the cycle of those pairs
 *
 * Odd k: with d = (j - i) mod k, a_i beats a_j and b_i beats b_j when d is
 * odd, a_i beats b_j and b_i beats a_j when d is even and nonzero. Even k:
 * list a_1..a_k, b_1..b_k around a 2k-cycle; the vertex at offset d ahead
 * is an out-neighbour when d is odd and below k, or even and above k+1.
 */
inline digraph losing_cycle_gadget(std::size_t k) {
    if (k < 2) throw invalid_argument("losing cycles need k >= 2");
    if (2 * k > max_vertices) throw invalid_argument("gadget too large");
    std::vector<arc> arcs;
    if (k % 2 == 1) {
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t j = 1; j <= k; ++j) {
                std::size_t d = (j + k - i) % k;
                if (d == 0) continue;
                if (d % 2 == 1) {
                    arcs.push_back({gadget_a(i), gadget_a(j)});
                    arcs.push_back({gadget_b(i), gadget_b(j)});
                } else {
                    arcs.push_back({gadget_a(i), gadget_b(j)});
                    arcs.push_back({gadget_b(i), gadget_a(j)});
                }
            }
    } else {
        auto c = [&](std::size_t s) { return s < k ? gadget_a(s + 1) : gadget_b(s - k + 1); };
        for (std::size_t s = 0; s < 2 * k; ++s)
            for (std::size_t d = 1; d < 2 * k; ++d)
                if ((d % 2 == 1 && d < k) || (d % 2 == 0 && d > k + 1)) arcs.push_back({c(s), c((s + d) % (2 * k))});
    }
    digraph g(2 * k, arcs);
    auto bad = gadget_failures(g, k);
    if (!bad.empty()) throw consistency_violation("losing-cycle gadget k=" + std::to_string(k) + ": " + bad.front());
    return g;
}

/// A random tournament with the given stars (leaf counts) deleted; vertices are assigned by a seeded shuffle.
inline digraph star_deleted(std::size_t n, std::uint64_t seed, const std::vector<std::size_t>& shape) {
    std::size_t need = 0;
    for (std::size_t leaves : shape) {
        if (leaves == 0) throw invalid_argument("a star needs at least one leaf");
        need += leaves + 1;
    }
    if (need > n) throw invalid_argument("star shape needs more than n vertices");
    rng r(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    r.shuffle(perm);
    std::vector<star> stars;
    std::size_t next = 0;
    for (std::size_t leaves : shape) {
        star s{perm[next++], {}};
        for (std::size_t i = 0; i < leaves; ++i) s.leaves.insert(perm[next++]);
        stars.push_back(s);
    }
    return delete_disjoint_stars(random_tournament(n, seed), stars);
}

/// kind:key=value,... describing one instance completely
struct instance_spec {
    std::string kind;
    std::map<std::string, std::string> params;

    std::string get(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end()) throw invalid_argument(kind + " instance needs '" + key + "'");
        return it->second;
    }
    std::uint64_t number(const std::string& key) const {
        std::string s = get(key);
        std::size_t used = 0;
        std::uint64_t v = 0;
        try {
            v = std::stoull(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw invalid_argument("'" + key + "' must be a non-negative integer");
        return v;
    }
};

inline std::string to_string(const instance_spec& s) {
    std::string out = s.kind;
    char sep = ':';
    for (const auto& [k, v] : s.params) {
        out += sep + k + "=" + v;
        sep = ',';
    }
    return out;
}

inline instance_spec parse_instance_spec(std::string_view text) {
    instance_spec s;
    auto colon = text.find(':');
    s.kind = std::string(text.substr(0, colon));
    static const std::set<std::string> kinds{"fixture",  "random-tournament",   "random-digraph",
                                             "star-deleted", "losing-cycle-gadget", "all-kings"};
    if (!kinds.count(s.kind)) throw invalid_argument("unknown instance kind '" + s.kind + "'");
    if (colon == std::string_view::npos) return s;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) throw invalid_argument("expected key=value in '" + std::string(item) + "'");
        s.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return s;
}

inline std::vector<std::size_t> parse_shape(const std::string& text) {
    std::vector<std::size_t> shape;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto dot = text.find('.', start);
        std::string part = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw invalid_argument("bad star shape '" + text + "'");
        shape.push_back(std::stoul(part));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return shape;
}

inline digraph realize(const instance_spec& s) {
    if (s.kind == "fixture") return fixture(s.get("name"));
    if (s.kind == "random-tournament") return random_tournament(s.number("n"), s.number("seed"));
    if (s.kind == "random-digraph") {
        double density = 0.5;
        if (s.params.count("density")) {
            try {
                density = std::stod(s.get("density"));
            } catch (const std::exception&) {
                throw invalid_argument("density must be a number");
            }
        }
        return random_digraph(s.number("n"), s.number("seed"), density);
    }
    if (s.kind == "star-deleted") return star_deleted(s.number("n"), s.number("seed"), parse_shape(s.get("shape")));
    if (s.kind == "losing-cycle-gadget") return losing_cycle_gadget(s.number("k"));
    if (s.kind == "all-kings") return all_kings_tournament(s.number("n"));
    throw invalid_argument("unknown instance kind '" + s.kind + "'");
}

inline digraph realize(std::string_view spec) { return realize(parse_instance_spec(spec)); }

struct search_result {
    std::vector<digraph> instances;
    std::size_t evaluated = 0;  ///< candidate digraphs checked against the gate
    std::size_t starts = 0;     ///< fresh random starting points

    double acceptance_rate() const {
        return evaluated == 0 ? 0.0 : static_cast<double>(instances.size()) / static_cast<double>(evaluated);
    }
};

namespace detail {

/// random star shape fitting n vertices for a theorem's family
inline std::vector<std::size_t> family_shape(theorem_id t, std::size_t n, rng& r) {
    auto leaves_up_to = [&](std::size_t most) { return 1 + r.below(std::max<std::size_t>(most, 1)); };
    std::vector<std::size_t> shape;
    std::size_t stars = 0;
    switch (t) {
        case theorem_id::single_star:
            return {leaves_up_to(n - 1)};
        case theorem_id::two_stars:
        case theorem_id::two_stars_two:
            stars = 2;
            break;
        case theorem_id::three_stars:
        case theorem_id::three_stars_two:
            stars = 3;
            break;
        case theorem_id::kings_stars:
            stars = n >= 10 && r.below(4) == 0 ? 5 : (r.below(5) == 0 ? 1 : 3);
            break;
        case theorem_id::star_matching: {
            std::size_t star_leaves = 2 + r.below(std::max<std::size_t>(n / 3, 1));
            shape.push_back(star_leaves);
            std::size_t left = n - star_leaves - 1;
            std::size_t m = r.below(left / 2 + 1);
            for (std::size_t i = 0; i < m; ++i) shape.push_back(1);
            return shape;
        }
        case theorem_id::matching_two: {
            std::size_t m = 2 + r.below(std::max<std::size_t>(n / 2 - 1, 1));
            return std::vector<std::size_t>(std::min(m, n / 2), 1);
        }
        default:
            return {};
    }
    if (n < 2 * stars) throw invalid_argument("too few vertices for " + std::to_string(stars) + " stars");
    std::size_t budget = n - stars;  // leaves available
    for (std::size_t i = 0; i < stars; ++i) {
        std::size_t keep = stars - i - 1;  // each later star needs a leaf
        shape.push_back(leaves_up_to(budget - keep));
        budget -= shape.back();
    }
    return shape;
}

inline int gate_score(const gate_report& g, const dependency_digraph& delta) {
    int score = 0;
    for (const auto& c : g.checks)
        if (c.passed) score += 100;
    for (std::size_t e = 0; e < delta.size(); ++e)
        score += (delta.in[e].empty() ? 0 : 1) + (delta.out[e].empty() ? 0 : 1);
    return score;
}

}  // namespace detail

/**
 * @brief star-deleted random tournaments passing a theorem's hypotheses
 *
 * Random starts are improved by flipping single arcs, keeping a flip when
 * the gate score does not drop, until the gate passes. `budget` bounds the
 * number of candidate digraphs evaluated; `wanted` stops early.
 */
inline search_result filtered_search(theorem_id t, std::size_t n, std::uint64_t seed, std::size_t budget,
                                     std::size_t wanted = static_cast<std::size_t>(-1), std::size_t climb = 2000) {
    if (t == theorem_id::tournament || t == theorem_id::tournament_two)
        throw invalid_argument("filtered search targets the star theorems");
    if (n < 4) throw invalid_argument("filtered search needs n >= 4");
    search_result out;
    std::set<std::vector<arc>> seen;
    rng r(seed);
    while (out.evaluated < budget && out.instances.size() < wanted) {
        ++out.starts;
        auto shape = detail::family_shape(t, n, r);
        digraph d = star_deleted(n, r.below(std::uint64_t{1} << 62), shape);
        auto eval = [&](const digraph& g) {
            ++out.evaluated;
            instance_facts f(g);
            auto gate = evaluate_gate(f, t);
            return std::pair{gate.applicable, detail::gate_score(gate, f.delta())};
        };
        auto [ok, score] = eval(d);
        // most flips touch a star vertex: only those arcs can create losing relations
        const vertex_set k = missing_graph(d).non_whole;
        std::vector<arc> near, all = d.arcs();
        for (const arc& a : all)
            if (k.contains(a.tail) || k.contains(a.head)) near.push_back(a);
        for (std::size_t step = 0; !ok && step < climb && out.evaluated < budget; ++step) {
            const auto& pool = near.empty() || r.below(4) == 0 ? all : near;
            const arc pick = pool[r.below(pool.size())];
            digraph next = reverse_arc(d, pick.tail, pick.head);
            auto [next_ok, next_score] = eval(next);
            if (next_score >= score) {
                for (auto* list : {&near, &all})
                    for (arc& a : *list)
                        if (a == pick) std::swap(a.tail, a.head);
                d = std::move(next);
                ok = next_ok;
                score = next_score;
            }
        }
        if (ok && seen.insert(d.arcs()).second) out.instances.push_back(d);
    }
    return out;
}

}  // namespace snc

#endif
