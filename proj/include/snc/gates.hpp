#ifndef SNC_GATES_HPP
#define SNC_GATES_HPP

#include <string>
#include <vector>

#include "snp.hpp"
#include "theorem_support.hpp"

namespace snc {

/// Hypotheses of one theorem evaluated on one digraph.
struct gate_report {
    theorem_id theorem = theorem_id::tournament;
    bool applicable = false;
    std::vector<hypothesis_check> checks;
    std::vector<star> stars;  ///< the center assignment that passed, if any

    std::string failed_clause() const {
        for (const auto& c : checks)
            if (!c.passed) return c.clause;
        return {};
    }
};

namespace detail {

inline std::string stars_text(const std::vector<star>& stars) {
    std::string s;
    for (const auto& st : stars) {
        if (!s.empty()) s += " ";
        s += std::to_string(st.center) + ":" + to_string(st.leaves);
    }
    return s.empty() ? "none" : s;
}

inline std::string delta_text(const dependency_digraph& g) {
    return "|delta|=" + std::to_string(g.size()) + " min-in=" + std::to_string(g.min_in_degree()) +
           " min-out=" + std::to_string(g.min_out_degree());
}

/// x -> y -> z -> x among the three centers, rotated to start at the first star
inline std::optional<std::vector<star>> directed_triangle(const digraph& d, const std::vector<star>& s) {
    if (s.size() != 3) return std::nullopt;
    for (std::size_t second : {1, 2}) {
        std::size_t third = 3 - second;
        if (d.has_arc(s[0].center, s[second].center) && d.has_arc(s[second].center, s[third].center) &&
            d.has_arc(s[third].center, s[0].center))
            return std::vector<star>{s[0], s[second], s[third]};
    }
    return std::nullopt;
}

/// the two stars ordered so that x -> y
inline std::vector<star> ordered_pair(const digraph& d, const std::vector<star>& s) {
    if (d.has_arc(s[1].center, s[0].center)) return {s[1], s[0]};
    return s;
}

/// y -> a and b -> x for every a in A, b in B
inline bool two_star_claim(const digraph& d, const std::vector<star>& s) {
    for (vertex a : s[0].leaves)
        if (!d.has_arc(s[1].center, a)) return false;
    for (vertex b : s[1].leaves)
        if (!d.has_arc(b, s[0].center)) return false;
    return true;
}

/// b -> x -> c -> y -> a -> z -> b for all leaves a, b, c
inline bool three_star_claim(const digraph& d, const std::vector<star>& s) {
    for (std::size_t i = 0; i < 3; ++i) {
        const star& me = s[i];
        const star& next = s[(i + 1) % 3];
        const star& prev = s[(i + 2) % 3];
        for (vertex c : prev.leaves)
            if (!d.has_arc(me.center, c)) return false;  // x -> C
        for (vertex b : next.leaves)
            if (!d.has_arc(b, me.center)) return false;  // B -> x
    }
    return true;
}

/// Dependency arcs between star edges only run xa -> yb, yb -> zc, zc -> xa.
inline std::vector<std::string> three_star_shape_violations(const dependency_digraph& g, const std::vector<star>& s) {
    auto star_index = [&](const missing_edge& e) {
        for (std::size_t i = 0; i < 3; ++i)
            if (s[i].vertices().contains(e.u)) return i;
        return std::size_t{3};
    };
    std::vector<std::string> bad;
    for (const auto& a : g.arcs) {
        std::size_t from = star_index(g.edges[a.from]), to = star_index(g.edges[a.to]);
        if (to != (from + 1) % 3) bad.push_back(to_string(g.edges[a.from]) + "->" + to_string(g.edges[a.to]));
    }
    return bad;
}

}  // namespace detail

inline gate_report evaluate_gate(const instance_facts& f, theorem_id t) {
    gate_report r;
    r.theorem = t;
    auto add = [&](std::string clause, bool passed, std::string evidence) {
        r.checks.push_back({std::move(clause), passed, std::move(evidence)});
        return passed;
    };
    auto finish = [&] {
        r.applicable = std::all_of(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.passed; });
        return r;
    };
    const digraph& d = f.d;
    const auto& delta = f.delta();
    auto add_no_sink = [&] {
        add("no-sink", !f.has_sink(), "sinks " + to_string(d.sinks()));
    };

    if (t == theorem_id::tournament || t == theorem_id::tournament_two) {
        add("tournament", f.tournament(),
            std::to_string(missing_graph(d).edges.size()) + " missing edges");
        if (t == theorem_id::tournament_two) add_no_sink();
        return finish();
    }

    if (!add("disjoint-stars", f.dec.has_value(),
             f.dec ? "stars " + detail::stars_text(f.dec->all_stars()) : f.decomposition_error))
        return finish();
    const star_decomposition& dec = *f.dec;
    const auto assignments = center_assignments(dec);
    const std::size_t components = dec.component_count();

    switch (t) {
        case theorem_id::kings_stars: {
            bool found = false;
            for (const auto& a : assignments) {
                vertex_set c = centers_of(a);
                if (c.empty() || all_kings(induced(d, c).graph)) {
                    r.stars = a;
                    found = true;
                    break;
                }
            }
            add("centers-all-kings", found,
                found ? "centers " + to_string(centers_of(r.stars)) : "no center assignment is all-kings");
            add("delta-min-in>0", delta.size() > 0 && delta.min_in_degree() > 0, detail::delta_text(delta));
            break;
        }
        case theorem_id::star_matching: {
            add("one-star-plus-matching", dec.stars.size() <= 1,
                std::to_string(dec.stars.size()) + " stars with two or more leaves");
            r.stars = assignments.front();
            bool ok = true;
            std::string evidence = "no star edges";
            if (dec.stars.size() == 1) {
                evidence.clear();
                const vertex x = dec.stars.front().center;
                for (std::size_t c = 0; c < f.ci.components.size(); ++c) {
                    const auto& members = f.ci.components[c];
                    bool has_star = std::any_of(members.begin(), members.end(),
                                                [&](std::size_t e) { return delta.edges[e].has(x); });
                    if (!has_star) continue;
                    std::size_t min_in = members.size(), min_out = members.size();
                    for (std::size_t e : members) {
                        min_in = std::min(min_in, delta.in[e].size());
                        min_out = std::min(min_out, delta.out[e].size());
                    }
                    if (min_in == 0 || min_out == 0) ok = false;
                    evidence += "component " + std::to_string(c) + ": min-in=" + std::to_string(min_in) +
                                " min-out=" + std::to_string(min_out) + "; ";
                }
            }
            add("star-components-min-degrees>0", ok, evidence);
            break;
        }
        case theorem_id::matching_two: {
            add("matching", dec.stars.empty(), std::to_string(dec.stars.size()) + " stars with two or more leaves");
            bool f_empty = true;
            for (std::size_t c = 0; c < f.ci.components.size(); ++c)
                f_empty = f_empty && f.ci.component_strongly_connected(c);
            add("F-empty", f_empty, "every dependency component is a non-trivial strong component: " +
                                        std::string(f_empty ? "yes" : "no"));
            add_no_sink();
            r.stars = assignments.front();
            break;
        }
        case theorem_id::single_star:
            add("one-star", components <= 1, std::to_string(components) + " components");
            r.stars = assignments.front();
            break;
        case theorem_id::two_stars:
        case theorem_id::two_stars_two: {
            add("two-stars", components == 2, std::to_string(components) + " components");
            if (t == theorem_id::two_stars)
                add("delta-min>0", delta.size() > 0 && delta.min_degree() > 0, detail::delta_text(delta));
            else {
                add("delta-min-out>0", delta.size() > 0 && delta.min_out_degree() > 0, detail::delta_text(delta));
                add("delta-min-in>0", delta.size() > 0 && delta.min_in_degree() > 0, detail::delta_text(delta));
                add_no_sink();
            }
            if (components == 2) {
                r.stars = detail::ordered_pair(d, assignments.front());
                for (const auto& a : assignments) {
                    auto ordered = detail::ordered_pair(d, a);
                    if (detail::two_star_claim(d, ordered)) {
                        r.stars = ordered;
                        break;
                    }
                }
            }
            break;
        }
        case theorem_id::three_stars:
        case theorem_id::three_stars_two: {
            bool three = add("three-stars", components == 3, std::to_string(components) + " components");
            bool triangle = false;
            if (three) {
                for (const auto& a : assignments) {
                    auto tri = detail::directed_triangle(d, a);
                    if (!tri) continue;
                    bool preferred = t == theorem_id::three_stars
                                         ? detail::three_star_shape_violations(delta, *tri).empty()
                                         : detail::three_star_claim(d, *tri);
                    if (!triangle || preferred) r.stars = *tri;
                    triangle = true;
                    if (preferred) break;
                }
            }
            add("directed-triangle", triangle,
                triangle ? "x->y->z->x with centers " + std::to_string(r.stars[0].center) + "," +
                               std::to_string(r.stars[1].center) + "," + std::to_string(r.stars[2].center)
                         : "centers induce no directed triangle under any center assignment");
            if (t == theorem_id::three_stars)
                add("delta-min>0", delta.size() > 0 && delta.min_degree() > 0, detail::delta_text(delta));
            else {
                add("delta-min-out>0", delta.size() > 0 && delta.min_out_degree() > 0, detail::delta_text(delta));
                add("delta-min-in>0", delta.size() > 0 && delta.min_in_degree() > 0, detail::delta_text(delta));
                add_no_sink();
            }
            break;
        }
        default:
            break;
    }
    return finish();
}

inline gate_report evaluate_gate(const digraph& d, theorem_id t) { return evaluate_gate(instance_facts(d), t); }

/// Every theorem's hypotheses on D.
inline std::vector<gate_report> check_hypotheses(const digraph& d) {
    instance_facts f(d);
    std::vector<gate_report> out;
    for (theorem_id t : all_theorems) out.push_back(evaluate_gate(f, t));
    return out;
}

}  // namespace snc

#endif
