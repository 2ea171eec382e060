#ifndef SNC_THEOREMS_HPP
#define SNC_THEOREMS_HPP

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gates.hpp"

namespace snc {

namespace detail {

inline gate_report require(const instance_facts& f, theorem_id t) {
    gate_report g = evaluate_gate(f, t);
    if (!g.applicable) throw hypothesis_failed(t, g.checks, g.failed_clause());
    return g;
}

inline snp_certificate start(const gate_report& g) {
    snp_certificate c;
    c.theorem = g.theorem;
    c.hypotheses = g.checks;
    return c;
}

inline linear_order solve(const digraph& t, const tiebreak& tb, const solver_options& opts) {
    return exact_median_order(t, weighting::unit(t.size()), tb, opts).order;
}

inline vertex_set star_vertices(const std::vector<star>& stars) {
    vertex_set k;
    for (const auto& s : stars) k |= s.vertices();
    return k;
}

/// feed of an exact median order and, without a sink, a second vertex by sedimentation
inline std::vector<vertex> tournament_witnesses(const digraph& t, const solver_options& opts,
                                                std::vector<std::string>& trace) {
    linear_order l = solve(t, tiebreak::none(), opts);
    trace.push_back("median order " + to_string(l) + ", feed " + std::to_string(l.feed()));
    std::vector<vertex> w{l.feed()};
    if (t.sinks().empty() && t.size() >= 2) {
        auto second = sediment_second_witness(t, singleton_blocks(t.size()), l,
                                              [](vertex feed, vertex_set) { return feed; });
        trace.insert(trace.end(), second.trace.begin(), second.trace.end());
        w.push_back(second.y);
    }
    return w;
}

inline std::vector<vertex> lift(const induced_digraph& sub, const std::vector<vertex>& local) {
    std::vector<vertex> out;
    for (vertex v : local) out.push_back(sub.original[v]);
    return out;
}

inline std::vector<star> localize(const induced_digraph& sub, const std::vector<star>& stars) {
    std::vector<star> out;
    for (const auto& s : stars) out.push_back({sub.to_local(s.center), sub.to_local(s.leaves)});
    return out;
}

}  // namespace detail

/**
 * @brief SNP witnesses of a tournament: the feed of a median order, and a
 * second vertex from sedimenting the prefix order when there is no sink
 */
inline snp_certificate havet_thomasse_witnesses(const digraph& t, const solver_options& opts = {}) {
    instance_facts f(t);
    bool two = f.tournament() && !f.has_sink() && t.size() >= 2;
    auto g = detail::require(f, two ? theorem_id::tournament_two : theorem_id::tournament);
    auto cert = detail::start(g);
    cert.witnesses = detail::tournament_witnesses(t, opts, cert.trace);
    return certify(t, std::move(cert));
}

inline snp_certificate kings_stars_witness(const digraph& d, const solver_options& opts = {}) {
    instance_facts facts(d);
    auto g = detail::require(facts, theorem_id::kings_stars);
    auto cert = detail::start(g);
    orientation_plan plan;
    for (const auto& s : g.stars)
        for (vertex a : s.leaves) plan.orient(a, s.center, provenance::toward_center);
    digraph t = complete(d, plan);
    linear_order l = detail::solve(t, tiebreak::none(), opts);
    const vertex f = l.feed();
    cert.trace.push_back("completion toward centers; median order " + to_string(l) + ", feed " + std::to_string(f));

    vertex_set centers = centers_of(g.stars);
    if (is_whole(d, f)) {
        cert.trace.push_back("case: feed is whole");
    } else if (centers.contains(f)) {
        cert.trace.push_back("case: feed is a center");
    } else {
        const star& s = star_of(g.stars, f);
        std::size_t e = facts.delta().index_of(missing_edge(f, s.center));
        if (!facts.delta().out[e].empty()) {
            cert.trace.push_back("case: feed is a leaf whose edge loses to " +
                                 to_string(facts.delta().edges[facts.delta().out[e].front()]));
        } else {
            cert.trace.push_back("case: feed is a leaf whose edge loses to nothing; reorient " +
                                 std::to_string(f) + std::to_string(s.center) + " from " + std::to_string(s.center) +
                                 " to " + std::to_string(f));
        }
    }
    cert.witnesses = {f};
    return certify(d, std::move(cert));
}

/// The arcs F: every path component of the dependency digraph without the star center, oriented along the path.
inline orientation_plan build_f(const digraph& d, const component_index& ci, std::optional<vertex> x) {
    const auto& delta = ci.delta;
    orientation_plan plan;
    for (std::size_t c = 0; c < ci.components.size(); ++c) {
        const auto& members = ci.components[c];
        if (x && std::any_of(members.begin(), members.end(), [&](std::size_t e) { return delta.edges[e].has(*x); }))
            continue;
        if (ci.component_strongly_connected(c)) continue;
        auto start = std::find_if(members.begin(), members.end(), [&](std::size_t e) { return delta.in[e].empty(); });
        if (start == members.end())
            throw consistency_violation("dependency component " + std::to_string(c) + " is neither a path nor a cycle");
        std::vector<std::size_t> path{*start};
        while (delta.out[path.back()].size() == 1 && path.size() <= members.size())
            path.push_back(delta.out[path.back()].front());
        bool simple_path = path.size() == members.size() && delta.out[path.back()].empty();
        for (std::size_t i = 1; simple_path && i < path.size(); ++i) simple_path = delta.in[path[i]].size() == 1;
        if (!simple_path)
            throw consistency_violation("dependency component " + std::to_string(c) + " is neither a path nor a cycle");

        auto conv = convenient_orientations(d, delta.edges[path.front()]);
        if (conv.empty())
            throw consistency_violation("first edge " + to_string(delta.edges[path.front()]) +
                                        " of a dependency path has no convenient orientation");
        vertex a = conv.front().tail;
        for (std::size_t i = 0; i < path.size(); ++i) {
            const missing_edge& e = delta.edges[path[i]];
            plan.orient(a, e.other(a), provenance::path_f);
            if (i + 1 < path.size()) {
                const losing_roles& r = delta.find_arc(path[i], path[i + 1])->roles;
                a = r.x1 == a ? r.x2 : r.y2;
            }
        }
    }
    return plan;
}

namespace detail {

/// Tournament on K(xi) anchored at x: star edges (a,x); matching edges oriented into the vertex tied to x along a shortest dependency path.
inline orientation_plan anchored_plan(const dependency_digraph& delta, vertex x, vertex_set k,
                                    std::vector<std::string>& findings) {
    std::vector<std::optional<vertex>> designated(delta.size());
    std::deque<std::size_t> queue;
    for (std::size_t e = 0; e < delta.size(); ++e)
        if (delta.edges[e].has(x)) {
            designated[e] = x;
            queue.push_back(e);
        }
    while (!queue.empty()) {
        std::size_t e = queue.front();
        queue.pop_front();
        for (std::size_t n : delta.out[e]) {
            if (designated[n]) continue;
            const losing_roles& r = delta.find_arc(e, n)->roles;
            designated[n] = *designated[e] == r.x1 ? r.x2 : r.y2;
            queue.push_back(n);
        }
    }
    orientation_plan plan;
    for (std::size_t e = 0; e < delta.size(); ++e) {
        const missing_edge& me = delta.edges[e];
        if (!k.contains(me.u)) continue;
        if (me.has(x)) {
            plan.orient(me.other(x), x, provenance::toward_center);
        } else if (designated[e]) {
            plan.orient(me.other(*designated[e]), *designated[e], provenance::explicit_choice);
        } else {
            findings.push_back("no dependency path from a star edge reaches " + to_string(me));
            plan.orient(me.u, me.v, provenance::explicit_choice);
        }
    }
    return plan;
}

inline std::optional<std::string> regularity_finding(const digraph& d, vertex_set k) {
    auto sub = induced(d, k);
    const std::size_t expect = k.size() / 2 - 1;
    for (vertex v = 0; v < sub.graph.size(); ++v) {
        auto s = snp_check(sub.graph, v);
        if (s.out_degree != expect || s.second_out_degree != expect || sub.graph.in(v).size() != expect)
            return "vertex " + std::to_string(sub.original[v]) + " of losing cycle " + to_string(k) +
                   " breaks d+=d-=d++=" + std::to_string(expect);
    }
    return std::nullopt;
}

}  // namespace detail

inline snp_certificate star_matching_witness(const digraph& d, const solver_options& opts = {}) {
    instance_facts facts(d);
    auto g = detail::require(facts, theorem_id::star_matching);
    auto cert = detail::start(g);
    std::optional<vertex> x;
    if (!facts.dec->stars.empty()) x = facts.dec->stars.front().center;

    orientation_plan f_plan = build_f(d, facts.ci, x);
    digraph dp = add_arcs(d, f_plan);
    cert.trace.push_back("F has " + std::to_string(f_plan.size()) + " arcs");
    for (const auto& [e, o] : f_plan) cert.trace.push_back("F: " + std::to_string(o.tail) + "->" + std::to_string(o.head));

    auto ci = index_components(dp);
    auto goodness = check_good(ci, dp);
    if (!goodness.good) throw goodness_violation("D + F is not a good digraph");
    {
        // D + F should keep exactly the non-path part of the dependency digraph
        std::set<std::pair<missing_edge, missing_edge>> expected, actual;
        for (const auto& a : facts.delta().arcs)
            if (!f_plan.contains(facts.delta().edges[a.from]))
                expected.insert({facts.delta().edges[a.from], facts.delta().edges[a.to]});
        for (const auto& a : ci.delta.arcs) actual.insert({ci.delta.edges[a.from], ci.delta.edges[a.to]});
        if (expected != actual) cert.findings.push_back("dependency digraph of D + F differs from the non-path part");
    }

    linear_order l = good_median_order(dp, exactness::exact, opts);
    const vertex feed = l.feed();
    const vertex_set j = ci.j[feed];
    cert.trace.push_back("good median order of D + F " + to_string(l) + ", feed " + std::to_string(feed) + ", J " +
                         to_string(j));
    vertex y = feed;
    if (j.size() == 1) {
        cert.trace.push_back("case: feed is whole in D + F");
    } else if (x && j.contains(*x)) {
        auto sub = induced(dp, j);
        std::vector<std::string> local_findings;
        auto plan = detail::anchored_plan(facts.delta(), *x, j, local_findings);
        orientation_plan local;
        for (const auto& [e, o] : plan) local.orient(sub.to_local(o.tail), sub.to_local(o.head), o.source);
        digraph t = complete(sub.graph, local);
        const vertex lx = sub.to_local(*x);
        linear_order lk = detail::solve(t, tiebreak::max_index(lx), opts);
        const vertex gl = lk.feed();
        y = sub.original[gl];
        cert.findings.insert(cert.findings.end(), local_findings.begin(), local_findings.end());
        cert.trace.push_back("interior of K(xi): median order of T[K(xi)] maximizing the index of " +
                             std::to_string(*x) + " is " + to_string(lk) + " (local ids), feed " + std::to_string(y));
        if (gl == lx) {
            cert.trace.push_back("case: g is the center");
        } else if (facts.dec->stars.front().leaves.contains(y)) {
            cert.trace.push_back("case: g is a leaf of the star");
        } else if (t.out(gl).intersects(sub.to_local(dp.vertices() - dp.out(y) - dp.in(y) - vertex_set::single(y)))) {
            cert.trace.push_back("case: g's matching edge is oriented out of g");
        } else {
            cert.trace.push_back("case: g's matching edge is oriented toward g");
            auto a = analyze(t, lk);
            if (a.good.contains(lx) && t.out(gl).size() == a.good.size())
                cert.findings.push_back("sed(L) would raise the index of the center: contradiction branch reached");
        }
    } else {
        cert.trace.push_back("case: J(feed) is a losing cycle; every vertex of it has the SNP in D[J]");
        if (auto finding = detail::regularity_finding(dp, j)) cert.findings.push_back(*finding);
    }

    bool tail = false, head = false;
    for (const auto& [e, o] : f_plan) {
        tail = tail || o.tail == y;
        head = head || o.head == y;
    }
    cert.trace.push_back(tail   ? "lift: witness is the tail of an F arc"
                         : head ? "lift: witness is the head of an F arc"
                                : "lift: witness is not on F");
    cert.witnesses = {y};
    return certify(d, std::move(cert));
}

inline snp_certificate matching_two_witnesses(const digraph& d, const solver_options& opts = {}) {
    instance_facts facts(d);
    auto g = detail::require(facts, theorem_id::matching_two);
    auto cert = detail::start(g);
    if (!check_good(facts.ci, d).good) throw goodness_violation("digraph missing a matching with F empty is not good");
    linear_order l = good_median_order(d, exactness::exact, opts);
    const vertex feed = l.feed();
    cert.trace.push_back("good median order " + to_string(l) + ", feed " + std::to_string(feed));
    if (facts.ci.j[feed].size() > 1) {
        cert.trace.push_back("case: J(feed) = " + to_string(facts.ci.j[feed]) + " is a losing cycle");
        if (auto finding = detail::regularity_finding(d, facts.ci.j[feed])) cert.findings.push_back(*finding);
        cert.witnesses = facts.ci.j[feed].to_vector();
    } else {
        cert.trace.push_back("case: feed is whole");
        auto second = sediment_second_witness(d, facts.ci.j, l, [](vertex f, vertex_set) { return f; });
        cert.trace.insert(cert.trace.end(), second.trace.begin(), second.trace.end());
        cert.witnesses = {feed, second.y};
    }
    return certify(d, std::move(cert));
}

inline snp_certificate single_star_witness(const digraph& d, const solver_options& opts = {}) {
    instance_facts facts(d);
    auto g = detail::require(facts, theorem_id::single_star);
    auto cert = detail::start(g);
    if (g.stars.empty()) {
        linear_order l = detail::solve(d, tiebreak::none(), opts);
        cert.trace.push_back("no missing edges; median order " + to_string(l) + ", feed " + std::to_string(l.feed()));
        cert.witnesses = {l.feed()};
        return certify(d, std::move(cert));
    }
    const star& s = g.stars.front();
    const vertex x = s.center;
    digraph t = complete(d, star_completion_plan(d, g.stars, false));
    linear_order l = detail::solve(t, tiebreak::max_index(x), opts);
    const vertex f = l.feed();
    cert.trace.push_back("completion toward " + std::to_string(x) + "; median order maximizing the index of " +
                         std::to_string(x) + ": " + to_string(l) + ", feed " + std::to_string(f));
    if (f == x) {
        cert.trace.push_back("case: feed is the center");
    } else {
        digraph tp = orient_toward(t, d, f);
        auto a = analyze(tp, l);
        cert.trace.push_back("case: feed is not the center; missing edges at the feed reoriented toward it");
        if (a.good.contains(x) && tp.out(f).size() == a.good.size())
            cert.findings.push_back("sed(L) would raise the index of the center: contradiction branch reached");
    }
    cert.witnesses = {f};
    return certify(d, std::move(cert));
}

inline snp_certificate two_stars_witness(const digraph& d, const solver_options& opts = {}) {
    instance_facts facts(d);
    auto g = detail::require(facts, theorem_id::two_stars);
    auto cert = detail::start(g);
    const star& sx = g.stars[0];
    const star& sy = g.stars[1];
    const vertex x = sx.center, y = sy.center;
    if (!detail::two_star_claim(d, g.stars)) cert.findings.push_back("y->a and b->x fail for some leaves");
    digraph t = complete(d, star_completion_plan(d, g.stars, true));
    linear_order l = detail::solve(t, tiebreak::max_index(x), opts);
    const vertex f = l.feed();
    cert.trace.push_back("x=" + std::to_string(x) + " y=" + std::to_string(y) + "; median order maximizing the index of x: " +
                         to_string(l) + ", feed " + std::to_string(f));
    if (is_whole(d, f)) {
        cert.trace.push_back("case: feed is whole");
    } else if (f == x) {
        cert.trace.push_back("case: feed is x");
    } else if (sy.leaves.contains(f)) {
        cert.trace.push_back("case: feed is a leaf of y");
    } else if (f == y) {
        cert.trace.push_back("case: feed is y");
        digraph tp = orient_toward(t, d, y);
        auto a = analyze(tp, l);
        if ((sy.leaves | vertex_set::single(x)).subset_of(a.good) && tp.out(y).size() == a.good.size())
            cert.findings.push_back("case y: Sed(L) contradiction branch reached");
    } else {
        cert.trace.push_back("case: feed is a leaf of x");
        digraph tp = t.has_arc(f, x) ? reverse_arc(t, f, x) : t;
        auto a = analyze(tp, l);
        if (tp.out(f).size() == a.good.size() && a.good.size() == second_neighborhood(tp, f).size())
            cert.findings.push_back("case a: Sed(L) contradiction branch reached");
    }
    cert.witnesses = {f};
    return certify(d, std::move(cert));
}

inline snp_certificate three_stars_witness(const digraph& d, const solver_options& opts = {}) {
    instance_facts facts(d);
    auto g = detail::require(facts, theorem_id::three_stars);
    auto cert = detail::start(g);
    cert.notes.push_back("the conclusion of this theorem is read as SNC");
    for (const auto& v : detail::three_star_shape_violations(facts.delta(), g.stars))
        cert.findings.push_back("dependency arc outside xa->yb, yb->zc, zc->xa: " + v);
    vertex_set centers = centers_of(g.stars);
    digraph t = complete(d, star_completion_plan(d, g.stars, true));
    linear_order l = detail::solve(t, tiebreak::max_index_sum(centers), opts);
    const vertex f = l.feed();
    cert.trace.push_back("centers " + std::to_string(g.stars[0].center) + "->" + std::to_string(g.stars[1].center) +
                         "->" + std::to_string(g.stars[2].center) + "; median order maximizing the center index sum: " +
                         to_string(l) + ", feed " + std::to_string(f));
    if (is_whole(d, f)) {
        cert.trace.push_back("case: feed is whole");
    } else if (centers.contains(f)) {
        cert.trace.push_back("case: feed is a center");
    } else {
        cert.trace.push_back("case: feed is a leaf");
        const star& s = star_of(g.stars, f);
        std::size_t i = static_cast<std::size_t>(&s - g.stars.data());
        const vertex next = g.stars[(i + 1) % 3].center;
        digraph tp = t.has_arc(f, s.center) ? reverse_arc(t, f, s.center) : t;
        auto a = analyze(tp, l);
        vertex_set second = second_neighborhood(tp, f);
        if (second.contains(next) && tp.out(f).size() == a.good.size() && a.good == second)
            cert.findings.push_back("leaf case: Sed(L) contradiction branch reached");
    }
    cert.witnesses = {f};
    return certify(d, std::move(cert));
}

namespace detail {

/// witnesses when the stars cover every vertex, by the structural claim
inline std::vector<vertex> covering_witnesses(const digraph& d, const std::vector<star>& stars, const solver_options& opts,
                                              std::vector<std::string>& trace, std::vector<std::string>& findings) {
    vertex_set centers = centers_of(stars);
    auto h = induced(d, d.vertices() - centers);
    std::vector<vertex> w;
    if (stars.size() == 2) {
        w.push_back(stars[0].center);
        linear_order l = solve(h.graph, tiebreak::none(), opts);
        w.push_back(h.original[l.feed()]);
        trace.push_back("K = V: x=" + std::to_string(stars[0].center) + " and the feed " + std::to_string(w.back()) +
                        " of H = D - {x,y}");
        return w;
    }
    if (!h.graph.sinks().empty()) findings.push_back("H = D - {x,y,z} has a sink");
    std::vector<std::string> sub_trace;
    for (vertex v : tournament_witnesses(h.graph, opts, sub_trace)) w.push_back(h.original[v]);
    for (const auto& s : sub_trace) trace.push_back("H: " + s);
    for (std::size_t i = 0; i < 3; ++i) {
        const star& pred = stars[(i + 2) % 3];
        if (stars[i].leaves.size() >= pred.leaves.size()) {
            w.push_back(stars[i].center);
            trace.push_back("K = V: center " + std::to_string(stars[i].center) + " has at least as many leaves as " +
                            std::to_string(pred.center));
            break;
        }
    }
    return w;
}

/// the center the claim certifies inside K
inline vertex claim_center(const std::vector<star>& stars) {
    if (stars.size() == 2) return stars[0].center;
    for (std::size_t i = 0; i < 3; ++i)
        if (stars[i].leaves.size() >= stars[(i + 2) % 3].leaves.size()) return stars[i].center;
    return stars[0].center;
}

inline snp_certificate star_two_witnesses(const digraph& d, theorem_id id, const solver_options& opts) {
    instance_facts facts(d);
    auto g = require(facts, id);
    auto cert = start(g);
    bool claim = g.stars.size() == 2 ? two_star_claim(d, g.stars) : three_star_claim(d, g.stars);
    cert.trace.push_back(std::string("leaf arc pattern: ") + (claim ? "holds" : "fails"));
    if (!claim) cert.findings.push_back("leaf arc pattern fails");
    if (id == theorem_id::three_stars_two) cert.notes.push_back("centers form a directed triangle");

    const vertex_set k = star_vertices(g.stars);
    if (k == d.vertices()) {
        cert.witnesses = covering_witnesses(d, g.stars, opts, cert.trace, cert.findings);
        return certify(d, std::move(cert));
    }
    if (!check_good(facts.ci, d).good) throw goodness_violation("K is not an interval of D");
    linear_order l = good_median_order(d, exactness::exact, opts);
    const vertex feed = l.feed();
    cert.trace.push_back("good median order " + to_string(l) + ", feed " + std::to_string(feed));
    if (facts.ci.j[feed].size() > 1) {
        auto sub = induced(d, facts.ci.j[feed]);
        std::vector<std::string> sub_trace;
        auto local = covering_witnesses(sub.graph, localize(sub, g.stars), opts, sub_trace, cert.findings);
        cert.trace.push_back("case: J(feed) = K");
        for (const auto& s : sub_trace) cert.trace.push_back("D[K]: " + s);
        cert.witnesses = lift(sub, local);
    } else {
        cert.trace.push_back("case: feed is whole");
        const vertex c = claim_center(g.stars);
        auto second = sediment_second_witness(d, facts.ci.j, l,
                                              [&](vertex f, vertex_set block) { return block.size() > 1 ? c : f; });
        cert.trace.insert(cert.trace.end(), second.trace.begin(), second.trace.end());
        cert.witnesses = {feed, second.y};
    }
    return certify(d, std::move(cert));
}

}  // namespace detail

inline snp_certificate two_stars_two_witnesses(const digraph& d, const solver_options& opts = {}) {
    return detail::star_two_witnesses(d, theorem_id::two_stars_two, opts);
}

inline snp_certificate three_stars_two_witnesses(const digraph& d, const solver_options& opts = {}) {
    return detail::star_two_witnesses(d, theorem_id::three_stars_two, opts);
}

/// Runs the witness procedure of theorem `t` on D.
inline snp_certificate prove(theorem_id t, const digraph& d, const solver_options& opts = {}) {
    switch (t) {
        case theorem_id::tournament:
        case theorem_id::tournament_two: {
            instance_facts f(d);
            detail::require(f, t);
            return havet_thomasse_witnesses(d, opts);
        }
        case theorem_id::kings_stars:
            return kings_stars_witness(d, opts);
        case theorem_id::star_matching:
            return star_matching_witness(d, opts);
        case theorem_id::matching_two:
            return matching_two_witnesses(d, opts);
        case theorem_id::single_star:
            return single_star_witness(d, opts);
        case theorem_id::two_stars:
            return two_stars_witness(d, opts);
        case theorem_id::two_stars_two:
            return two_stars_two_witnesses(d, opts);
        case theorem_id::three_stars:
            return three_stars_witness(d, opts);
        case theorem_id::three_stars_two:
            return three_stars_two_witnesses(d, opts);
    }
    throw invalid_argument("unknown theorem");
}

}  // namespace snc

#endif
