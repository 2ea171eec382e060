"""Independent brute-force oracle. Regenerates tests/frozen_values.hpp.

Every value is computed from the definitions directly (adjacency sets,
all permutations, all role assignments), sharing no code with the library.
"""
import itertools
import random
from fractions import Fraction
from pathlib import Path


def out_sets(n, arcs):
    out = [set() for _ in range(n)]
    for u, v in arcs:
        out[u].add(v)
    return out


def second(out, v):
    s = set()
    for u in out[v]:
        s |= out[u]
    return s - out[v] - {v}


def snp_mask(n, arcs):
    out = out_sets(n, arcs)
    return sum(1 << v for v in range(n) if len(out[v]) <= len(second(out, v)))


def best_order_value(n, arcs, w):
    best = None
    for perm in itertools.permutations(range(n)):
        pos = {v: i for i, v in enumerate(perm)}
        val = sum((w[u] * w[v] for u, v in arcs if pos[u] < pos[v]), Fraction(0))
        if best is None or val > best:
            best = val
    return best


def feedback_ok(n, arcs, order, w):
    arcset = set(arcs)
    for i in range(n):
        for j in range(i, n):
            seg = order[i:j + 1]
            vi, vj = order[i], order[j]
            if sum(w[x] for x in seg if (vi, x) in arcset) < sum(w[x] for x in seg if (x, vi) in arcset):
                return False
            if sum(w[x] for x in seg if (x, vj) in arcset) < sum(w[x] for x in seg if (vj, x) in arcset):
                return False
    return True


def good_bad(n, arcs, order):
    out = out_sets(n, arcs)
    f = order[-1]
    good = bad = 0
    for j, vj in enumerate(order[:-1]):
        if vj in out[f]:
            continue
        if any(order[i] in out[f] and vj in out[order[i]] for i in range(j + 1)):
            good |= 1 << vj
        else:
            bad |= 1 << vj
    return good, bad


def missing(n, arcs):
    adj = {frozenset(a) for a in arcs}
    return [(u, v) for u in range(n) for v in range(u + 1, n) if frozenset((u, v)) not in adj]


def reach(out, v):
    return out[v] | second(out, v)


def loses(out, e1, e2):
    for x1, y1 in (e1, e1[::-1]):
        for x2, y2 in (e2, e2[::-1]):
            if x2 in out[x1] and y2 not in reach(out, x1) and y2 in out[y1] and x2 not in reach(out, y1):
                return True
    return False


def convenient(n, out, e):
    a, b = e
    result = []
    for s, t in ((a, b), (b, a)):
        if all(t in reach(out, v) for v in range(n) if v not in (s, t) and s in out[v]):
            result.append((s, t))
    return result


def is_interval(n, out, k):
    inn = [set() for _ in range(n)]
    for u in range(n):
        for v in out[u]:
            inn[v].add(u)
    k = set(k)
    ref = next(iter(k))
    return all(out[v] - k == out[ref] - k and inn[v] - k == inn[ref] - k for v in k)


def good_digraph(n, arcs):
    out = out_sets(n, arcs)
    edges = missing(n, arcs)
    parent = list(range(len(edges)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for i, e in enumerate(edges):
        for j, f in enumerate(edges):
            if i != j and loses(out, e, f):
                parent[find(i)] = find(j)
    comps = {}
    for i, e in enumerate(edges):
        comps.setdefault(find(i), set()).update(e)
    ks = list(comps.values())
    merged = True
    while merged:
        merged = False
        for i in range(len(ks)):
            for j in range(i + 1, len(ks)):
                if ks[i] & ks[j]:
                    ks[i] |= ks.pop(j)
                    merged = True
                    break
            if merged:
                break
    return all(is_interval(n, out, k) for k in ks)


def random_digraph(rng, n, density):
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return arcs


def star_deleted(rng, n, shape):
    arcs = random_digraph(rng, n, 1.0)
    perm = list(range(n))
    rng.shuffle(perm)
    gone = set()
    i = 0
    for leaves in shape:
        c = perm[i]
        i += 1
        for _ in range(leaves):
            gone.add(frozenset((c, perm[i])))
            i += 1
    return [a for a in arcs if frozenset(a) not in gone]


def cpp_arcs(arcs):
    return "{" + ",".join("{%d,%d}" % a for a in sorted(arcs)) + "}"


def main():
    rng = random.Random(20240607)
    lines = [
        "// Generated by tests/oracle/derive.py from brute-force definitions. Do not edit.",
        "#pragma once",
        "#include <cstdint>",
        "#include <utility>",
        "#include <vector>",
        "",
        "namespace frozen {",
        "",
        "using arc_list = std::vector<std::pair<unsigned, unsigned>>;",
        "",
        "struct digraph_case {",
        "    unsigned n;",
        "    arc_list arcs;",
        "    std::uint64_t snp_set;",
        "    long optimum;              // unit weights",
        "    bool identity_feedback;    // identity order",
        "    std::uint64_t identity_good, identity_bad;",
        "};",
        "",
        "inline const std::vector<digraph_case> digraph_cases = {",
    ]
    for _ in range(60):
        n = rng.randint(3, 7)
        arcs = random_digraph(rng, n, rng.choice([0.3, 0.6, 0.9, 1.0]))
        one = [Fraction(1)] * n
        opt = best_order_value(n, arcs, one)
        order = list(range(n))
        g, b = good_bad(n, arcs, order)
        lines.append("    {%d, %s, %dULL, %d, %s, %dULL, %dULL}," % (
            n, cpp_arcs(arcs), snp_mask(n, arcs), opt, "true" if feedback_ok(n, arcs, order, one) else "false", g, b))
    lines += ["};", "",
              "struct weighted_case {",
              "    unsigned n;",
              "    arc_list arcs;",
              "    std::vector<std::pair<long, long>> weights;",
              "    std::pair<long, long> optimum;  // arc (u,v) weighs w(u) w(v)",
              "};", "",
              "inline const std::vector<weighted_case> weighted_cases = {"]
    choices = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3, 2), Fraction(3), Fraction(5, 3)]
    for _ in range(30):
        n = rng.randint(3, 6)
        arcs = random_digraph(rng, n, rng.choice([0.6, 1.0]))
        w = [rng.choice(choices) for _ in range(n)]
        opt = best_order_value(n, arcs, w)
        ws = "{" + ",".join("{%d,%d}" % (x.numerator, x.denominator) for x in w) + "}"
        lines.append("    {%d, %s, %s, {%d, %d}}," % (n, cpp_arcs(arcs), ws, opt.numerator, opt.denominator))
    lines += ["};", "",
              "struct star_case {",
              "    unsigned n;",
              "    arc_list arcs;",
              "    std::vector<std::pair<arc_list::value_type, arc_list::value_type>> losing;  // e1 loses to e2",
              "    arc_list convenient;",
              "    bool good_digraph;",
              "};", "",
              "inline const std::vector<star_case> star_cases = {"]
    for _ in range(60):
        n = rng.randint(5, 9)
        shape = []
        room = n
        for _ in range(rng.randint(1, 3)):
            if room < 2:
                break
            leaves = rng.randint(1, min(3, room - 1))
            shape.append(leaves)
            room -= leaves + 1
        arcs = star_deleted(rng, n, shape)
        out = out_sets(n, arcs)
        edges = missing(n, arcs)
        losing = [(e, f) for e in edges for f in edges if e != f and loses(out, e, f)]
        conv = [o for e in edges for o in convenient(n, out, e)]
        los = "{" + ",".join("{{%d,%d},{%d,%d}}" % (e + f) for e, f in losing) + "}"
        lines.append("    {%d, %s, %s, %s, %s}," % (n, cpp_arcs(arcs), los, cpp_arcs(conv),
                                                  "true" if good_digraph(n, arcs) else "false"))
    lines += ["};", "", "}  // namespace frozen", ""]
    Path(__file__).resolve().parent.parent.joinpath("frozen_values.hpp").write_text("\n".join(lines))


if __name__ == "__main__":
    main()
