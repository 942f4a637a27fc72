"""Exit criteria. Every check is exact; each test records one summary line."""
import random

from superdom.formulas import (
    gamma_sp_formula,
    glue_bounds,
    hajos_bounds,
    ncorona_hypotheses,
    ncorona_value,
    necklace_count,
    nsp_formula,
)
from superdom.generators import clique_with_leaves, complete, cycle, generate, paw, path
from superdom.graph import classify_cycle, disjoint_union, is_super_dominating
from superdom.products import GlueSpec, HajosSpec, chain, hajos_sum, neighbourhood_corona, r_glue
from superdom.solver import (
    count_min_super_dom,
    domination_number,
    enumerate_min_super_dom,
    partition_decomposition,
    super_domination_number,
)

from oracles import (
    brute_necklaces,
    cliques_of_size,
    naive_gamma_sp,
    random_connected,
    random_graph,
    random_isolate_free,
)

CLASS_RANGES = [
    ("path", [(n,) for n in range(1, 15)]),
    ("cycle", [(n,) for n in range(3, 15)]),
    ("complete", [(n,) for n in range(2, 10)]),
    ("complete_bipartite", [(n, m) for n in range(2, 6) for m in range(2, 6)]),
    ("star", [(n,) for n in range(1, 9)]),
    ("friendship", [(n,) for n in range(1, 5)]),
]


def gsp(g):
    return super_domination_number(g).value


def test_criterion_01_gamma_sp_formulas(record):
    mismatches = []
    for kind, params_list in CLASS_RANGES:
        for params in params_list:
            exact = gsp(generate(kind, *params))
            formula = gamma_sp_formula(kind, *params)
            if exact != formula:
                mismatches.append(f"{kind}{params}: formula={formula} exact={exact}")
    record(1, not mismatches, "; ".join(mismatches))
    assert not mismatches


def test_criterion_02_nsp_formulas(record):
    mismatches = []
    for kind, params_list in CLASS_RANGES:
        for params in params_list:
            exact = count_min_super_dom(generate(kind, *params))
            formula = nsp_formula(kind, *params)
            if exact != formula:
                mismatches.append(f"{kind}{params}: formula={formula} exact={exact}")
    pinned = [
        (cycle(6), 15), (cycle(10), 50), (cycle(12), 4), (cycle(9), 18), (cycle(11), 11),
        (path(7), 9), (path(8), 2), (generate("friendship", 3), 8),
        (generate("complete_bipartite", 3, 3), 9), (path(1), 1),
    ]
    for g, expected in pinned:
        got = count_min_super_dom(g)
        if got != expected:
            mismatches.append(f"pinned {g!r}: expected {expected} got {got}")
    record(2, not mismatches, "; ".join(mismatches))
    assert not mismatches


def test_criterion_03_neighbourhood_corona(record):
    problems = []
    for g, h, expected in [
        (path(2), complete(2), 4),
        (path(3), complete(2), 6),
        (cycle(3), complete(2), 6),
        (cycle(4), complete(3), 12),
    ]:
        product = neighbourhood_corona(g, h)
        value = gsp(product)
        scan = naive_gamma_sp(product)
        formula = ncorona_value(g.n, naive_gamma_sp(h))
        if not (ncorona_hypotheses(g, h) and scan == value == formula == expected):
            problems.append(f"{g.n}x{h.n}: scan={scan} value={value} formula={formula}")
    counter = neighbourhood_corona(path(3), paw())
    value = gsp(counter)
    if ncorona_hypotheses(path(3), paw()) or value != 11 or ncorona_value(3, gsp(paw())) != 12:
        problems.append(f"P3 * paw: value={value}")
    if naive_gamma_sp(counter) != 11:
        problems.append("naive scan disagrees on P3 * paw")
    record(3, not problems, "; ".join(problems))
    assert not problems


def test_criterion_04_gluing_tightness(record):
    problems = []
    for r in range(2, 6):
        clique = tuple(range(r))
        shifted = clique[1:] + clique[:1]
        single = clique_with_leaves(r, [1] + [0] * (r - 1))
        glued = r_glue(single, single, GlueSpec(clique, shifted))
        bounds = glue_bounds(gsp(single), gsp(single), r)
        value = gsp(glued)
        if not (gsp(single) == r and value == r == bounds.lo):
            problems.append(f"single leaf r={r}: value={value} bounds=[{bounds.lo},{bounds.hi}]")

        double = clique_with_leaves(r, 2)
        glued = r_glue(double, double, GlueSpec(clique, clique))
        bounds = glue_bounds(gsp(double), gsp(double), r)
        value = gsp(glued)
        if not (gsp(double) == 2 * r and value == 4 * r == bounds.hi):
            problems.append(f"two leaves r={r}: value={value} bounds=[{bounds.lo},{bounds.hi}]")
    record(4, not problems, "; ".join(problems))
    assert not problems


def test_criterion_05_hajos(record):
    problems = []
    for e1 in cycle(6).edges():
        for e2 in cycle(3).edges():
            g = hajos_sum(cycle(6), cycle(3), HajosSpec(*e1, *e2))
            if classify_cycle(g) != 8 or gsp(g) != 4 or hajos_bounds(4, 2).lo != 4:
                problems.append(f"C6+C3 on {e1},{e2}")
    for e1 in cycle(4).edges():
        for e2 in cycle(3).edges():
            g = hajos_sum(cycle(4), cycle(3), HajosSpec(*e1, *e2))
            if classify_cycle(g) != 6 or gsp(g) != 4 or hajos_bounds(2, 2).hi != 4:
                problems.append(f"C4+C3 on {e1},{e2}")

    rng = random.Random(505)
    for _ in range(220):
        g1, g2 = random_connected(rng, 2, 8), random_connected(rng, 2, 8)
        x1, y1 = rng.choice(g1.edges())
        x2, y2 = rng.choice(g2.edges())
        if rng.random() < 0.5:
            x1, y1 = y1, x1
        if rng.random() < 0.5:
            x2, y2 = y2, x2
        value = gsp(hajos_sum(g1, g2, HajosSpec(x1, y1, x2, y2)))
        if value not in hajos_bounds(gsp(g1), gsp(g2)):
            problems.append(f"random pair {g1!r} {g2!r}: {value}")
    record(5, not problems, "; ".join(problems[:3]))
    assert not problems


def test_criterion_06_gluing_containment(record):
    problems = []
    rng = random.Random(606)
    done = 0
    while done < 220:
        r = done % 4
        g1, g2 = random_graph(rng, rng.randint(max(r, 1), 7)), random_graph(rng, rng.randint(max(r, 1), 7))
        c1, c2 = cliques_of_size(g1, r), cliques_of_size(g2, r)
        if not c1 or not c2:
            continue
        right = list(rng.choice(c2))
        rng.shuffle(right)
        spec = GlueSpec(rng.choice(c1), right)
        value = gsp(r_glue(g1, g2, spec))
        if value not in glue_bounds(gsp(g1), gsp(g2), r):
            problems.append(f"r={r} {g1!r} {g2!r}: {value}")
        done += 1
    record(6, not problems, "; ".join(problems[:3]))
    assert not problems


def test_criterion_07_exchange_decomposition(record):
    problems = []
    rng = random.Random(707)
    half_cases = 0
    for _ in range(520):
        g = random_isolate_free(rng, 2, 9)
        full = g.all_mask
        for s in enumerate_min_super_dom(g):
            dec = partition_decomposition(g, s)
            issues = dec.check(g)
            if not is_super_dominating(g, dec.s_prime)[0] or len(dec.s_prime) != len(s):
                issues.append("S' is not a super dominating set of the same size")
            if 2 * len(s) == g.n:
                half_cases += 1
                s_bar = full & ~s.bits
                if dec.s_prime.bits != s_bar:
                    issues.append("S' != complement of S")
                # every vertex of S super dominates exactly one vertex and vice versa
                for a in s:
                    hits = [b for b in range(g.n) if s_bar >> b & 1 and g.adj[a] & s_bar == 1 << b]
                    if len(hits) != 1:
                        issues.append(f"{a} super dominates {len(hits)} vertices")
                for b in range(g.n):
                    if s_bar >> b & 1:
                        doms = [a for a in s if g.adj[a] & s_bar == 1 << b]
                        if len(doms) != 1:
                            issues.append(f"{b} has {len(doms)} super dominators")
            if issues:
                problems.append(f"{g!r} S={s.to_list()}: {issues}")
    record(7, not problems and half_cases > 0, "; ".join([f"{half_cases} sets with |S| = n/2"] + problems[:2]))
    assert not problems
    assert half_cases > 0


def test_criterion_08_general_bounds(record):
    problems = []
    rng = random.Random(808)
    for _ in range(520):
        g = random_isolate_free(rng, 2, 10)
        gamma, value = domination_number(g).value, gsp(g)
        if not (1 <= gamma <= g.n // 2 and -(-g.n // 2) <= value <= g.n - 1):
            problems.append(f"thm1 {g!r}: gamma={gamma} gamma_sp={value}")
    for _ in range(220):
        g1, g2 = random_graph(rng, rng.randint(1, 6)), random_graph(rng, rng.randint(1, 6))
        whole = super_domination_number(disjoint_union(g1, g2), decompose=False).value
        if whole != gsp(g1) + gsp(g2):
            problems.append(f"union {g1!r} {g2!r}: {whole}")
    for _ in range(220):
        g1, g2 = random_connected(rng, 2, 7), random_connected(rng, 2, 7)
        a1 = tuple(rng.sample(range(g1.n), 2))
        a2 = tuple(rng.sample(range(g2.n), 2))
        value = gsp(chain([g1, g2], [a1, a2]))
        total = gsp(g1) + gsp(g2)
        if not total - 1 <= value <= total:
            problems.append(f"chain {g1!r} {g2!r}: {value}")
    record(8, not problems, "; ".join(problems[:3]))
    assert not problems


def _contents(n):
    """All positive compositions of n."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _contents(n - first):
            yield (first,) + rest


def test_criterion_09_necklaces(record):
    problems = []
    for k in range(1, 13):
        if necklace_count((k, 1)) != 1:
            problems.append(f"N_{k + 1}({k},1)")
    for k in range(1, 11):
        if necklace_count((2 * k, 2)) != k + 1:
            problems.append(f"N_{2 * k + 2}({2 * k},2)")
    for k in range(0, 11):
        if necklace_count((2 * k + 1, 2)) != k + 1:
            problems.append(f"N_{2 * k + 3}({2 * k + 1},2)")
    checked = 0
    brute = {}
    for n in range(1, 11):
        for q in _contents(n):
            checked += 1
            # the orbit count does not depend on the order of the colours
            key = tuple(sorted(q))
            if key not in brute:
                brute[key] = brute_necklaces(key)
            if necklace_count(q) != brute[key]:
                problems.append(f"burnside vs brute force on {q}")
    record(9, not problems, "; ".join([f"{checked} bead contents"] + problems[:3]))
    assert not problems


def test_criterion_10_oracle_and_parallel(record):
    problems = []
    rng = random.Random(1010)
    for _ in range(520):
        g = random_graph(rng, rng.randint(1, 9))
        if gsp(g) != naive_gamma_sp(g):
            problems.append(f"oracle mismatch on {g!r}")
    graphs = [cycle(12)] + [random_graph(rng, 14) for _ in range(3)]
    for g in graphs:
        sequential = count_min_super_dom(g)
        for threads in (1, 2, 4, 8):
            got = count_min_super_dom(g, workers=threads)
            if got != sequential:
                problems.append(f"threads={threads} gave {got}, sequential {sequential}")
    if count_min_super_dom(cycle(12), workers=4) != 4:
        problems.append("C12 count")
    record(10, not problems, "; ".join(problems[:3]))
    assert not problems
