"""Acceptance suite.

Every check prints one ``[PASS]``/``[FAIL]`` line to the terminal (even without
``-s``) and then asserts. Run on its own with::

    pytest tests/test_acceptance.py -v
    python tests/test_acceptance.py
"""

import itertools
import math
import random
import statistics
import sys
import time
from fractions import Fraction
from math import comb

import networkx as nx
import pytest

from cubedraw.antimagic import greedy_degen_label, mag_lower_bound, path_power_label, queue_label, verify_antimagic
from cubedraw.graph import Graph, all_graphs, degeneracy_ordering, find_one_queue_layout, generate, random_bounded_degree
from cubedraw.hypercube import (
    crossing_probability_exact,
    edges_cross,
    from_antimagic,
    lll_dimension,
    lll_draw,
    to_antimagic,
    verify_drawing,
    vol_lower_bound,
)
from cubedraw.oracle import exact_mag, exact_vol, max_drawing_edges_exhaustive, segment_cross_exact
from cubedraw.sidon import erdos_turan_sidon, is_prime, is_sidon, singer_sidon

PRIMES_31 = [p for p in range(2, 32) if is_prime(p)]


@pytest.fixture
def report(capsys):
    def emit(tag, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {tag}: {detail}")
        assert ok, detail

    return emit


def brute_mag(g):
    k = g.n
    while True:
        for labels in itertools.permutations(range(1, k + 1), g.n):
            sums = [labels[u] + labels[v] for u, v in g.edges]
            if len(set(sums)) == len(sums):
                return k
        k += 1


def brute_vol(g):
    d = 0
    while True:
        pts = list(itertools.product((0, 1), repeat=d))
        for placement in itertools.permutations(pts, g.n):
            sums = [tuple(map(sum, zip(placement[u], placement[v]))) for u, v in g.edges]
            if len(set(sums)) == len(sums):
                return 2**d
        d += 1


def test_ac01_crossing_predicate_exhaustive(report):
    start = time.perf_counter()
    compared = mismatches = 0
    for d in range(1, 5):
        pts = list(itertools.product((0, 1), repeat=d))
        for a, b, c, e in itertools.permutations(pts, 4):
            compared += 1
            if edges_cross(a, b, c, e) != segment_cross_exact(a, b, c, e):
                mismatches += 1
    elapsed = time.perf_counter() - start
    report(
        "AC1 crossing predicate vs exact segments, d=1..4",
        mismatches == 0 and elapsed < 120,
        f"{compared} ordered segment pairs, {mismatches} mismatches, {elapsed:.1f}s",
    )


def test_ac02_extremal_edge_counts(report):
    got = [max_drawing_edges_exhaustive(d) for d in (1, 2, 3)]
    want = [3**d - 2**d for d in (1, 2, 3)]
    report("AC2 max edges of a d-cube drawing", got == want == [1, 5, 19], f"got {got}, want {want}")


def test_ac03_greedy_bound(report):
    checked = violations = 0

    def check(g):
        nonlocal checked, violations
        f = greedy_degen_label(g)
        d = degeneracy_ordering(g).degeneracy
        checked += 1
        if not (verify_antimagic(g, f) and f.max_label <= g.n + d * g.m):
            violations += 1

    for g in all_graphs(5):
        check(g)
    labelled = checked
    rng = random.Random(7)
    for seed in range(200):
        n = rng.randint(1, 60)
        check(random_bounded_degree(n, rng.randint(0, 3 * n), rng.randint(1, 12), seed))
    report(
        "AC3 greedy labelling within n + d*m",
        labelled == 1024 and violations == 0,
        f"{labelled} labelled 5-vertex graphs + {checked - labelled} random graphs, {violations} violations",
    )


def test_ac04_path_power_bound(report):
    checked = violations = 0
    for p in (2, 3, 5, 7):
        for n in range(p + 1, 41):
            f = path_power_label(n, p)
            checked += 1
            if not (verify_antimagic(generate("path_power", n, p), f) and f.max_label <= p * (2 * n - 1)):
                violations += 1
    report("AC4 path-power labelling within p(2n-1)", violations == 0, f"{checked} instances, {violations} violations")


def test_ac05_sidon_constructions(report):
    bad = []
    for q in PRIMES_31:
        s = singer_sidon(q)
        big_n = q * q + q + 1
        if not (is_sidon(s.elements) and len(s) == q + 1 and 1 <= min(s.elements) and max(s.elements) <= big_n):
            bad.append(("singer", q))
        e = erdos_turan_sidon(q)
        if not (is_sidon(e.elements) and len(e) == q):
            bad.append(("erdos-turan", q))
    report("AC5 Singer and Erdos-Turan Sidon sets, primes <= 31", not bad, f"{2 * len(PRIMES_31)} sets, failures {bad}")


def test_ac06_conversion_chain(report):
    graphs = violations = 0
    for n in range(1, 6):
        for g in all_graphs(n):
            graphs += 1
            mres, vres = exact_mag(g), exact_vol(g)
            mag, vol = mres.value, vres.value
            d = vol.bit_length() - 1
            ok = vol <= 2 ** math.ceil(math.log2(mag)) and mag <= 3**d
            dr = from_antimagic(mres.witness, g)
            ok = ok and verify_drawing(g, dr) and verify_antimagic(g, to_antimagic(dr, g))
            ok = ok and verify_antimagic(g, to_antimagic(vres.witness, g))
            violations += not ok
    report("AC6 labelling <-> drawing conversions", violations == 0, f"{graphs} labelled graphs on <= 5 vertices, {violations} violations")


def test_ac07_lower_bounds(report):
    below = 0
    for n in range(1, 6):
        for g in all_graphs(n):
            if exact_mag(g).value < mag_lower_bound(g) or exact_vol(g).value < vol_lower_bound(g.n, g.m):
                below += 1
    k3, k4 = generate("complete", 3), generate("complete", 4)
    spots = (exact_mag(k3).value, exact_vol(k3).value, exact_vol(k4).value)
    brute = (brute_mag(k3), brute_vol(k3), brute_vol(k4))
    report(
        "AC7 lower bounds and spot values",
        below == 0 and spots == brute == (3, 4, 8),
        f"{below} graphs below a bound; MAG(K3), VOL(K3), VOL(K4) = {spots}, brute force {brute}",
    )


def test_ac08_crossing_probability(report):
    fails = []
    for d in range(6):
        res = crossing_probability_exact(d)
        strata_ok = all(res.strata[k] == comb(d, k) * 2 ** (d - k) * 4**k for k in range(d + 1))
        if res.probability != Fraction(3, 8) ** d or not strata_ok:
            fails.append(d)
    dim = lll_dimension(10, 15, 3)
    hand = math.ceil(max(math.log2(math.e * 41), math.log(math.e**2 * 181, 8 / 3)))
    report(
        "AC8 crossing probability (3/8)^d and dimension formula",
        not fails and dim == hand == 8,
        f"d=0..5 failing {fails}; lll_dimension(10,15,3)={dim}, by hand {hand}",
    )


def test_ac09_lll_drawing(report):
    rng = random.Random(20240)
    times, no_escalation, valid = [], 0, 0
    for i in range(50):
        n = rng.randint(8, 256)
        delta = rng.randint(2, 8)
        g = random_bounded_degree(n, rng.randint(n // 2, n * delta // 2), delta, seed=i)
        start = time.perf_counter()
        dr = lll_draw(g, seed=i)
        times.append(time.perf_counter() - start)
        no_escalation += dr.d == lll_dimension(g.n, g.m, g.max_degree) and dr.meta["escalations"] == 0
        valid += verify_drawing(g, dr)
    med = statistics.median(times)
    report(
        "AC9 resampling drawing on 50 random graphs",
        no_escalation >= 45 and valid == 50 and med < 1.0,
        f"{no_escalation}/50 at target dimension, {valid}/50 valid, median {med * 1000:.2f} ms",
    )


def atlas_graphs():
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= 7:
            yield Graph(h.number_of_nodes(), frozenset((min(u, v), max(u, v)) for u, v in h.edges()))


def test_ac10_queue_labelling(report):
    graphs = layouts = violations = 0
    for g in atlas_graphs():
        graphs += 1
        sigma = find_one_queue_layout(g)
        if sigma is None:
            continue
        layouts += 1
        f = queue_label(g, sigma)
        violations += not (f.k == g.n and verify_antimagic(g, f))
    report(
        "AC10 queue labelling with k = n",
        graphs == 1252 and violations == 0,
        f"{graphs} graphs up to isomorphism on 1..7 vertices, {layouts} with a 1-queue layout, {violations} violations",
    )


def test_ac11_complete_graph_table(report):
    rows, ok = [], True
    for n in range(1, 7):
        g = generate("complete", n)
        mag, vol = exact_mag(g), exact_vol(g)
        lb_mag, lb_vol = mag_lower_bound(g), vol_lower_bound(g.n, g.m)
        ok = ok and mag.resolved and vol.resolved and mag.value >= lb_mag and vol.value >= lb_vol
        rows.append(f"n={n} MAG={mag.value} (>= {lb_mag}) VOL={vol.value} (>= {lb_vol})")
    report("AC11 complete graphs n <= 6 against lower bounds", ok, "; ".join(rows))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
