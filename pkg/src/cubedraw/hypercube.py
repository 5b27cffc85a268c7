"""Hypercube drawings: vertices on distinct points of {0,1}^d, no two edges crossing.

Two edges with 0/1 endpoints cross exactly when their endpoint sums agree
coordinatewise (the segments then share a midpoint), so every check here is
a sum comparison. Points are tuples of bits, most significant first.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterable, Optional, Sequence

from cubedraw.antimagic import Labelling, LabellingError, find_sum_collision
from cubedraw.graph import Edge, Graph

BitPoint = tuple[int, ...]


class DrawingError(ValueError):
    pass


def point_to_int(p: BitPoint) -> int:
    return int("".join(map(str, p)), 2) if p else 0


def int_to_point(x: int, d: int) -> BitPoint:
    return tuple((x >> (d - 1 - i)) & 1 for i in range(d))


def point_sum(p: BitPoint, q: BitPoint) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(p, q))


@dataclass(frozen=True)
class HypercubeDrawing:
    d: int
    points: tuple[BitPoint, ...]
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        for v, p in enumerate(self.points):
            if len(p) != self.d or any(b not in (0, 1) for b in p):
                raise DrawingError(f"vertex {v} has point {p}, expected {self.d} bits")

    @property
    def volume(self) -> int:
        return 2**self.d

    def __len__(self) -> int:
        return len(self.points)


def edges_cross(pv: BitPoint, pw: BitPoint, px: BitPoint, py: BitPoint) -> bool:
    """Whether open segments ``pv pw`` and ``px py`` cross: same coordinatewise sum."""
    if not len(pv) == len(pw) == len(px) == len(py):
        raise DrawingError("points have different dimensions")
    if pv == pw or px == py:
        raise DrawingError("zero-length segment")
    if {pv, pw} == {px, py}:
        raise DrawingError("the two segments are the same edge")
    return point_sum(pv, pw) == point_sum(px, py)


def find_crossing(g: Graph, drawing: HypercubeDrawing) -> Optional[tuple[Edge, Edge, tuple[int, ...]]]:
    if len(drawing) != g.n:
        raise DrawingError(f"drawing places {len(drawing)} vertices, graph has {g.n}")
    seen: dict[tuple[int, ...], Edge] = {}
    for e in g.edge_list:
        s = point_sum(drawing.points[e[0]], drawing.points[e[1]])
        if s in seen:
            return seen[s], e, s
        seen[s] = e
    return None


def find_coincidence(drawing: HypercubeDrawing) -> Optional[tuple[int, int]]:
    first: dict[BitPoint, int] = {}
    for v, p in enumerate(drawing.points):
        if p in first:
            return first[p], v
        first[p] = v
    return None


def verify_drawing(g: Graph, drawing: HypercubeDrawing) -> bool:
    """Injective placement and pairwise distinct edge sums."""
    if len(drawing) != g.n:
        raise DrawingError(f"drawing places {len(drawing)} vertices, graph has {g.n}")
    return find_coincidence(drawing) is None and find_crossing(g, drawing) is None


def is_kn_point_set(points: Iterable[BitPoint]) -> bool:
    """Vertex set of a drawing of K_n: all sums v_i + v_j with i <= j distinct.

    Unlike :func:`verify_drawing` on K_n this also rules out a point sitting
    at the midpoint of another pair.
    """
    seen = set()
    for p, q in combinations_with_replacement(list(points), 2):
        s = point_sum(p, q)
        if s in seen:
            return False
        seen.add(s)
    return True


def antimagic_dimension(k: int) -> int:
    """ceil(log2 k), clamped to at least one bit."""
    return max(1, (k - 1).bit_length())


def from_antimagic(f: Labelling, g: Optional[Graph] = None) -> HypercubeDrawing:
    """Write each label in binary with ``ceil(log2 k)`` bits.

    When ``k`` is a power of two the label ``k`` itself does not fit, and all
    labels are written minus one instead (a uniform shift keeps sums distinct).
    """
    if g is not None:
        clash = find_sum_collision(g, f)
        if clash is not None:
            raise DrawingError(f"labelling is not antimagic: edges {clash[0]} and {clash[1]} both sum to {clash[2]}")
    d = antimagic_dimension(f.k)
    shift = 1 if f.max_label >= 2**d else 0
    return HypercubeDrawing(d, tuple(int_to_point(x - shift, d) for x in f.labels), {"shift": shift})


def to_antimagic(drawing: HypercubeDrawing, g: Optional[Graph] = None) -> Labelling:
    """Read each point as a base-3 numeral and add one; labels land in ``[3^d]``."""
    if g is not None and not verify_drawing(g, drawing):
        raise DrawingError("not a valid hypercube drawing of the graph")
    labels = tuple(int("".join(map(str, p)) or "0", 3) + 1 for p in drawing.points)
    return Labelling(labels, 3**drawing.d)


def max_edges(d: int) -> int:
    return 3**d - 2**d


def vol_lower_dimension(n: int, m: int) -> int:
    d = 0
    while 3**d < n + m or 2**d < n:
        d += 1
    return d


def vol_lower_bound(n: int, m: int) -> int:
    """Least ``2^d`` with ``n + m <= 3^d`` and ``n <= 2^d``."""
    return 2 ** vol_lower_dimension(n, m)


# --- local lemma drawing ----------------------------------------------------

@dataclass(frozen=True)
class LLLParameters:
    n: int
    m: int
    max_degree: int
    d: int
    inv_x_a: int  # 1/x_A = 4n + 1
    inv_x_b: int  # 1/x_B = 4*Delta*m + 1

    @classmethod
    def of(cls, n: int, m: int, max_degree: int) -> LLLParameters:
        return cls(n, m, max_degree, lll_dimension(n, m, max_degree), 4 * n + 1, 4 * max_degree * m + 1)


def lll_dimension(n: int, m: int, max_degree: int) -> int:
    """ceil(max(log2(e(4n+1)), log_{8/3}(e^2 (4 Delta m + 1))))."""
    if n < 1:
        raise DrawingError(f"need at least one vertex, got n={n}")
    a = math.log2(math.e * (4 * n + 1))
    b = (2 + math.log(4 * max_degree * m + 1)) / math.log(8 / 3)
    return math.ceil(max(a, b))


def _first_violation(points: Sequence[int], edges: Sequence[Edge]) -> Optional[tuple[int, ...]]:
    """Vertices of the lowest-indexed bad event, or None when the drawing is valid.

    Events are ordered: vertex collisions by (v, w), then crossings of
    disjoint edge pairs by (i, j) in edge-list order.
    """
    buckets: dict[int, list[int]] = {}
    for v, p in enumerate(points):
        buckets.setdefault(p, []).append(v)
    pairs = [(b[0], b[1]) for b in buckets.values() if len(b) > 1]
    if pairs:
        return min(pairs)
    # no collisions, so edges with equal sums are vertex-disjoint
    sums: dict[tuple[int, int], list[int]] = {}
    for i, (u, v) in enumerate(edges):
        a, b = points[u], points[v]
        sums.setdefault((a & b, a | b), []).append(i)
    hits = [(b[0], b[1]) for b in sums.values() if len(b) > 1]
    if not hits:
        return None
    i, j = min(hits)
    return tuple(sorted(edges[i] + edges[j]))


def lll_draw(g: Graph, seed: int, budget_factor: int = 64) -> HypercubeDrawing:
    """Random drawing repaired by Moser-Tardos resampling.

    Starts at the local-lemma dimension; after ``64 (n + m^2) d`` vertex
    resamplings without success it moves to ``d + 1``. ``meta`` records the
    target dimension, escalations and resample count.
    """
    if g.has_loops:
        raise DrawingError("lll_draw needs a simple graph")
    rng = random.Random(seed)
    n, m = g.n, g.m
    edges = g.edge_list
    target = lll_dimension(max(n, 1), m, g.max_degree)
    d = target
    total = 0
    escalations = 0
    while True:
        budget = budget_factor * (n + m * m) * d
        used = 0
        points = [rng.getrandbits(d) for _ in range(n)]
        while True:
            bad = _first_violation(points, edges)
            if bad is None:
                break
            if used >= budget:
                break
            for v in bad:
                points[v] = rng.getrandbits(d)
            used += len(bad)
        total += used
        if bad is None:
            break
        escalations += 1
        d += 1
    meta = {"target_dimension": target, "escalations": escalations, "resamplings": total, "seed": seed}
    return HypercubeDrawing(d, tuple(int_to_point(p, d) for p in points), meta)


# --- exact crossing probability ----------------------------------------------

@dataclass(frozen=True)
class CrossingProbability:
    d: int
    probability: Fraction
    count: int  # quadruples (v, w, x, y) with v + w == x + y
    total: int  # 2^(4d)
    strata: dict  # k -> count of matching quadruples whose common sum has k ones
    expected_strata: dict  # k -> C(d,k) 2^(d-k) midpoints times (2^k)^2 ordered pairs each


def crossing_probability_exact(d: int, cap: int = 5) -> CrossingProbability:
    """Enumerate every quadruple of points in {0,1}^d and count equal pair sums."""
    if d < 0 or d > cap:
        raise DrawingError(f"d={d} outside [0, {cap}]; enumeration is 2^(4d)")
    pts = list(product((0, 1), repeat=d))
    pair_sums = [point_sum(p, q) for p in pts for q in pts]
    strata = {k: 0 for k in range(d + 1)}
    for s in pair_sums:
        ones = s.count(1)
        for t in pair_sums:
            if s == t:
                strata[ones] += 1
    count = sum(strata.values())
    total = 2 ** (4 * d)
    expected = {k: comb(d, k) * 2 ** (d - k) * 4**k for k in range(d + 1)}
    return CrossingProbability(d, Fraction(count, total), count, total, strata, expected)
