"""Exhaustive ground truth for small instances.

Nothing here shares code with the constructors it is used to check: the
searches enumerate labels/points directly and the segment test is plain
rational linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence, Union

from cubedraw.antimagic import Labelling, greedy_degen_label, mag_lower_bound
from cubedraw.graph import Graph
from cubedraw.hypercube import (
    BitPoint,
    DrawingError,
    HypercubeDrawing,
    antimagic_dimension,
    int_to_point,
    vol_lower_dimension,
)


@dataclass(frozen=True)
class ExactResult:
    """Optimum of an exhaustive search.

    ``value`` is None when the cap was hit; ``lower``/``upper`` then hold the
    best bounds known (``upper`` may be None).
    """

    value: Optional[int]
    witness: Union[Labelling, HypercubeDrawing, None]
    nodes_explored: int
    lower: int
    upper: Optional[int]

    @property
    def resolved(self) -> bool:
        return self.value is not None


def _search_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _mag_feasible(g: Graph, k: int, order: list[int], counter: list[int]) -> Optional[dict[int, int]]:
    n = g.n
    adj = g.adjacency
    loops = {u for u, v in g.edges if u == v}
    # neighbours of order[i] that appear earlier in the order
    earlier = []
    placed = set()
    for v in order:
        earlier.append([w for w in adj[v] if w in placed])
        placed.add(v)
    label: dict[int, int] = {}
    used = [False] * (k + 1)
    sums: set[int] = set()

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        # label reversal x -> k+1-x preserves antimagic, so cap the first label
        top = (k + 1) // 2 if i == 0 else k
        for x in range(1, top + 1):
            if used[x]:
                continue
            counter[0] += 1
            new = [x + label[w] for w in earlier[i]]
            if v in loops:
                new.append(2 * x)
            if any(s in sums for s in new):
                continue
            used[x] = True
            label[v] = x
            sums.update(new)
            if rec(i + 1):
                return True
            sums.difference_update(new)
            del label[v]
            used[x] = False
        return False

    return dict(label) if rec(0) else None


def exact_mag(g: Graph, k_cap: Optional[int] = None) -> ExactResult:
    """Least k admitting an antimagic injection into [k], by depth-first search.

    Without ``k_cap`` a simple graph is searched up to its greedy labelling's
    maximum (always feasible); pseudographs default to ``2n^2 + 2``.
    """
    lower = mag_lower_bound(g)
    upper = None
    if not g.has_loops:
        upper = greedy_degen_label(g).max_label if g.n else 1
    if k_cap is None:
        k_cap = upper if upper is not None else 2 * g.n * g.n + 2
    if g.n == 0:
        return ExactResult(0, Labelling(()), 0, 0, 0)
    counter = [0]
    order = _search_order(g)
    for k in range(lower, k_cap + 1):
        found = _mag_feasible(g, k, order, counter)
        if found is not None:
            return ExactResult(k, Labelling.from_mapping(found, k), counter[0], k, k)
    return ExactResult(None, None, counter[0], max(lower, k_cap + 1), upper)


def _vol_feasible(g: Graph, d: int, order: list[int], counter: list[int]) -> Optional[dict[int, int]]:
    n = g.n
    size = 1 << d
    adj = g.adjacency
    earlier = []
    placed = set()
    for v in order:
        earlier.append([w for w in adj[v] if w in placed])
        placed.add(v)
    point: dict[int, int] = {}
    used = [False] * size
    sums: set[tuple[int, int]] = set()

    def candidates(i: int):
        if i == 0:
            return [0]
        if i == 1:
            # origin fixed; coordinate permutations reduce the second point to its weight
            return [(1 << j) - 1 for j in range(1, d + 1)]
        return range(size)

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for p in candidates(i):
            if used[p]:
                continue
            counter[0] += 1
            new = [(p & point[w], p | point[w]) for w in earlier[i]]
            if any(s in sums for s in new):
                continue
            used[p] = True
            point[v] = p
            sums.update(new)
            if rec(i + 1):
                return True
            sums.difference_update(new)
            del point[v]
            used[p] = False
        return False

    return dict(point) if rec(0) else None


def exact_vol(g: Graph, d_cap: Optional[int] = None) -> ExactResult:
    """Least volume 2^d of a hypercube drawing, searching d upward from the counting bound."""
    if g.has_loops:
        raise DrawingError("hypercube drawings are defined for simple graphs")
    d0 = vol_lower_dimension(g.n, g.m)
    upper_d = antimagic_dimension(greedy_degen_label(g).max_label) if g.n else 0
    if d_cap is None:
        d_cap = max(upper_d, d0)
    if g.n == 0:
        return ExactResult(1, HypercubeDrawing(0, ()), 0, 1, 1)
    counter = [0]
    order = _search_order(g)
    for d in range(d0, d_cap + 1):
        found = _vol_feasible(g, d, order, counter)
        if found is not None:
            pts = tuple(int_to_point(found[v], d) for v in range(g.n))
            return ExactResult(2**d, HypercubeDrawing(d, pts), counter[0], 2**d, 2**d)
    return ExactResult(None, None, counter[0], 2 ** max(d0, d_cap + 1), 2**upper_d)


# --- exact geometry ---------------------------------------------------------

def _sub(p: Sequence, q: Sequence) -> list[Fraction]:
    return [Fraction(a) - Fraction(b) for a, b in zip(p, q)]


def _dot(p: Sequence, q: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(p, q)), Fraction(0))


def _parallel(u: Sequence, v: Sequence) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i, j in combinations(range(len(u)), 2))


def segment_cross_exact(a: BitPoint, b: BitPoint, c: BitPoint, d: BitPoint) -> bool:
    """Whether the open segments (a, b) and (c, d) meet, in exact rational arithmetic."""
    if not len(a) == len(b) == len(c) == len(d):
        raise ValueError("points have different dimensions")
    if tuple(a) == tuple(b) or tuple(c) == tuple(d):
        raise ValueError("zero-length segment")
    u = _sub(b, a)
    v = _sub(d, c)
    w = _sub(c, a)
    if _parallel(u, v):
        if not _parallel(u, w):
            return False
        uu = _dot(u, u)
        s_c = _dot(w, u) / uu
        s_d = _dot(_sub(d, a), u) / uu
        lo, hi = min(s_c, s_d), max(s_c, s_d)
        return max(Fraction(0), lo) < min(Fraction(1), hi)
    # s u - t v = w; pick two coordinates with an invertible 2x2 system
    dim = len(u)
    for i, j in combinations(range(dim), 2):
        det = v[i] * u[j] - u[i] * v[j]
        if det != 0:
            s = (v[i] * w[j] - w[i] * v[j]) / det
            t = (u[i] * w[j] - u[j] * w[i]) / det
            break
    else:  # pragma: no cover - non-parallel vectors always have a nonzero minor
        raise AssertionError("non-parallel directions without a nonzero minor")
    if any(s * u[k] - t * v[k] != w[k] for k in range(dim)):
        return False
    return 0 < s < 1 and 0 < t < 1


def max_drawing_edges_exhaustive(d: int) -> int:
    """Largest edge set on all of {0,1}^d with pairwise distinct endpoint sums.

    Edges with equal sums cross, so at most one edge per sum value survives,
    and one edge from each sum class is always a valid choice: the answer is
    the number of distinct sums over pairs of distinct points.
    """
    if not 0 <= d <= 3:
        raise ValueError(f"exhaustive count supports d <= 3, got {d}")
    pts = list(product((0, 1), repeat=d))
    classes = {tuple(x + y for x, y in zip(p, q)) for p, q in combinations(pts, 2)}
    return len(classes)
