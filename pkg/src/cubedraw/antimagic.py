"""Antimagic injections: verification, lower bound and the constructors.

A labelling ``f`` of a (pseudo)graph is antimagic when it is injective and
the edge sums ``f(v) + f(w)`` are pairwise distinct; a loop ``vv`` sums to
``2 f(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from cubedraw.graph import Edge, Graph, GraphError, VertexOrdering, degeneracy_ordering, find_nested_pair
from cubedraw.sidon import SidonSet, is_prime, is_sidon, smallest_prime_at_least


class LabellingError(ValueError):
    pass


@dataclass(frozen=True)
class Labelling:
    """Injective vertex labels in ``[1, k]``; ``labels[v]`` is the label of vertex ``v``."""

    labels: tuple[int, ...]
    k: int = 0

    def __post_init__(self) -> None:
        if not self.k:
            object.__setattr__(self, "k", max(self.labels, default=1))
        if len(set(self.labels)) != len(self.labels):
            raise LabellingError(f"labels are not injective: {self.labels}")
        bad = [x for x in self.labels if not 1 <= x <= self.k]
        if bad:
            raise LabellingError(f"labels {bad} fall outside [1, {self.k}]")

    @classmethod
    def from_mapping(cls, labels: Mapping[int, int], k: int = 0) -> Labelling:
        return cls(tuple(labels[v] for v in range(len(labels))), k)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def max_label(self) -> int:
        return max(self.labels, default=0)


def _check_cover(g: Graph, f: Labelling) -> None:
    if len(f) != g.n:
        raise LabellingError(f"labelling covers {len(f)} vertices, graph has {g.n}")


def find_sum_collision(g: Graph, f: Labelling) -> Optional[tuple[Edge, Edge, int]]:
    """First pair of distinct edges (in edge-list order) with equal label sums."""
    _check_cover(g, f)
    seen: dict[int, Edge] = {}
    for e in g.edge_list:
        s = f[e[0]] + f[e[1]]
        if s in seen:
            return seen[s], e, s
        seen[s] = e
    return None


def verify_antimagic(g: Graph, f: Labelling) -> bool:
    return find_sum_collision(g, f) is None


def mag_lower_bound(g: Graph) -> int:
    """max{n, ceil((m+3)/2)} for simple graphs.

    With loops the sums range over {2, ..., 2k}, so the edge-count term
    weakens to ceil((m+1)/2). Without edges only the vertex count matters.
    """
    if g.m == 0:
        return max(g.n, 1)
    if g.has_loops:
        return max(g.n, (g.m + 2) // 2)
    return max(g.n, (g.m + 4) // 2)


def greedy_degen_label(g: Graph) -> Labelling:
    """First-fit labelling along the reverse of a degeneracy elimination order.

    A new vertex ``v`` avoids every used label and every value
    ``f(x) + f(y) - f(w)`` with ``xy`` an existing edge and ``w`` a labelled
    neighbour of ``v``. The largest label is at most ``n + d*m``.
    """
    if g.has_loops:
        raise LabellingError("greedy_degen_label needs a simple graph")
    elim = degeneracy_ordering(g)
    labels: dict[int, int] = {}
    sums: list[int] = []  # sums of edges with both ends labelled
    for v in reversed(elim.ordering):
        forbidden = set(labels.values())
        nbrs = [labels[w] for w in g.adjacency[v] if w in labels]
        for s in sums:
            forbidden.update(s - lw for lw in nbrs)
        x = 1
        while x in forbidden:
            x += 1
        labels[v] = x
        sums.extend(x + lw for lw in nbrs)
    return Labelling.from_mapping(labels)


def path_power_label(n: int, p: int) -> Labelling:
    """Antimagic labelling of the path power P_n^p for a prime ``p < n``.

    For ``p = 2`` the identity order is a 1-queue layout, so ``f(v_i) = i + 1``;
    otherwise ``f(v_i) = 1 + 2pi + (i^2 mod p)``. Either way ``k = p(2n-1)``.
    """
    if not is_prime(p):
        raise LabellingError(f"path_power_label needs a prime p, got {p}")
    if p >= n:
        raise LabellingError(f"path_power_label needs p < n, got p={p}, n={n}")
    if p == 2:
        return Labelling(tuple(range(1, n + 1)), p * (2 * n - 1))
    return Labelling(tuple(1 + 2 * p * i + (i * i % p) for i in range(n)), p * (2 * n - 1))


def bandwidth(g: Graph, sigma: VertexOrdering) -> int:
    pos = sigma.position
    return max((abs(pos[u] - pos[v]) for u, v in g.edges), default=0)


def bandwidth_label(g: Graph, sigma: Optional[VertexOrdering] = None) -> Labelling:
    """Label through the path power containing ``g`` under ``sigma``.

    With bandwidth ``b`` and ``p`` the least prime ``>= b``, vertex at position
    ``s`` gets ``1 + 2p(s-1) + ((s-1)^2 mod p)``; for ``p = 2`` positions are
    used directly. The bound is ``2b(2n-1)``.
    """
    if g.has_loops:
        raise LabellingError("bandwidth_label needs a simple graph")
    sigma = sigma or VertexOrdering.identity(g.n)
    if len(sigma) != g.n:
        raise GraphError(f"ordering has {len(sigma)} vertices, graph has {g.n}")
    b = max(bandwidth(g, sigma), 1)
    p = smallest_prime_at_least(b)
    pos = sigma.position
    if p == 2:
        labels = tuple(pos)
    else:
        labels = tuple(1 + 2 * p * (s - 1) + ((s - 1) ** 2 % p) for s in pos)
    return Labelling(labels, max(2 * b * (2 * g.n - 1), max(labels, default=1)))


def queue_label(g: Graph, sigma: VertexOrdering) -> Labelling:
    """``f(v) = sigma(v)`` for a 1-queue ordering: equal sums would force a nest."""
    if g.has_loops:
        raise LabellingError("queue_label needs a simple graph")
    nested = find_nested_pair(g, sigma)
    if nested is not None:
        outer, inner = nested
        raise LabellingError(f"ordering is not a 1-queue layout: edge {inner} nests inside {outer}")
    return Labelling(tuple(sigma.position), max(g.n, 1))


@dataclass(frozen=True)
class TrackInjection:
    """Vertex ``v`` sits on track ``assignment[v][0]`` in slot ``assignment[v][1]`` (both 1-based)."""

    t: int
    r: int
    assignment: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if len(set(self.assignment)) != len(self.assignment):
            raise LabellingError("track assignment is not injective")
        for a, i in self.assignment:
            if not (1 <= a <= self.t and 1 <= i <= self.r):
                raise LabellingError(f"({a}, {i}) lies outside [{self.t}] x [{self.r}]")


def edge_track_collision(g: Graph, fv: TrackInjection) -> Optional[tuple[Edge, Edge]]:
    """Two edges mapped to the same ``({a, b}, i + j)``, if any."""
    if len(fv.assignment) != g.n:
        raise LabellingError(f"track injection covers {len(fv.assignment)} vertices, graph has {g.n}")
    seen: dict[tuple, Edge] = {}
    for e in g.edge_list:
        (a, i), (b, j) = fv.assignment[e[0]], fv.assignment[e[1]]
        key = (min(a, b), max(a, b), i + j)
        if key in seen:
            return seen[key], e
        seen[key] = e
    return None


def check_track_injection(g: Graph, fv: TrackInjection) -> bool:
    return edge_track_collision(g, fv) is None


def technical_combine(g: Graph, fv: TrackInjection, s: SidonSet) -> Labelling:
    """Spread tracks along a Sidon set: ``f(v) = 2r(s_a - 1) + i`` for ``fv(v) = (a, i)``.

    Requires the induced edge map to be injective; the result is antimagic
    with ``k <= 2r(max S - 1) + r``.
    """
    if len(s) < fv.t:
        raise LabellingError(f"Sidon set has {len(s)} elements, need at least t={fv.t}")
    if not is_sidon(s.elements):
        raise LabellingError("combiner needs a Sidon set")
    clash = edge_track_collision(g, fv)
    if clash is not None:
        raise LabellingError(f"edge map is not injective: {clash[0]} and {clash[1]} collide")
    r = fv.r
    labels = tuple(2 * r * (s[a - 1] - 1) + i for a, i in fv.assignment)
    return Labelling(labels, max(2 * r * (s.elements[fv.t - 1] - 1) + r, 1))
