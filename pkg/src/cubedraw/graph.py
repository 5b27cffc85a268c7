"""Graphs, named generators, degeneracy orderings and 1-queue layouts.

Vertices are dense ids ``0..n-1``. Edges are stored once as ``(u, v)`` with
``u <= v``; ``(v, v)`` is a loop and only appears in pseudograph mode.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs, orderings or generator parameters."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    allows_loops: bool = False

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u > v:
                raise GraphError(f"edge {(u, v)} is not normalized")
            if u < 0 or v >= self.n:
                raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{self.n - 1}")
            if u == v and not self.allows_loops:
                raise GraphError(f"loop {(u, v)} in a simple graph")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in lexicographic order; this is the canonical edge index."""
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets, loops excluded."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def __repr__(self) -> str:
        tag = ", loops" if self.allows_loops else ""
        return f"Graph(n={self.n}, m={self.m}{tag})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]], allows_loops: bool = False) -> Graph:
    """Build a :class:`Graph`, rejecting duplicates, bad ids and illegal loops."""
    edges: set[Edge] = set()
    for pair in pairs:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v and not allows_loops:
            raise GraphError(f"loop {(u, v)} not allowed in simple mode")
        e = _norm(u, v)
        if e in edges:
            raise GraphError(f"duplicate edge {(u, v)}")
        edges.add(e)
    return Graph(n, frozenset(edges), allows_loops)


# --- generators -------------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def complete_pseudo(n: int) -> Graph:
    edges = set(itertools.combinations(range(n), 2))
    edges.update((v, v) for v in range(n))
    return Graph(n, frozenset(edges), allows_loops=True)


def path_power(n: int, k: int) -> Graph:
    if k < 1:
        raise GraphError(f"path power exponent must be >= 1, got {k}")
    if k >= n:
        raise GraphError(f"path power needs k < n, got k={k}, n={n}")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, min(n, i + k + 1))))


def subdivided_complete(n: int) -> Graph:
    """K_n with every edge split by a new vertex; new ids follow the originals."""
    edges = set()
    mid = n
    for u, v in itertools.combinations(range(n), 2):
        edges.add((u, mid))
        edges.add((v, mid))
        mid += 1
    return Graph(mid, frozenset(edges))


def random_bounded_degree(n: int, m: int, max_degree: int, seed: int) -> Graph:
    """Rejection-sample up to ``m`` edges uniformly, skipping any that breaks the degree cap.

    Gives up after ``64 * (m + n) + 1000`` draws, so the result may have fewer
    than ``m`` edges when the cap makes ``m`` hard or impossible to reach.
    """
    if n < 2 or m <= 0:
        return Graph(max(n, 0), frozenset())
    rng = random.Random(seed)
    deg = [0] * n
    edges: set[Edge] = set()
    for _ in range(64 * (m + n) + 1000):
        if len(edges) >= m:
            break
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        e = _norm(u, v)
        if e in edges or deg[u] >= max_degree or deg[v] >= max_degree:
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
    return Graph(n, frozenset(edges))


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset(_norm(i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def empty(n: int) -> Graph:
    return Graph(n, frozenset())


GENERATORS = {
    "complete": complete,
    "complete_pseudo": complete_pseudo,
    "path_power": path_power,
    "subdivided_complete": subdivided_complete,
    "random_bounded_degree": random_bounded_degree,
    "path": path,
    "cycle": cycle,
    "star": star,
    "empty": empty,
}


def generate(kind: str, *params: int) -> Graph:
    """Dispatch to a named generator, e.g. ``generate("path_power", 4, 2)``.

    ``random_bounded_degree`` takes ``(n, m, max_degree, seed)``.
    """
    try:
        fn = GENERATORS[kind]
    except KeyError:
        raise GraphError(f"unknown graph family {kind!r}; choose from {sorted(GENERATORS)}") from None
    try:
        return fn(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {kind}: {exc}") from None


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


# --- orderings --------------------------------------------------------------

@dataclass(frozen=True)
class VertexOrdering:
    """``order[i]`` is the vertex at 1-based position ``i + 1``."""

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.order) != list(range(len(self.order))):
            raise GraphError(f"ordering {self.order} is not a permutation of 0..{len(self.order) - 1}")

    @classmethod
    def identity(cls, n: int) -> VertexOrdering:
        return cls(tuple(range(n)))

    @cached_property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i + 1
        return tuple(pos)

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class DegeneracyResult:
    ordering: tuple[int, ...]
    degeneracy: int


def degeneracy_ordering(g: Graph) -> DegeneracyResult:
    """Repeatedly delete a minimum-degree vertex (lowest id on ties)."""
    deg = [len(a) for a in g.adjacency]
    alive = [True] * g.n
    order = []
    worst = 0
    for _ in range(g.n):
        v = min((u for u in range(g.n) if alive[u]), key=lambda u: (deg[u], u))
        worst = max(worst, deg[v])
        order.append(v)
        alive[v] = False
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
    return DegeneracyResult(tuple(order), worst)


def _check_ordering(g: Graph, sigma: VertexOrdering) -> None:
    if len(sigma) != g.n:
        raise GraphError(f"ordering has {len(sigma)} vertices, graph has {g.n}")


def find_nested_pair(g: Graph, sigma: VertexOrdering) -> Optional[tuple[Edge, Edge]]:
    """Return ``(outer, inner)`` for some nested pair of disjoint edges, or None.

    Sweeps edges by left endpoint; an edge is nested iff some edge with a
    strictly smaller left endpoint has a strictly larger right endpoint.
    Loops never nest.
    """
    _check_ordering(g, sigma)
    pos = sigma.position
    spans = sorted(
        (min(pos[u], pos[v]), max(pos[u], pos[v]), (u, v)) for u, v in g.edges if u != v
    )
    best: Optional[tuple[int, Edge]] = None
    i = 0
    while i < len(spans):
        j = i
        while j < len(spans) and spans[j][0] == spans[i][0]:
            if best is not None and best[0] > spans[j][1]:
                return best[1], spans[j][2]
            j += 1
        for left, right, e in spans[i:j]:
            if best is None or right > best[0]:
                best = (right, e)
        i = j
    return None


def is_one_queue_ordering(g: Graph, sigma: VertexOrdering) -> bool:
    return find_nested_pair(g, sigma) is None


def find_one_queue_layout(g: Graph, n_cap: int = 10) -> Optional[VertexOrdering]:
    """Exhaustive search for a vertex ordering with no nested edge pair.

    Recognising 1-queue graphs is NP-complete, so the search is refused above
    ``n_cap`` vertices. Partial orderings are cut as soon as a placed vertex
    still waiting for a neighbour sits left of a completed edge: that future
    edge must nest over it.
    """
    if g.n > n_cap:
        raise GraphError(
            f"graph has {g.n} vertices > cap {n_cap}; 1-queue search is exponential"
        )
    adj = g.adjacency
    pos: dict[int, int] = {}
    pending = [len(a) for a in adj]  # unplaced neighbours per vertex

    def rec(max_left: int) -> bool:
        if len(pos) == g.n:
            return True
        p = len(pos) + 1
        for v in range(g.n):
            if v in pos:
                continue
            pos[v] = p
            new_left = max_left
            for u in adj[v]:
                if u in pos and u != v:
                    pending[u] -= 1
                    pending[v] -= 1
                    new_left = max(new_left, pos[u])
            open_min = min((pos[u] for u in pos if pending[u] > 0), default=g.n + 1)
            if open_min >= new_left or new_left == 0:
                if rec(new_left):
                    return True
            for u in adj[v]:
                if u in pos and u != v:
                    pending[u] += 1
                    pending[v] += 1
            del pos[v]
        return False

    if not rec(0):
        return None
    order = sorted(pos, key=pos.get)
    sigma = VertexOrdering(tuple(order))
    assert is_one_queue_ordering(g, sigma)
    return sigma
