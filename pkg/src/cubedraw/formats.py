"""Plain-text and JSON serialization for graphs, labellings, drawings and track injections.

A text stream is a sequence of sections. The graph section is the edge list
(``n m [loops]`` then ``m`` lines ``u v``); later sections start with a
keyword header and hold one line per vertex::

    k <bound>            labelling:  "id label"
    d <dimension>        drawing:    "id bits"  (most significant bit first)
    tracks <t> <r>       injection:  "id track slot"

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from cubedraw.antimagic import Labelling, TrackInjection
from cubedraw.graph import Graph, from_edge_list
from cubedraw.hypercube import HypercubeDrawing


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass
class Bundle:
    graph: Optional[Graph] = None
    labelling: Optional[Labelling] = None
    drawing: Optional[HypercubeDrawing] = None
    tracks: Optional[TrackInjection] = None


def write_graph(g: Graph) -> str:
    head = f"{g.n} {g.m}" + (" loops" if g.allows_loops else "")
    return "\n".join([head] + [f"{u} {v}" for u, v in g.edge_list]) + "\n"


def write_labelling(f: Labelling) -> str:
    return "\n".join([f"k {f.k}"] + [f"{v} {x}" for v, x in enumerate(f.labels)]) + "\n"


def bits(p) -> str:
    return "".join(map(str, p))


def write_drawing(dr: HypercubeDrawing) -> str:
    return "\n".join([f"d {dr.d}"] + [f"{v} {bits(p)}".rstrip() for v, p in enumerate(dr.points)]) + "\n"


def write_tracks(fv: TrackInjection) -> str:
    return "\n".join([f"tracks {fv.t} {fv.r}"] + [f"{v} {a} {i}" for v, (a, i) in enumerate(fv.assignment)]) + "\n"


def write_bundle(b: Bundle) -> str:
    parts = []
    if b.graph is not None:
        parts.append(write_graph(b.graph))
    if b.tracks is not None:
        parts.append(write_tracks(b.tracks))
    if b.labelling is not None:
        parts.append(write_labelling(b.labelling))
    if b.drawing is not None:
        parts.append(write_drawing(b.drawing))
    return "".join(parts)


# --- JSON ---------------------------------------------------------------------

def graph_json(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "loops": g.allows_loops, "edges": [list(e) for e in g.edge_list]}


def labelling_json(f: Labelling) -> dict:
    return {"k": f.k, "labels": list(f.labels)}


def drawing_json(dr: HypercubeDrawing) -> dict:
    return {"d": dr.d, "points": [bits(p) for p in dr.points], "meta": dict(sorted(dr.meta.items()))}


def tracks_json(fv: TrackInjection) -> dict:
    return {"t": fv.t, "r": fv.r, "assignment": [list(x) for x in fv.assignment]}


def bundle_json(b: Bundle) -> dict:
    out = {}
    if b.graph is not None:
        out["graph"] = graph_json(b.graph)
    if b.tracks is not None:
        out["tracks"] = tracks_json(b.tracks)
    if b.labelling is not None:
        out["labelling"] = labelling_json(b.labelling)
    if b.drawing is not None:
        out["drawing"] = drawing_json(b.drawing)
    return out


def _parse_point(s: str, d: int) -> tuple[int, ...]:
    if len(s) != d or any(c not in "01" for c in s):
        raise ValueError(f"expected {d} bits, got {s!r}")
    return tuple(int(c) for c in s)


def _bundle_from_json(doc: dict) -> Bundle:
    b = Bundle()
    try:
        if "graph" in doc:
            gd = doc["graph"]
            b.graph = from_edge_list(gd["n"], gd["edges"], gd.get("loops", False))
        if "tracks" in doc:
            td = doc["tracks"]
            b.tracks = TrackInjection(td["t"], td["r"], tuple(tuple(x) for x in td["assignment"]))
        if "labelling" in doc:
            ld = doc["labelling"]
            b.labelling = Labelling(tuple(ld["labels"]), ld["k"])
        if "drawing" in doc:
            dd = doc["drawing"]
            pts = tuple(_parse_point(p, dd["d"]) for p in dd["points"])
            b.drawing = HypercubeDrawing(dd["d"], pts, dict(dd.get("meta", {})))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(1, f"bad JSON document: {exc}") from None
    return b


# --- text parser ------------------------------------------------------------

_HEADERS = ("k", "d", "tracks")


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_bundle(text: str) -> Bundle:
    """Parse a text (or JSON) stream into a :class:`Bundle`."""
    if text.lstrip().startswith("{"):
        try:
            return _bundle_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(exc.lineno, f"invalid JSON: {exc.msg}") from None

    lines = []
    for i, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            lines.append((i, body))
    b = Bundle()
    pos = 0

    def section_rows(expected: Optional[int]):
        nonlocal pos
        rows = []
        while pos < len(lines) and (expected is None or len(rows) < expected):
            lineno, tok = lines[pos]
            if tok[0] in _HEADERS:
                break
            rows.append((lineno, tok))
            pos += 1
        if expected is not None and len(rows) < expected:
            last = lines[pos - 1][0] if pos else 0
            raise ParseError(last, f"expected {expected} entries, found {len(rows)}")
        return rows

    if lines and lines[0][1][0] not in _HEADERS:
        lineno, tok = lines[0]
        if len(tok) not in (2, 3) or (len(tok) == 3 and tok[2] != "loops"):
            raise ParseError(lineno, "graph header must be 'n m [loops]'")
        n, m = _ints(tok[:2], lineno)
        loops = len(tok) == 3
        pos = 1
        pairs = []
        for ln, t in section_rows(m):
            if len(t) != 2:
                raise ParseError(ln, f"edge line must be 'u v', got {' '.join(t)!r}")
            pairs.append((ln, _ints(t, ln)))
        seen = set()
        for ln, (u, v) in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(ln, f"vertex id out of range 0..{n - 1}")
            if u == v and not loops:
                raise ParseError(ln, f"loop {u} {v} in a simple graph (add 'loops' to the header)")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(ln, f"duplicate edge {u} {v}")
            seen.add(key)
        b.graph = from_edge_list(n, [p for _, p in pairs], loops)

    n_expected = b.graph.n if b.graph is not None else None
    while pos < len(lines):
        lineno, tok = lines[pos]
        head = tok[0]
        if head not in _HEADERS:
            raise ParseError(lineno, f"unexpected line {' '.join(tok)!r}")
        pos += 1
        rows = section_rows(n_expected)
        ids = []
        try:
            if head == "k":
                if len(tok) != 2:
                    raise ParseError(lineno, "labelling header must be 'k <bound>'")
                (k,) = _ints(tok[1:], lineno)
                vals = {}
                for ln, t in rows:
                    if len(t) != 2:
                        raise ParseError(ln, "labelling line must be 'id label'")
                    v, x = _ints(t, ln)
                    vals[v] = x
                    ids.append((ln, v))
                _check_ids(ids)
                b.labelling = Labelling.from_mapping(vals, k)
            elif head == "d":
                if len(tok) != 2:
                    raise ParseError(lineno, "drawing header must be 'd <dimension>'")
                (d,) = _ints(tok[1:], lineno)
                pts = {}
                for ln, t in rows:
                    if len(t) not in (1, 2):
                        raise ParseError(ln, "drawing line must be 'id bits'")
                    (v,) = _ints(t[:1], ln)
                    try:
                        pts[v] = _parse_point(t[1] if len(t) == 2 else "", d)
                    except ValueError as exc:
                        raise ParseError(ln, str(exc)) from None
                    ids.append((ln, v))
                _check_ids(ids)
                b.drawing = HypercubeDrawing(d, tuple(pts[v] for v in range(len(pts))))
            else:
                if len(tok) != 3:
                    raise ParseError(lineno, "track header must be 'tracks <t> <r>'")
                t_count, r = _ints(tok[1:], lineno)
                assign = {}
                for ln, t in rows:
                    if len(t) != 3:
                        raise ParseError(ln, "track line must be 'id track slot'")
                    v, a, i = _ints(t, ln)
                    assign[v] = (a, i)
                    ids.append((ln, v))
                _check_ids(ids)
                b.tracks = TrackInjection(t_count, r, tuple(assign[v] for v in range(len(assign))))
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    return b


def _check_ids(ids):
    seen = set()
    for ln, v in ids:
        if not 0 <= v < len(ids) or v in seen:
            raise ParseError(ln, f"vertex id {v} is out of range or repeated")
        seen.add(v)


def read_graph(text: str) -> Graph:
    b = parse_bundle(text)
    if b.graph is None:
        raise ParseError(1, "no graph section")
    return b.graph
