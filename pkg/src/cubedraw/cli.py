"""Command-line interface.

Subcommands read and write the text formats in :mod:`cubedraw.formats`, so
they compose with pipes::

    cubedraw gen complete 4 | cubedraw label greedy | cubedraw draw via-antimagic | cubedraw verify

Exit codes: 0 success/valid, 1 invalid artifact, 2 usage or parse error,
3 oracle cap reached.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Optional

from cubedraw import antimagic as am
from cubedraw import formats
from cubedraw import graph as gr
from cubedraw import hypercube as hc
from cubedraw import oracle
from cubedraw import sidon

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_UNRESOLVED = 0, 1, 2, 3


class UsageError(Exception):
    pass


# --- bounds report ------------------------------------------------------------

@dataclass
class BoundsRow:
    name: str
    n: int
    m: int
    degeneracy: int
    max_degree: int
    mag_lower: int
    mag_upper: dict = field(default_factory=dict)  # constructor tag -> largest label used
    vol_lower: int = 1
    vol_upper: dict = field(default_factory=dict)  # construction tag -> volume
    mag_exact: Optional[int] = None
    vol_exact: Optional[int] = None

    def violations(self) -> list[str]:
        out = []
        for kind, lo, ex, ups in (
            ("mag", self.mag_lower, self.mag_exact, self.mag_upper),
            ("vol", self.vol_lower, self.vol_exact, self.vol_upper),
        ):
            best = min(ups.values(), default=None)
            if ex is not None and ex < lo:
                out.append(f"{self.name}: {kind} exact {ex} below lower bound {lo}")
            if ex is not None and best is not None and ex > best:
                out.append(f"{self.name}: {kind} exact {ex} above upper bound {best}")
            if best is not None and best < lo:
                out.append(f"{self.name}: {kind} upper bound {best} below lower bound {lo}")
        return out


@dataclass
class BoundsReport:
    rows: list[BoundsRow] = field(default_factory=list)

    def violations(self) -> list[str]:
        return [v for r in self.rows for v in r.violations()]

    def as_json(self) -> dict:
        return {"rows": [vars(r) for r in self.rows], "violations": self.violations()}

    def as_text(self) -> str:
        head = f"{'graph':<28}{'n':>5}{'m':>6}{'degen':>6}  {'MAG lo':>7}{'exact':>7}  {'upper (constructor)':<40}{'VOL lo':>7}{'exact':>7}  upper (construction)"
        lines = [head, "-" * len(head)]
        for r in self.rows:
            mag_up = ", ".join(f"{v} {k}" for k, v in r.mag_upper.items())
            vol_up = ", ".join(f"{v} {k}" for k, v in r.vol_upper.items())
            me = "-" if r.mag_exact is None else str(r.mag_exact)
            ve = "-" if r.vol_exact is None else str(r.vol_exact)
            lines.append(
                f"{r.name:<28}{r.n:>5}{r.m:>6}{r.degeneracy:>6}  {r.mag_lower:>7}{me:>7}  {mag_up:<40}{r.vol_lower:>7}{ve:>7}  {vol_up}"
            )
        for v in self.violations():
            lines.append(f"VIOLATION {v}")
        return "\n".join(lines) + "\n"


def bounds_row(
    name: str,
    g: gr.Graph,
    seed: Optional[int] = None,
    exact: bool = False,
    queue_cap: int = 8,
) -> BoundsRow:
    degen = gr.degeneracy_ordering(g).degeneracy
    row = BoundsRow(name, g.n, g.m, degen, g.max_degree, am.mag_lower_bound(g))
    row.vol_lower = hc.vol_lower_bound(g.n, g.m)
    if g.has_loops:
        if exact:
            row.mag_exact = oracle.exact_mag(g).value
        return row
    labellings = {"degeneracy-greedy": am.greedy_degen_label(g), "bandwidth": am.bandwidth_label(g)}
    if g.n <= queue_cap:
        sigma = gr.find_one_queue_layout(g, queue_cap)
        if sigma is not None:
            labellings["one-queue"] = am.queue_label(g, sigma)
    for tag, f in labellings.items():
        row.mag_upper[tag] = f.max_label
        row.vol_upper[f"binary({tag})"] = hc.from_antimagic(f).volume
    if seed is not None and g.n:
        row.vol_upper["local-lemma"] = hc.lll_draw(g, seed).volume
    if exact:
        row.mag_exact = oracle.exact_mag(g).value
        row.vol_exact = oracle.exact_vol(g).value
    return row


# --- helpers ------------------------------------------------------------------

def _read_input(path: Optional[str]) -> formats.Bundle:
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return formats.parse_bundle(text)


def _need_graph(b: formats.Bundle) -> gr.Graph:
    if b.graph is None:
        raise formats.ParseError(1, "input has no graph section")
    return b.graph


def _parse_order(text: Optional[str], n: int) -> Optional[gr.VertexOrdering]:
    if text is None:
        return None
    try:
        order = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"--order must list vertex ids, got {text!r}") from None
    if len(order) != n:
        raise UsageError(f"--order lists {len(order)} ids, graph has {n} vertices")
    return gr.VertexOrdering(order)


def _emit(args, bundle: formats.Bundle, extra: Optional[dict] = None) -> None:
    if args.json:
        doc = formats.bundle_json(bundle)
        doc.update(extra or {})
        print(json.dumps(doc, sort_keys=True))
    else:
        sys.stdout.write(formats.write_bundle(bundle))


def _sidon_for(t: int, which: str) -> sidon.SidonSet:
    if which == "singer":
        q = sidon.smallest_prime_at_least(max(t - 1, 2))
        return sidon.singer_sidon(q)
    return sidon.erdos_turan_sidon(sidon.smallest_prime_at_least(max(t, 2)))


# --- subcommands --------------------------------------------------------------

def cmd_gen(args) -> int:
    params = list(args.params)
    if args.kind == "random_bounded_degree":
        if args.seed is None:
            raise UsageError("random_bounded_degree needs --seed")
        if len(params) != 3:
            raise UsageError("random_bounded_degree takes: n m max_degree")
        params.append(args.seed)
    g = gr.generate(args.kind, *params)
    _emit(args, formats.Bundle(graph=g))
    return EXIT_OK


def cmd_label(args) -> int:
    b = _read_input(args.input)
    g = _need_graph(b)
    order = _parse_order(args.order, g.n)
    s = args.strategy
    if s == "greedy":
        f = am.greedy_degen_label(g)
    elif s == "pathpower":
        if args.p is None:
            raise UsageError("pathpower needs --p")
        far = [e for e in g.edge_list if abs(e[0] - e[1]) > args.p]
        if far:
            raise UsageError(f"edge {far[0]} is longer than p={args.p}; graph is not inside P_n^p")
        f = am.path_power_label(g.n, args.p)
    elif s == "bandwidth":
        f = am.bandwidth_label(g, order)
    elif s == "queue":
        if order is None:
            order = gr.find_one_queue_layout(g, args.cap)
            if order is None:
                print("graph has no 1-queue layout", file=sys.stderr)
                return EXIT_INVALID
        f = am.queue_label(g, order)
    else:  # combine
        tracks = b.tracks
        if args.tracks:
            tracks = formats.parse_bundle(open(args.tracks).read()).tracks
        if tracks is None:
            raise UsageError("combine needs a track injection (tracks section or --tracks FILE)")
        f = am.technical_combine(g, tracks, _sidon_for(tracks.t, args.sidon))
    b.labelling = f
    b.drawing = None
    _emit(args, b)
    return EXIT_OK


def cmd_draw(args) -> int:
    b = _read_input(args.input)
    g = _need_graph(b)
    if args.strategy == "lll":
        if args.seed is None:
            raise UsageError("draw lll needs --seed")
        b.drawing = hc.lll_draw(g, args.seed)
    else:
        f = b.labelling if b.labelling is not None else am.greedy_degen_label(g)
        b.drawing = hc.from_antimagic(f, g)
    _emit(args, b)
    return EXIT_OK


def _fmt_sum(s):
    return tuple(s) if isinstance(s, list) else s


def cmd_verify(args) -> int:
    b = _read_input(args.input)
    g = _need_graph(b)
    if b.labelling is None and b.drawing is None:
        raise UsageError("nothing to verify: input has neither a labelling nor a drawing")
    report: dict = {}
    ok = True
    if b.labelling is not None:
        clash = am.find_sum_collision(g, b.labelling)
        entry = {"valid": clash is None}
        if clash is not None:
            ok = False
            entry.update(edges=[list(clash[0]), list(clash[1])], sum=clash[2])
        report["labelling"] = entry
    if b.drawing is not None:
        dr = b.drawing
        if len(dr) != g.n:
            raise formats.ParseError(1, f"drawing places {len(dr)} vertices, graph has {g.n}")
        same = hc.find_coincidence(dr)
        cross = hc.find_crossing(g, dr)
        entry = {"valid": same is None and cross is None, "edge_count_ok": g.m <= hc.max_edges(dr.d)}
        if same is not None:
            entry["coincident_vertices"] = list(same)
        if cross is not None:
            entry.update(edges=[list(cross[0]), list(cross[1])], sum=list(cross[2]))
        ok = ok and entry["valid"]
        report["drawing"] = entry
    if args.json:
        print(json.dumps({"valid": ok, **report}, sort_keys=True))
    else:
        for what, entry in report.items():
            if entry["valid"]:
                print(f"{what}: valid")
            elif "coincident_vertices" in entry:
                u, v = entry["coincident_vertices"]
                print(f"{what}: INVALID vertices {u} and {v} share a point")
            else:
                (a, b2), (c, d) = entry["edges"]
                print(f"{what}: INVALID edges {a}-{b2} and {c}-{d} both sum to {_fmt_sum(entry['sum'])}")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_oracle(args) -> int:
    b = _read_input(args.input)
    g = _need_graph(b)
    if args.what == "mag":
        res = oracle.exact_mag(g, args.cap)
        witness = None if res.witness is None else formats.labelling_json(res.witness)
    else:
        res = oracle.exact_vol(g, args.cap)
        witness = None if res.witness is None else formats.drawing_json(res.witness)
    doc = {
        "quantity": args.what,
        "value": res.value,
        "resolved": res.resolved,
        "lower": res.lower,
        "upper": res.upper,
        "nodes_explored": res.nodes_explored,
        "witness": witness,
    }
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    elif res.resolved:
        print(res.value)
        if args.what == "mag":
            sys.stdout.write(formats.write_labelling(res.witness))
        else:
            sys.stdout.write(formats.write_drawing(res.witness))
        print(f"# nodes explored: {res.nodes_explored}")
    else:
        up = "?" if res.upper is None else res.upper
        print(f"unresolved: {res.lower} <= {args.what.upper()} <= {up}")
        print(f"# nodes explored: {res.nodes_explored}")
    return EXIT_OK if res.resolved else EXIT_UNRESOLVED


def _parse_sizes(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def cmd_bounds(args) -> int:
    report = BoundsReport()
    if args.family:
        try:
            sizes = _parse_sizes(args.sizes)
        except ValueError:
            raise UsageError(f"--sizes must look like 3..6 or 3,5,8, got {args.sizes!r}") from None
        for n in sizes:
            params = [n] + list(args.params)
            if args.family == "random_bounded_degree":
                if args.seed is None:
                    raise UsageError("random_bounded_degree needs --seed")
                params.append(args.seed)
            g = gr.generate(args.family, *params)
            name = f"{args.family}({','.join(map(str, params))})"
            report.rows.append(bounds_row(name, g, args.seed, args.exact))
    else:
        g = _need_graph(_read_input(args.input))
        report.rows.append(bounds_row("input", g, args.seed, args.exact))
    if args.json:
        print(json.dumps(report.as_json(), sort_keys=True))
    else:
        sys.stdout.write(report.as_text())
    return EXIT_INVALID if report.violations() else EXIT_OK


def cmd_probe(args) -> int:
    if args.what == "crossing":
        res = hc.crossing_probability_exact(args.value)
        doc = {
            "d": res.d,
            "probability": str(res.probability),
            "expected": str(Fraction(3, 8) ** res.d),
            "count": res.count,
            "total": res.total,
            "strata": {str(k): v for k, v in res.strata.items()},
            "expected_strata": {str(k): v for k, v in res.expected_strata.items()},
        }
        ok = res.probability == Fraction(3, 8) ** res.d and res.strata == res.expected_strata
    elif args.what == "max-edges":
        top = args.value
        rows = []
        for d in range(top + 1):
            row = {"d": d, "formula": hc.max_edges(d)}
            if d <= 3:
                row["exhaustive"] = oracle.max_drawing_edges_exhaustive(d)
            rows.append(row)
        doc = {"rows": rows}
        ok = all(r.get("exhaustive", r["formula"]) == r["formula"] for r in rows)
    else:
        make = sidon.singer_sidon if args.what == "singer" else sidon.erdos_turan_sidon
        s = make(args.value)
        doc = {"construction": args.what, "parameter": args.value, "elements": list(s.elements),
               "universe_bound": s.universe_bound, "size": len(s), "is_sidon": sidon.is_sidon(s.elements)}
        ok = doc["is_sidon"]
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    elif args.what == "crossing":
        print(f"d={doc['d']} probability={doc['probability']} ({doc['count']}/{doc['total']}) expected={doc['expected']}")
        for k in sorted(res.strata):
            print(f"  k={k} count={res.strata[k]} expected={res.expected_strata[k]}")
    elif args.what == "max-edges":
        for r in doc["rows"]:
            ex = r.get("exhaustive", "-")
            print(f"d={r['d']} 3^d-2^d={r['formula']} exhaustive={ex}")
    else:
        print(f"{args.what}({args.value}): {' '.join(map(str, doc['elements']))}  in [{doc['universe_bound']}]")
    return EXIT_OK if ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")

    p = argparse.ArgumentParser(prog="cubedraw", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="write a named graph family as an edge list")
    s.add_argument("kind", choices=sorted(gr.GENERATORS))
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("label", parents=[common], help="compute an antimagic labelling")
    s.add_argument("strategy", choices=["greedy", "pathpower", "bandwidth", "queue", "combine"])
    s.add_argument("input", nargs="?")
    s.add_argument("--p", type=int, help="prime for pathpower")
    s.add_argument("--order", help="vertex ordering, e.g. '0 2 1 3'")
    s.add_argument("--cap", type=int, default=10, help="vertex cap for 1-queue search")
    s.add_argument("--tracks", help="file holding a 'tracks t r' section")
    s.add_argument("--sidon", choices=["singer", "erdos-turan"], default="singer")
    s.set_defaults(func=cmd_label)

    s = sub.add_parser("draw", parents=[common], help="compute a hypercube drawing")
    s.add_argument("strategy", choices=["via-antimagic", "lll"])
    s.add_argument("input", nargs="?")
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_draw)

    s = sub.add_parser("verify", parents=[common], help="check a labelling and/or drawing")
    s.add_argument("input", nargs="?")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", parents=[common], help="exact MAG or VOL by exhaustive search")
    s.add_argument("what", choices=["mag", "vol"])
    s.add_argument("input", nargs="?")
    s.add_argument("--cap", type=int, help="largest k (mag) or d (vol) to try")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("bounds", parents=[common], help="tabulate lower/upper/exact bounds")
    s.add_argument("input", nargs="?")
    s.add_argument("--family", choices=sorted(gr.GENERATORS))
    s.add_argument("--sizes", default="3..6")
    s.add_argument("--params", nargs="*", type=int, default=[], help="extra generator parameters after n")
    s.add_argument("--seed", type=int, help="also run the local-lemma drawing (and seed random families)")
    s.add_argument("--exact", action="store_true", help="run the exhaustive oracles")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("probe", parents=[common], help="crossing probability, edge maxima, Sidon sets")
    s.add_argument("what", choices=["crossing", "max-edges", "singer", "erdos-turan"])
    s.add_argument("value", type=int, help="d for crossing/max-edges, prime for Sidon constructions")
    s.set_defaults(func=cmd_probe)
    return p


def run(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except formats.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, gr.GraphError, sidon.SidonError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (am.LabellingError, hc.DrawingError) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
