"""Command-line interface: ``rcgraphs <subcommand> ...``.

Exit codes: 0 success, 1 domain failure (nothing found, impossible request,
budget exhausted), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict
from pathlib import Path

from . import circulant as circ
from .catalog import Catalog, seed_catalog
from .constructions import NoPartition, cartesian_product, complement_transform, fact2_construct
from .graph import GraphError, SmallGraph, rc_signature
from .graph6 import g6_decode, g6_encode
from .nonexistence import find_certificate, verify_certificate
from .search import DEFAULT_MAX_SECONDS, SearchBudgetExceeded, SearchConfig, find_smallest, search

log = logging.getLogger("rcgraphs")

_SIG = {"type": ["object", "null"], "required": ["r", "c"], "properties": {"r": {"type": "integer"}, "c": {"type": "integer"}}}
_STATS = {
    "type": "object",
    "required": ["nodes_expanded", "pruned_degree", "pruned_link", "pruned_feasibility", "isomorphs_rejected", "elapsed"],
}
_GRAPH = {
    "type": "object",
    "required": ["graph6", "n", "signature"],
    "properties": {"graph6": {"type": "string"}, "n": {"type": "integer"}, "signature": _SIG},
}
_ERROR = {"type": "object", "required": ["error"], "properties": {"error": {"type": "string"}}}

CLI_SCHEMAS: dict[str, dict] = {
    "verify": {
        "type": "object",
        "required": ["results"],
        "properties": {
            "results": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["line", "graph6", "signature"],
                    "properties": {"line": {"type": "integer"}, "graph6": {"type": "string"}, "signature": _SIG},
                },
            }
        },
    },
    "search": {
        "type": "object",
        "required": ["graphs", "complete", "stats"],
        "properties": {"graphs": {"type": "array", "items": {"type": "string"}}, "complete": {"type": "boolean"}, "stats": _STATS},
    },
    "smallest": {
        "type": "object",
        "required": ["order", "graph6", "complete"],
        "properties": {"order": {"type": ["integer", "null"]}, "graph6": {"type": ["string", "null"]}, "complete": {"type": "boolean"}},
    },
    "circulant": {
        "oneOf": [
            {"type": "object", "required": ["spec", "graph6", "signature"], "properties": {"spec": {"type": "string"}, "graph6": {"type": "string"}, "signature": _SIG}},
            _ERROR,
        ]
    },
    "orbits": {
        "type": "object",
        "required": ["spec", "link_edges", "orbits"],
        "properties": {
            "spec": {"type": "string"},
            "link_edges": {"type": "integer"},
            "orbits": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["x", "y", "edges"],
                    "properties": {"x": {"type": "integer"}, "y": {"type": "integer"}, "edges": {"type": "array"}},
                },
            },
        },
    },
    "nonexist": {
        "type": "object",
        "required": ["certificate", "verified"],
        "properties": {"certificate": {"type": ["object", "null"]}, "verified": {"type": "boolean"}},
    },
    "product": {"oneOf": [_GRAPH, _ERROR]},
    "complement": {"oneOf": [_GRAPH, _ERROR]},
    "fact2": {"oneOf": [_GRAPH, _ERROR]},
    "catalog": {"type": "object"},
}


def _budget_seconds() -> float:
    raw = os.environ.get("RC_BUDGET_SECONDS")
    if not raw:
        return DEFAULT_MAX_SECONDS
    try:
        return float(raw)
    except ValueError:
        log.warning("ignoring non-numeric RC_BUDGET_SECONDS=%r", raw)
        return DEFAULT_MAX_SECONDS


def _graph_payload(g: SmallGraph) -> dict:
    sig = rc_signature(g) if g.n else None
    return {"graph6": g6_encode(g), "n": g.n, "signature": None if sig is None else {"r": sig.r, "c": sig.c}}


def _read_graph(arg: str) -> SmallGraph:
    path = Path(arg)
    if path.exists():
        for line in path.read_text(encoding="utf-8").splitlines():
            if line.strip():
                return g6_decode(line)
        raise GraphError(f"{arg} contains no graph")
    return g6_decode(arg)


def _sig_text(g: SmallGraph) -> str:
    sig = rc_signature(g) if g.n else None
    return "not constant" if sig is None else f"({sig.r},{sig.c})"


class _Out:
    def __init__(self, as_json: bool) -> None:
        self.as_json = as_json

    def emit(self, payload: dict, human: list[str]) -> None:
        if self.as_json:
            print(json.dumps(payload, sort_keys=True))
        else:
            for line in human:
                print(line)


def cmd_verify(args, out: _Out) -> int:
    results = []
    lines = []
    status = 0
    text = Path(args.file).read_text(encoding="utf-8") if args.file != "-" else sys.stdin.read()
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            g = g6_decode(line)
        except GraphError as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            status = 1
            continue
        payload = _graph_payload(g)
        results.append({"line": lineno, "graph6": line.strip(), "signature": payload["signature"]})
        lines.append(f"{line.strip()} {_sig_text(g)}")
    out.emit({"results": results}, lines)
    return status


def cmd_search(args, out: _Out) -> int:
    mode = "all" if args.all or args.limit else "first"
    cfg = SearchConfig(args.n, args.r, args.c, args.planar, limit=args.limit, mode=mode, max_seconds=_budget_seconds())
    result = search(cfg, workers=args.threads)
    graphs = [g6_encode(g) for g in result.graphs]
    print(result.stats.to_json(), file=sys.stderr)
    if not result.complete:
        print("search budget exhausted; output is partial", file=sys.stderr)
    out.emit({"graphs": graphs, "complete": result.complete, "stats": asdict(result.stats)}, graphs)
    if not result.complete:
        return 1
    return 0 if graphs else 1


def cmd_smallest(args, out: _Out) -> int:
    try:
        found = find_smallest(
            args.r, args.c, args.n_max, args.planar,
            mode="first" if args.first else "all",
            max_seconds=_budget_seconds(), workers=args.threads,
        )
    except SearchBudgetExceeded as exc:
        print(f"{exc} (last completed order: {exc.last_completed})", file=sys.stderr)
        out.emit({"order": None, "graph6": None, "complete": False}, [f"budget exhausted after order {exc.last_completed}"])
        return 1
    if found.graph is None:
        out.emit({"order": None, "graph6": None, "complete": True}, [f"none up to order {args.n_max}"])
        return 1
    g6 = g6_encode(found.graph)
    out.emit({"order": found.order, "graph6": g6, "complete": found.complete}, [f"order {found.order}", g6])
    return 0


def cmd_circulant(args, out: _Out) -> int:
    try:
        spec = circ.construct_rc_circulant(args.r, args.c)
    except circ.CirculantError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        out.emit({"error": type(exc).__name__, "message": str(exc)}, [f"{type(exc).__name__}: {exc}"])
        return 1
    g = circ.make_circulant(spec)
    payload = _graph_payload(g)
    out.emit({"spec": str(spec), **payload}, [str(spec), payload["graph6"]])
    return 0


def cmd_orbits(args, out: _Out) -> int:
    jumps = tuple(int(s) for s in args.s.split(",") if s.strip())
    spec = circ.CirculantSpec(args.n, jumps)
    orbits = []
    lines = []
    for orbit in circ.orbit_partition(spec):
        edges = sorted(orbit)
        rep = circ.canonical_edge(spec, edges[0])
        orbits.append({"x": rep.x, "y": rep.y, "edges": [list(e) for e in edges]})
        lines.append(f"x={rep.x} y={rep.y} size={len(edges)}: " + " ".join(f"{{{a},{b}}}" for a, b in edges))
    total = sum(len(o["edges"]) for o in orbits)
    lines.append(f"e(0) = {total}")
    out.emit({"spec": str(spec), "link_edges": total, "orbits": orbits}, lines)
    return 0


def cmd_nonexist(args, out: _Out) -> int:
    cert = find_certificate(args.r, args.c, planar=args.planar)
    if cert is None:
        out.emit({"certificate": None, "verified": False}, ["no certificate found"])
        return 1
    ok = verify_certificate(cert, args.r, args.c)
    out.emit({"certificate": cert.to_dict(), "verified": ok}, [cert.to_json()])
    return 0 if ok else 1


def _emit_graph(out: _Out, g: SmallGraph) -> int:
    payload = _graph_payload(g)
    out.emit(payload, [payload["graph6"], _sig_text(g)])
    return 0


def cmd_product(args, out: _Out) -> int:
    return _emit_graph(out, cartesian_product(_read_graph(args.a), _read_graph(args.b)))


def cmd_complement(args, out: _Out) -> int:
    return _emit_graph(out, complement_transform(_read_graph(args.a)))


def cmd_fact2(args, out: _Out) -> int:
    try:
        g = fact2_construct(args.r, args.c)
    except NoPartition as exc:
        out.emit({"error": "NoPartition", "message": str(exc)}, [f"NoPartition: {exc}"])
        return 1
    return _emit_graph(out, g)


def cmd_catalog(args, out: _Out) -> int:
    cat = Catalog(args.db)
    if args.action == "seed":
        seeded = seed_catalog()
        added = sum(cat.add(rec) for rec in seeded.records())
        out.emit({"added": added, "total": len(cat)}, [f"added {added} records ({len(cat)} total)"])
        return 0
    if args.action == "ingest":
        text = Path(args.file).read_text(encoding="utf-8") if args.file != "-" else sys.stdin.read()
        report = cat.ingest(text.splitlines(), source=args.source)
        for err in report.errors:
            print(err, file=sys.stderr)
        out.emit(
            asdict(report),
            [f"accepted {report.accepted}, rejected {report.rejected}, duplicates {report.duplicates}"],
        )
        return 0
    if args.action == "query":
        recs = cat.query(args.r, args.c, args.n_max, args.planar)
        out.emit(
            {"records": [asdict(rec) for rec in recs]},
            [f"{rec.n}\t({rec.r},{rec.c})\t{'planar' if rec.planar else '-'}\t{rec.g6}" for rec in recs],
        )
        return 0
    if args.action == "export":
        sys.stdout.write(cat.export(args.format))
        return 0
    return 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker processes for searches")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="rcgraphs", description="(r,c)-constant graph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="print (r,c) for each graph6 line")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common], help="(r,c)-graphs of a given order")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--planar", action="store_true")
    s.add_argument("--all", action="store_true", help="enumerate every graph rather than stopping at the first")
    s.add_argument("--limit", type=int, default=0)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("smallest", parents=[common], help="least order of an (r,c)-graph")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--n-max", type=int, default=12)
    s.add_argument("--planar", action="store_true")
    s.add_argument("--first", action="store_true", help="return the first witness instead of the least canonical one")
    s.set_defaults(func=cmd_smallest)

    s = sub.add_parser("circulant", parents=[common], help="construct an (r,c)-circulant")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.set_defaults(func=cmd_circulant)

    s = sub.add_parser("orbits", parents=[common], help="edge orbits in the link of 0 in Circ(n, S)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--s", required=True, help='jumps, e.g. "1,3,4,6"')
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("nonexist", parents=[common], help="nonexistence certificate")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--planar", action="store_true")
    s.set_defaults(func=cmd_nonexist)

    s = sub.add_parser("product", parents=[common], help="Cartesian product of two graphs")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("complement", parents=[common], help="complement of a graph")
    s.add_argument("a")
    s.set_defaults(func=cmd_complement)

    s = sub.add_parser("fact2", parents=[common], help="clique-product (r,c)-graph")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.set_defaults(func=cmd_fact2)

    s = sub.add_parser("catalog", parents=[common], help="catalog operations")
    s.add_argument("--db", default=os.environ.get("RC_CATALOG", "rc_catalog.jsonl"))
    cat = s.add_subparsers(dest="action", required=True)
    c = cat.add_parser("ingest")
    c.add_argument("file")
    c.add_argument("--source", default="")
    c = cat.add_parser("query")
    c.add_argument("--r", type=int)
    c.add_argument("--c", type=int)
    c.add_argument("--n-max", type=int)
    c.add_argument("--planar", action=argparse.BooleanOptionalAction, default=None)
    c = cat.add_parser("export")
    c.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    cat.add_parser("seed", help="add the bundled witnesses")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    out = _Out(args.json)
    try:
        return args.func(args, out)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.json:
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
