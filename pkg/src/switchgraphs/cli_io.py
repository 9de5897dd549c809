"""graph6 / edge-list serialization, reports, catalog persistence and the CLI."""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from math import comb
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .canonical import ClassKey, switch_iso_equivalent
from .classify import METHODS, Catalog, InvariantProfile, TypeRecord, build_catalog, mu
from .graph_core import MAX_VERTICES, Graph, GraphError, complement, cycle, make_graph, num_pairs, path
from .invariants import (
    UnionShape,
    count_sub,
    formula_cycle,
    formula_path,
    formula_union_k3,
    formula_union_k4,
    named_pattern,
)
from .switching import local_complement, switch_class, switch_equivalent

SCHEMA = "switchgraphs.catalog/1"
CATALOG_FORMAT_VERSION = 1


class GraphFormatError(ValueError):
    def __init__(self, message: str, offset: Optional[int] = None):
        where = f" at byte {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")
        self.offset = offset


# --------------------------------------------------------------------------
# graph6

def write_graph6(g: Graph) -> str:
    # graph6 lists x(0,1), x(0,2), x(1,2), x(0,3), ... which is our bit order
    m = num_pairs(g.n)
    out = [chr(g.n + 63)]
    for start in range(0, m, 6):
        chunk = 0
        for k in range(6):
            chunk = (chunk << 1) | (g.edges >> (start + k) & 1 if start + k < m else 0)
        out.append(chr(chunk + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise GraphFormatError("empty graph6 string", 0)
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ch!r} outside the graph6 range 63..126", pos)
    if text[0] == "~":
        raise GraphFormatError(f"extended size header means n > 62; only n <= {MAX_VERTICES} is supported", 0)
    n = ord(text[0]) - 63
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph has {n} vertices, limit is {MAX_VERTICES}", 0)
    m = num_pairs(n)
    expected = 1 + (m + 5) // 6
    if len(text) != expected:
        raise GraphFormatError(f"expected {expected} bytes for n={n}, got {len(text)}", min(len(text), expected))
    bits = 0
    for k in range(m):
        byte = ord(text[1 + k // 6]) - 63
        if byte >> (5 - k % 6) & 1:
            bits |= 1 << k
    padding = ord(text[-1]) - 63 if m % 6 else 0
    if padding & ((1 << (6 - m % 6)) - 1):
        raise GraphFormatError("non-zero padding bits", len(text) - 1)
    return Graph(n, bits)


# --------------------------------------------------------------------------
# edge lists

def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"] + [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphFormatError("edge list must start with an 'n m' header")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return make_graph(n, edges)


def read_graph(text: str) -> Graph:
    """Parse the first graph in ``text``: graph6 line or ``n m`` edge list."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("no graph in input")
    if len(lines[0].split()) == 2:
        return parse_edge_list(text)
    return parse_graph6(lines[0])


# --------------------------------------------------------------------------
# reports and catalog persistence

def _record_row(rec: TypeRecord) -> dict:
    return {
        "label": rec.label,
        "name": rec.name,
        "graph6": write_graph6(rec.representative),
        "key": rec.key.bits,
        "profile": rec.profile.as_dict(),
        "aliases": list(rec.aliases),
    }


def catalog_to_json(cat: Catalog) -> dict:
    return {"schema": SCHEMA, "n": cat.n, "mu": len(cat), "types": [_record_row(t) for t in cat.types]}


def catalog_from_json(data: dict) -> Catalog:
    if data.get("schema") != SCHEMA:
        raise GraphFormatError(f"unsupported catalog schema {data.get('schema')!r}")
    n = data["n"]
    records = []
    for row in data["types"]:
        rep = parse_graph6(row["graph6"])
        if rep.n != n or rep.edges != row["key"]:
            raise GraphFormatError(f"catalog row {row['name']!r} does not match its key")
        records.append(TypeRecord(ClassKey(n, row["key"]), rep, row["name"],
                                  InvariantProfile(**row["profile"]), row["label"], tuple(row["aliases"])))
    return Catalog(n, tuple(records))


def catalog_cache_path(cache_dir, n: int) -> Path:
    return Path(cache_dir) / f"catalog-n{n}-v{CATALOG_FORMAT_VERSION}.json"


def save_catalog(cat: Catalog, target: Path) -> None:
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(json.dumps(catalog_to_json(cat), indent=1) + "\n")


def load_catalog(source: Path) -> Catalog:
    return catalog_from_json(json.loads(Path(source).read_text()))


_COLUMNS = ("label", "name", "graph6", "k3", "n3", "k4", "n4", "l4", "aliases")


def _flat_rows(cat: Catalog) -> list[list[str]]:
    rows = []
    for rec in cat.types:
        p = rec.profile
        rows.append([rec.label or "-", rec.name, write_graph6(rec.representative),
                     *(str(x) for x in (p.k3, p.n3, p.k4, p.n4, p.l4)), ", ".join(rec.aliases)])
    return rows


def render_report(cat: Catalog, fmt: str = "table") -> str:
    if fmt == "json":
        return json.dumps(catalog_to_json(cat), indent=1) + "\n"
    rows = _flat_rows(cat)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_COLUMNS)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt != "table":
        raise ValueError(f"unknown report format {fmt!r}")
    widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(_COLUMNS)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(_COLUMNS, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.append(f"mu({cat.n}) = {len(cat)}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# closed-form checks against brute force

def random_shapes(count: int, max_total: int = 10, seed: int = 0) -> list[UnionShape]:
    rng = random.Random(seed)
    shapes = []
    while len(shapes) < count:
        total = rng.randint(5, max_total)
        free, ps, cs = total, [], []
        while free >= 2 and rng.random() < 0.8:
            if free >= 4 and rng.random() < 0.4:
                size = rng.randint(4, free)
                cs.append(size)
            else:
                size = rng.randint(2, free)
                ps.append(size)
            free -= size
        if ps or cs:
            shapes.append(UnionShape(tuple(ps), tuple(cs), total))
    return shapes


def formula_checks(max_n: int = 10, shapes: int = 50, seed: int = 0) -> list[tuple[str, bool, str]]:
    """(check name, passed, detail) for every closed form against brute-force counts."""
    results = []
    for fam, build, formula, lo in (("path", path, formula_path, 2), ("cycle", cycle, formula_cycle, 4)):
        for pat in ("K3", "K4", "K5", "N3", "N4", "N5"):
            pattern = named_pattern(pat)
            bad = []
            for n in range(max(lo, pattern.k + 1), max_n + 1):
                got, want = formula(n, pat), count_sub(build(n), pattern)
                if got != want:
                    bad.append(f"n={n}: formula {got} != brute {want}")
            results.append((f"{fam}:{pat}", not bad, "; ".join(bad) or f"n <= {max_n}"))
    k3, k4 = named_pattern("K3"), named_pattern("K4")
    for name, formula, pattern in (("union:K3", formula_union_k3, k3), ("union:K4", formula_union_k4, k4)):
        bad = []
        for shape in random_shapes(shapes, max_n, seed):
            g = shape.realize()
            got, want = formula(shape), count_sub(g, pattern)
            if got != want:
                bad.append(f"{shape}: formula {got} != brute {want}")
        results.append((name, not bad, "; ".join(bad) or f"{shapes} shapes"))
    return results


# --------------------------------------------------------------------------
# command line

class _UsageError(Exception):
    pass


def _load_graph_arg(arg: str) -> Graph:
    if arg == "-":
        return read_graph(sys.stdin.read())
    p = Path(arg)
    if p.exists():
        return read_graph(p.read_text())
    return read_graph(arg)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_classify(args) -> int:
    cat = build_catalog(args.n, args.method, args.cache_dir)
    fmt = args.format if args.format in ("table", "json", "csv") else "table"
    sys.stdout.write(render_report(cat, fmt))
    return 0


def _cmd_equiv(args) -> int:
    g1, g2 = _load_graph_arg(args.graph1), _load_graph_arg(args.graph2)
    if g1.n != g2.n:
        raise _UsageError(f"graphs have different orders ({g1.n} vs {g2.n})")
    witness = None
    if args.relation == "switch":
        side = switch_equivalent(g1, g2)
        ok = side is not None
        witness = [v for v in range(g1.n) if side is not None and side >> v & 1]
    elif args.relation == "switch-iso":
        ok = switch_iso_equivalent(g1, g2)
    else:
        ok = (switch_equivalent(g1, g2) is not None
              or switch_equivalent(g1, complement(g2)) is not None)
    text = "equivalent" if ok else "not equivalent"
    if witness is not None and ok:
        text += f" (switch at {witness})"
    _emit(args, {"relation": args.relation, "equivalent": ok, "witness": witness if ok else None}, text)
    return 0 if ok else 1


def _cmd_class(args) -> int:
    g = _load_graph_arg(args.graph)
    members = [write_graph6(h) for h in switch_class(g)]
    _emit(args, {"n": g.n, "size": len(members), "members": members}, "\n".join(members))
    return 0


def _cmd_lc(args) -> int:
    g = _load_graph_arg(args.graph)
    for a in args.vertex:
        if not 0 <= a < g.n:
            raise _UsageError(f"vertex {a} out of range for n={g.n}")
        g = local_complement(g, a)
    _emit(args, {"graph6": write_graph6(g)}, write_graph6(g))
    return 0


def _cmd_mu(args) -> int:
    values = {n: mu(n, args.method) for n in range(1, args.max_n + 1)}
    _emit(args, {"mu": {str(k): v for k, v in values.items()}},
          "\n".join(f"{n} {v}" for n, v in values.items()))
    return 0


def _cmd_count_sub(args) -> int:
    g = _load_graph_arg(args.graph)
    pattern = named_pattern(args.pattern)
    value = count_sub(g, pattern)
    _emit(args, {"pattern": args.pattern, "count": value, "subsets": comb(g.n, pattern.k)}, str(value))
    return 0


def _cmd_verify(args) -> int:
    results = formula_checks(args.max_n, args.shapes, args.seed)
    if args.format == "json":
        print(json.dumps([{"check": c, "passed": ok, "detail": d} for c, ok, d in results]))
    else:
        for check, ok, detail in results:
            print(f"{'PASS' if ok else 'FAIL'} {check}: {detail}")
    return 0 if all(ok for _, ok, _ in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "text", "json", "csv"), default="table",
                        help="output format; json also makes errors machine-readable")
    parser = argparse.ArgumentParser(prog="switchgraphs", description="Switching classes of small graphs.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="list the switch-iso types on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="inductive")
    p.add_argument("--cache-dir", type=Path, default=None)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("equiv", parents=[common], help="test two graphs for equivalence")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.add_argument("--relation", choices=("switch", "switch-iso", "extended"), default="switch-iso")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("class", parents=[common], help="list the switching class of a graph")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("lc", parents=[common], help="apply local complementations")
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, nargs="+", required=True)
    p.set_defaults(func=_cmd_lc)

    p = sub.add_parser("mu", parents=[common], help="number of switch-iso types for n = 1..max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="inductive")
    p.set_defaults(func=_cmd_mu)

    p = sub.add_parser("count-sub", parents=[common], help="count induced subgraphs in a pattern class")
    p.add_argument("graph")
    p.add_argument("--pattern", required=True, help="K<m>, N<m>, L<m> or C<m>")
    p.set_defaults(func=_cmd_count_sub)

    p = sub.add_parser("verify-formulas", parents=[common], help="check closed forms against brute force")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--shapes", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)
    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (_UsageError, GraphError, ValueError, LookupError, OSError) as exc:
        if args.format == "json":
            print(json.dumps({"error": str(exc), "kind": type(exc).__name__}), file=sys.stderr)
        else:
            print(f"switchgraphs {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
